use std::fmt::Write as _;

use alexcert::alexander::{self, AlexanderReport};
use alexcert::families::{self, CheckStatus};
use alexcert::fixture::{parse_fixture, Fixture};
use alexcert::medley::{self, BaseDatum};
use alexcert::polytope::{alexander_norm_ball, default_sample_grid, thurston_lower_bound_check};
use alexcert::rational::parse_rational_csv;
use alexcert::verify::verify_certificate;
use alexcert::{cover, parse_presentation, Covector, Error, Presentation};
use serde_json::{json, Value};

use crate::envelope::{envelope, render_json, Inputs, Outcome, Status};
use crate::{
    AlexanderArgs, CertifyArgs, Command, CoversArgs, ExamplesCommand, GenArgs, NormballArgs, ScanArgs, SurgeryArgs,
};

struct Report {
    status: Status,
    payload: Value,
    text: String,
}

type CmdResult = Result<Report, String>;

fn domain(e: Error) -> String {
    e.to_string()
}

/// Presentation files, or fixtures with their annotations ignored.
fn load_presentation(inputs: &mut Inputs, path: &str) -> Result<Presentation, String> {
    let text = inputs.read(path)?;
    match parse_presentation(&text) {
        Err(Error::Parse { .. }) => parse_fixture(&text).map(|f| f.presentation),
        other => other,
    }
    .map_err(|e| format!("{path}: {e}"))
}

fn load_fixture(inputs: &mut Inputs, path: &str) -> Result<Fixture, String> {
    parse_fixture(&inputs.read(path)?).map_err(|e| format!("{path}: {e}"))
}

pub fn run(command: Command, argv: &[String]) -> Outcome {
    let mut inputs = Inputs::default();
    let (json_out, result) = match command {
        Command::Alexander(a) => (a.out.json, alexander_cmd(&a, &mut inputs)),
        Command::Covers(a) => (a.out.json, covers_cmd(&a, &mut inputs)),
        Command::Normball(a) => (a.out.json, normball_cmd(&a, &mut inputs)),
        Command::Certify(a) => (a.out.json, certify_cmd(&a, &mut inputs)),
        Command::Examples { command: ExamplesCommand::Gen(a) } => (a.out.json, gen_cmd(&a)),
        Command::Examples { command: ExamplesCommand::VerifySurgery(a) } => (a.out.json, surgery_cmd(&a, &mut inputs)),
        Command::Scan(a) => (a.out.json, scan_cmd(&a, &mut inputs)),
    };
    match result {
        Ok(r) => Outcome {
            status: r.status,
            text: if json_out {
                render_json(&envelope(argv, &inputs, r.status, r.payload))
            } else {
                r.text
            },
            message: None,
        },
        Err(msg) => Outcome {
            status: Status::Error,
            text: if json_out {
                render_json(&envelope(argv, &inputs, Status::Error, json!({ "error": msg })))
            } else {
                String::new()
            },
            message: Some(msg),
        },
    }
}

fn alexander_cmd(a: &AlexanderArgs, inputs: &mut Inputs) -> CmdResult {
    let p = load_presentation(inputs, &a.pres)?;
    let b = p.homology().b;
    let mut classes: Vec<Covector> = a.psi.iter().map(|c| Covector::from_ints(&c.0)).collect();
    if let Some(r) = a.scan {
        if r < 1 {
            return Err(domain(Error::OutOfRange("scan radius must be at least 1".into())));
        }
        classes.extend(alexander::primitive_classes_in_box(b, r).iter().map(|v| Covector::from_ints(v)));
    }
    if classes.is_empty() && b == 1 {
        classes.push(Covector::from_ints(&[1]));
    }
    let report = AlexanderReport::new(&p, &classes).map_err(domain)?;
    let mut text = String::new();
    let _ = writeln!(text, "b1 = {}", report.b1);
    let torsion: Vec<String> = report.torsion.iter().map(|t| t.to_string()).collect();
    let _ = writeln!(text, "torsion = [{}]", torsion.join(", "));
    let _ = writeln!(text, "delta_sharp = {}", report.delta_sharp);
    for c in &report.classes {
        let psi: Vec<String> = c.psi.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(text, "psi = ({}): delta = {}, degree {}", psi.join(","), c.delta_psi, c.degree);
    }
    Ok(Report {
        status: Status::Ok,
        payload: report.to_json(),
        text,
    })
}

fn covers_cmd(a: &CoversArgs, inputs: &mut Inputs) -> CmdResult {
    let p = load_presentation(inputs, &a.pres)?;
    let psi = Covector::from_ints(&a.psi.0);
    if a.max_m == 0 {
        return Err(domain(Error::BadCoverDegree));
    }
    let delta = alexander::alexander_poly_psi(&p, &psi).map_err(domain)?;
    let bound = alexander::betti_bound(&p, &psi).ok();
    let mut rows = Vec::new();
    let mut text = String::new();
    let _ = writeln!(text, "delta_psi = {delta}");
    if let Some(b) = bound {
        let _ = writeln!(text, "betti bound = {b}");
    }
    for m in 1..=a.max_m {
        let c = cover::cyclic_cover(&p, &psi, m).map_err(domain)?;
        let h = c.presentation.homology();
        let torsion: Vec<String> = h.torsion.iter().map(|t| t.to_string()).collect();
        let _ = writeln!(text, "m = {m}: b1 = {}, torsion = [{}]", h.b, torsion.join(", "));
        rows.push(json!({
            "m": m,
            "b1": h.b,
            "torsion": h.torsion.iter().map(alexcert::rational::int_json).collect::<Vec<_>>(),
            "generators": c.presentation.num_generators(),
            "relators": c.presentation.relators().len(),
            "euler_characteristic": c.euler_characteristic(),
            "within_bound": bound.map(|b| h.b <= b),
        }));
    }
    let ok = rows.iter().all(|r| r["within_bound"].as_bool() != Some(false));
    Ok(Report {
        status: if ok { Status::Ok } else { Status::Error },
        payload: json!({
            "psi": psi.primitive_entries().map_err(domain)?,
            "delta_psi": delta.poly().to_json(),
            "betti_bound": bound,
            "covers": rows,
        }),
        text,
    })
}

fn normball_cmd(a: &NormballArgs, inputs: &mut Inputs) -> CmdResult {
    let f = load_fixture(inputs, &a.fixture)?;
    let ball = f.ball.as_ref().ok_or_else(|| domain(Error::MissingBall))?;
    let b = f.presentation.homology().b;
    if ball.rank != b {
        return Err(domain(Error::RankMismatch {
            left: b,
            right: ball.rank,
        }));
    }
    let sharp = alexander::multivariable_alexander(&f.presentation).map_err(domain)?;
    let alexander_ball = if sharp.is_zero() {
        Value::Null
    } else {
        alexander_norm_ball(sharp.poly()).map_err(domain)?.to_json()
    };
    let grid = default_sample_grid(b, a.samples);
    let check = thurston_lower_bound_check(sharp.poly(), ball, b, &grid).map_err(domain)?;
    let text = format!(
        "b1 = {b}\ndual ball vertices = {}\ndelta_sharp = {sharp}\nlower bound holds at {} classes: {}\nequality attained: {}\n",
        ball.dual_ball.vertices.len(),
        check.checks.len(),
        check.holds,
        check.equality_attained,
    );
    Ok(Report {
        status: if check.holds { Status::Ok } else { Status::Error },
        payload: json!({
            "b1": b,
            "ball": ball.to_json(),
            "delta_sharp": sharp.poly().to_json(),
            "alexander_ball": alexander_ball,
            "lower_bound": check.to_json(),
        }),
        text,
    })
}

fn parse_v0(s: &str) -> Result<BaseDatum, String> {
    let (point, d) = match s.split_once('@') {
        Some((p, d)) => (p, d.trim().parse::<u64>().map_err(|_| format!("bad cover degree in `{s}`"))?),
        None => (s, 1),
    };
    let point = parse_rational_csv(point).ok_or_else(|| format!("bad rational vector `{point}`"))?;
    Ok(BaseDatum { point, cover_degree: d })
}

fn certify_cmd(a: &CertifyArgs, inputs: &mut Inputs) -> CmdResult {
    let f = load_fixture(inputs, &a.fixture)?;
    let w = parse_rational_csv(&a.w).ok_or_else(|| format!("bad rational vector `{}`", a.w))?;
    let psi = Covector::from_ints(&a.psi.0);
    let base = match &a.v0 {
        Some(s) => Some(parse_v0(s)?),
        None => f.base.clone(),
    };
    let cert = medley::certify_virtual_realization(&f, &w, &psi, base.as_ref()).map_err(domain)?;
    let functionals = &f.ball.as_ref().expect("certified fixtures carry a ball").functionals;
    let mut payload = cert.to_json();
    let verdict = verify_certificate(&payload, functionals);
    payload["functionals"] = json!(functionals);
    payload["verifier"] = json!({ "ok": verdict.ok(), "failures": verdict.failures });
    let ok = cert.pushforward_check && cert.norm_check && verdict.ok();
    let mu: Vec<String> = cert.mu.iter().map(|m| m.to_string()).collect();
    let counts: Vec<String> = cert.block_counts.iter().map(|m| m.to_string()).collect();
    let mut text = String::new();
    if cert.vertex_axiom {
        let _ = writeln!(text, "vertex target: realized directly (no cover needed)");
    }
    if let Some(st) = &cert.stabilization {
        let _ = writeln!(text, "m* = {} (b1 = {}, searched m <= {})", st.m_star, st.b_max, st.search_bound);
    }
    let _ = writeln!(text, "face dimension = {}", cert.face_dim);
    let _ = writeln!(text, "mu = ({})", mu.join(", "));
    let _ = writeln!(text, "D = {}, block counts = ({})", cert.total_degree, counts.join(", "));
    let _ = writeln!(text, "pushforward check: {}, norm check: {}, verifier: {}", cert.pushforward_check, cert.norm_check, verdict.ok());
    Ok(Report {
        status: if ok { Status::Ok } else { Status::Error },
        payload,
        text,
    })
}

fn gen_cmd(a: &GenArgs) -> CmdResult {
    let mut extra = String::new();
    let p = match a.family.as_str() {
        "circle-bundle" => families::circle_bundle_presentation(a.e),
        "three-torus" => families::three_torus_presentation(),
        "surface-times-circle" => families::surface_times_circle(a.g).map_err(domain)?,
        "mapping-torus" => {
            let p = families::mapping_torus_presentation(a.g, a.s).map_err(domain)?;
            let b = p.homology().b;
            let mut u = vec![0i64; b];
            u[b - 1] = 2 * a.g as i64 - 2;
            let row: Vec<String> = u.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(extra, "ball: {}", row.join(" "));
            p
        }
        "trefoil" | "free-product" => {
            let (p, mu, lambda) = if a.family == "trefoil" {
                families::trefoil_complement()
            } else {
                families::free_product_fixture()
            };
            let _ = writeln!(extra, "meridian: {}", mu.render(p.generators()));
            let _ = writeln!(extra, "longitude: {}", lambda.render(p.generators()));
            if a.family == "free-product" {
                let _ = writeln!(extra, "flags: trnh");
            }
            p
        }
        other => return Err(format!("unknown family `{other}`")),
    };
    let text = format!("{p}{extra}");
    Ok(Report {
        status: Status::Ok,
        payload: json!({
            "family": a.family,
            "params": { "e": a.e, "g": a.g, "s": a.s },
            "b1": p.homology().b,
            "fixture": text,
        }),
        text,
    })
}

fn surgery_cmd(a: &SurgeryArgs, inputs: &mut Inputs) -> CmdResult {
    let f = load_fixture(inputs, &a.fixture)?;
    let (Some(mu), Some(lambda)) = (&f.meridian, &f.longitude) else {
        return Err(domain(Error::MissingPeripheral));
    };
    let psi = Covector::from_ints(&a.psi.0);
    let report = families::verify_surgery_scaling(&f.presentation, mu, lambda, &a.fills, &psi, f.has_flag("trnh"))
        .map_err(domain)?;
    let mut text = format!("base delta = {}\n", report.base_delta);
    for c in &report.fills {
        let _ = writeln!(text, "{}/{}: delta = {}, content {}, holds: {}", c.p, c.q, c.delta, c.content, c.holds);
    }
    let _ = writeln!(text, "status: {}", report.status.as_str());
    Ok(Report {
        status: match report.status {
            CheckStatus::Ok => Status::Ok,
            CheckStatus::Failed => Status::Error,
            CheckStatus::Inconclusive => Status::Inconclusive,
        },
        payload: report.to_json(),
        text,
    })
}

fn scan_cmd(a: &ScanArgs, inputs: &mut Inputs) -> CmdResult {
    let p = load_presentation(inputs, &a.pres)?;
    let b = p.homology().b;
    let checked = alexander::primitive_classes_in_box(b, a.scan.max(1)).len();
    let vanishing = alexander::scan_vanishing_classes(&p, a.scan).map_err(domain)?;
    let rows: Vec<Value> = vanishing
        .iter()
        .map(|c| json!(c.to_i64()))
        .collect();
    let mut text = format!("b1 = {b}, {checked} primitive classes checked, {} vanishing\n", vanishing.len());
    for c in &vanishing {
        let v: Vec<String> = c.0.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(text, "({})", v.join(","));
    }
    Ok(Report {
        status: Status::Ok,
        payload: json!({ "b1": b, "radius": a.scan, "checked": checked, "vanishing": rows }),
        text,
    })
}
