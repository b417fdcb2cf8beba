//! Standalone checkers for serialized certificates and command reports.
//!
//! Works from the JSON alone plus the lattice functionals of the norm, with
//! its own parsing and arithmetic, so a bug in the assembler cannot vouch
//! for itself. The norm claim is checked through a supporting functional:
//! `ψ/λ` is at most 1 on every `±u_j` and equals 1 at the target.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

type R = BigRational;

#[derive(Clone, Debug, Default)]
pub struct Verdict {
    pub failures: Vec<String>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn require(&mut self, cond: bool, what: &str) {
        if !cond {
            self.failures.push(what.to_string());
        }
    }
}

fn int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn rat(v: &Value) -> Option<R> {
    match v.as_array()?.as_slice() {
        [n, d] => {
            let d = int(d)?;
            (!d.is_zero()).then(|| R::new(int(n).unwrap_or_default(), d))
        }
        _ => None,
    }
}

fn vec_of(v: &Value) -> Option<Vec<R>> {
    v.as_array()?.iter().map(rat).collect()
}

fn dot(a: &[R], b: &[R]) -> R {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn lin(acc: &mut [R], c: &R, v: &[R]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

struct Parsed {
    psi: Vec<R>,
    vertices: Vec<Vec<R>>,
    v0: Vec<R>,
    d: BigInt,
    mu: Vec<R>,
    big_d: BigInt,
    counts: Vec<BigInt>,
    w: Vec<R>,
    pushforward: Vec<R>,
    vertex_axiom: bool,
}

fn parse(c: &Value) -> Option<Parsed> {
    Some(Parsed {
        psi: c["psi"].as_array()?.iter().map(|x| int(x).map(R::from_integer)).collect::<Option<_>>()?,
        vertices: c["face"]["vertices"].as_array()?.iter().map(vec_of).collect::<Option<_>>()?,
        v0: vec_of(&c["v0"]["point"])?,
        d: int(&c["v0"]["cover_degree"])?,
        mu: c["mu"].as_array()?.iter().map(rat).collect::<Option<_>>()?,
        big_d: int(&c["D"])?,
        counts: c["block_counts"].as_array()?.iter().map(int).collect::<Option<_>>()?,
        w: vec_of(&c["target_w"])?,
        pushforward: vec_of(&c["pushforward"])?,
        vertex_axiom: c["vertex_axiom"].as_bool()?,
    })
}

/// Rechecks a certificate against the norm functionals `u_j`.
pub fn verify_certificate(cert: &Value, functionals: &[Vec<i64>]) -> Verdict {
    let mut v = Verdict::default();
    let Some(c) = parse(cert) else {
        v.failures.push("certificate is malformed".into());
        return v;
    };
    let b = c.w.len();
    let dims_ok = c.psi.len() == b
        && c.v0.len() == b
        && c.pushforward.len() == b
        && c.vertices.iter().all(|x| x.len() == b)
        && functionals.iter().all(|u| u.len() == b);
    if !dims_ok {
        v.failures.push("dimension mismatch".into());
        return v;
    }
    let us: Vec<Vec<R>> = functionals
        .iter()
        .map(|u| u.iter().map(|&x| R::from_integer(x.into())).collect())
        .collect();

    // Weights.
    v.require(c.mu.iter().all(|m| !m.is_negative()), "negative weight");
    v.require(c.mu.first().is_some_and(|m| m.is_positive()), "base weight is not positive");
    v.require(c.mu.iter().sum::<R>().is_one(), "weights do not sum to 1");
    let points: Vec<&Vec<R>> = if c.vertex_axiom {
        v.require(c.mu.len() == 1, "vertex certificate with extra weights");
        vec![&c.v0]
    } else {
        v.require(c.mu.len() == c.vertices.len() + 1, "weight count differs from face size");
        std::iter::once(&c.v0).chain(&c.vertices).collect()
    };
    let mut combo = vec![R::zero(); b];
    for (m, p) in c.mu.iter().zip(&points) {
        lin(&mut combo, m, p);
    }
    v.require(combo == c.w, "weights do not reproduce the target");

    // Face vertices are vertices of B* = conv{±u_j}.
    let is_pm_u = |x: &Vec<R>| us.iter().any(|u| u == x || u.iter().zip(x).all(|(a, y)| *a == -y));
    let face: Vec<&Vec<R>> = if c.vertex_axiom { vec![&c.w] } else { c.vertices.iter().collect() };
    v.require(face.iter().all(|x| is_pm_u(x)), "face vertex is not a dual-ball vertex");

    // Divisibility and block counts.
    v.require(c.d.is_positive() && c.big_d.is_positive(), "nonpositive degree");
    v.require(c.counts.len() == c.mu.len(), "block count length");
    if c.d.is_positive() && c.counts.len() == c.mu.len() {
        let scale = R::new(c.big_d.clone(), c.d.clone());
        let exact = c.mu.iter().zip(&c.counts).all(|(m, k)| m * &scale == R::from_integer(k.clone()));
        v.require(exact, "block counts differ from mu_i D / d");
    }
    v.require(c.counts.first().is_some_and(|k| k.is_positive()), "no base block");

    // Pushforward: Σ m_i (d v_i) = D w.
    let dq = R::from_integer(c.d.clone());
    let mut push = vec![R::zero(); b];
    for (k, p) in c.counts.iter().zip(&points) {
        lin(&mut push, &(R::from_integer(k.clone()) * &dq), p);
    }
    let target: Vec<R> = c.w.iter().map(|x| x * R::from_integer(c.big_d.clone())).collect();
    v.require(push == target, "pushforward differs from D w");
    v.require(push == c.pushforward, "reported pushforward is wrong");

    // Supporting functional ψ / λ.
    let lambda = dot(&c.psi, face[0]);
    v.require(lambda.is_positive(), "psi is not positive on the face");
    v.require(face.iter().all(|x| dot(&c.psi, x) == lambda), "psi is not constant on the face");
    v.require(us.iter().all(|u| dot(&c.psi, u).abs() <= lambda), "psi exceeds its face value on the ball");
    v.require(dot(&c.psi, &c.v0) == lambda, "base point is off the face");
    v.require(dot(&c.psi, &c.w) == lambda, "target is off the supporting hyperplane");

    // Plan consistency.
    if let Some(blocks) = cert["plan"]["blocks"].as_array() {
        let count = |s: &str| BigInt::from(blocks.iter().filter(|x| x.as_str() == Some(s)).count());
        v.require(Some(&count("B0")) == c.counts.first(), "plan base count");
        for (i, k) in c.counts.iter().enumerate().skip(1) {
            v.require(count(&format!("X{i}")) == *k, "plan special count");
        }
    } else {
        v.failures.push("missing plan".into());
    }
    if let (Some(m), Some(bound)) = (cert["m_star"].as_u64(), cert["search_bound"].as_u64()) {
        v.require(m >= 1 && m <= bound, "stabilization degree outside search range");
    }
    v
}

fn poly_ok(p: &Value) -> Option<(usize, Vec<(Vec<i64>, BigInt)>)> {
    let rank = p["rank"].as_u64()? as usize;
    p["rendered"].as_str()?;
    let terms = p["terms"]
        .as_array()?
        .iter()
        .map(|t| {
            let exp: Vec<i64> = t["exp"].as_array()?.iter().map(Value::as_i64).collect::<Option<_>>()?;
            let c = int(&t["coeff"])?;
            (exp.len() == rank && !c.is_zero()).then_some((exp, c))
        })
        .collect::<Option<Vec<_>>>()?;
    Some((rank, terms))
}

fn univariate_span(terms: &[(Vec<i64>, BigInt)]) -> i64 {
    let es = terms.iter().map(|(e, _)| e[0]);
    es.clone().max().unwrap_or(0) - es.min().unwrap_or(0)
}

/// Structural and arithmetic recheck of a command report envelope. For
/// `certify` reports the embedded certificate goes through
/// [`verify_certificate`] against the functionals it carries.
pub fn verify_report(report: &Value) -> Verdict {
    let mut v = Verdict::default();
    v.require(report["tool"].as_str().is_some(), "missing tool name");
    v.require(report["version"].as_str().is_some(), "missing version");
    let argv: Option<Vec<&str>> = report["command"].as_array().and_then(|a| a.iter().map(Value::as_str).collect());
    let Some(argv) = argv else {
        v.failures.push("missing command echo".into());
        return v;
    };
    let digests_ok = report["inputs"]
        .as_object()
        .is_some_and(|m| m.values().all(|d| d.as_str().is_some_and(|s| s.len() == 64 && s.bytes().all(|b| b.is_ascii_hexdigit()))));
    v.require(digests_ok, "malformed input digests");
    let status = report["status"].as_str().unwrap_or("");
    v.require(matches!(status, "ok" | "error" | "inconclusive"), "unknown status");
    let p = &report["payload"];
    if status == "error" && p.get("error").is_some() {
        v.require(p["error"].is_string(), "error payload is not a message");
        return v;
    }
    match argv.first().copied().unwrap_or("") {
        "alexander" => {
            v.require(p["b1"].as_u64().is_some(), "missing b1");
            v.require(p["torsion"].as_array().is_some_and(|t| t.iter().all(|x| int(x).is_some_and(|n| n > BigInt::one()))), "bad torsion");
            v.require(poly_ok(&p["delta_sharp"]).is_some(), "bad delta_sharp");
            for c in p["classes"].as_array().map(Vec::as_slice).unwrap_or_default() {
                match poly_ok(&c["delta_psi"]) {
                    Some((1, terms)) => {
                        v.require(c["nonvanishing"].as_bool() == Some(!terms.is_empty()), "nonvanishing flag disagrees");
                        if !terms.is_empty() {
                            v.require(c["degree"].as_i64() == Some(univariate_span(&terms)), "degree disagrees with terms");
                        }
                    }
                    _ => v.failures.push("bad delta_psi".into()),
                }
            }
        }
        "covers" => {
            let bound = p["betti_bound"].as_u64();
            for r in p["covers"].as_array().map(Vec::as_slice).unwrap_or_default() {
                let b1 = r["b1"].as_u64();
                v.require(b1.is_some(), "cover row without b1");
                if let (Some(b1), Some(bound)) = (b1, bound) {
                    v.require(r["within_bound"].as_bool() == Some(b1 <= bound), "bound flag disagrees");
                    v.require(status != "ok" || b1 <= bound, "ok status with bound violated");
                }
            }
        }
        "normball" => {
            let checks = p["lower_bound"]["checks"].as_array().map(Vec::as_slice).unwrap_or_default();
            let mut all = true;
            for c in checks {
                match (rat(&c["lhs"]), rat(&c["rhs"])) {
                    (Some(l), Some(r)) => {
                        v.require(c["holds"].as_bool() == Some(l <= r), "bound check flag disagrees");
                        all &= l <= r;
                    }
                    _ => v.failures.push("bad bound check".into()),
                }
            }
            v.require(p["lower_bound"]["holds"].as_bool() == Some(all), "overall bound flag disagrees");
        }
        "certify" => {
            let funcs: Option<Vec<Vec<i64>>> = p["functionals"]
                .as_array()
                .and_then(|a| a.iter().map(|u| u.as_array()?.iter().map(Value::as_i64).collect()).collect());
            match funcs {
                Some(f) => v.failures.extend(verify_certificate(p, &f).failures),
                None => v.failures.push("certificate without functionals".into()),
            }
            v.require(p["pushforward_check"].as_bool() == Some(true) || status != "ok", "ok status with failed pushforward");
            v.require(p["norm_check"].as_bool() == Some(true) || status != "ok", "ok status with failed norm check");
        }
        "scan" => {
            let b = p["b1"].as_u64().unwrap_or(0) as usize;
            let rows = p["vanishing"].as_array().map(Vec::as_slice).unwrap_or_default();
            v.require(rows.iter().all(|r| r.as_array().is_some_and(|a| a.len() == b)), "scan row of wrong length");
        }
        "examples" => match argv.get(1).copied() {
            Some("gen") => v.require(p["fixture"].as_str().is_some(), "missing fixture text"),
            Some("verify-surgery") => {
                let fills = p["fills"].as_array().map(Vec::as_slice).unwrap_or_default();
                let all = fills.iter().all(|f| f["holds"].as_bool() == Some(true));
                for f in fills {
                    let content = int(&f["content"]);
                    let scaled = poly_ok(&f["delta_psi"]).zip(poly_ok(&p["base_delta"]));
                    if let (Some(k), Some(((_, a), (_, b))), true) = (f["p"].as_i64(), scaled, f["holds"].as_bool() == Some(true)) {
                        let expect: Vec<BigInt> = b.iter().map(|(_, c)| c * k).collect();
                        let got: Vec<BigInt> = a.iter().map(|(_, c)| c.clone()).collect();
                        v.require(expect == got || expect.iter().map(|c| -c).collect::<Vec<_>>() == got, "scaled coefficients disagree");
                        v.require(content.is_some_and(|c| c == BigInt::from(k.abs()) * b.iter().fold(BigInt::zero(), |g, (_, c)| num_integer::Integer::gcd(&g, c))), "content disagrees");
                    }
                }
                v.require(!(status == "ok" && !all), "ok status with a failed fill");
            }
            _ => v.failures.push("unknown examples subcommand".into()),
        },
        other => v.failures.push(format!("unknown command `{other}`")),
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn edge() -> Value {
        json!({
            "psi": [1, 1],
            "face": {"dim": 1, "vertices": [[[2,1],[0,1]], [[0,1],[2,1]]]},
            "v0": {"point": [[1,1],[1,1]], "cover_degree": 2, "provenance": "fixture"},
            "vertex_axiom": false,
            "mu": [[1,2],[1,2],[0,1]],
            "D": 4,
            "block_counts": [1, 1, 0],
            "plan": {"blocks": ["B0", "X1"]},
            "target_w": [[3,2],[1,2]],
            "pushforward": [[6,1],[2,1]],
        })
    }

    #[test]
    fn accepts_valid() {
        let v = verify_certificate(&edge(), &[vec![2, 0], vec![0, 2]]);
        assert!(v.ok(), "{:?}", v.failures);
    }

    #[test]
    fn rejects_tampering() {
        let funcs = [vec![2, 0], vec![0, 2]];
        let mut c = edge();
        c["D"] = json!(2);
        assert!(!verify_certificate(&c, &funcs).ok());
        let mut c = edge();
        c["target_w"] = json!([[1, 1], [1, 1]]);
        assert!(!verify_certificate(&c, &funcs).ok());
        assert!(!verify_certificate(&edge(), &[vec![2, 0], vec![0, 4]]).ok());
        assert!(!verify_certificate(&json!({}), &funcs).ok());
    }
}
