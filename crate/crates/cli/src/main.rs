mod commands;
mod envelope;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::envelope::Status;

#[derive(Parser, Debug)]
#[command(name = "alexcert", version, about = "Alexander-polynomial invariants, cyclic covers, norm balls and realization certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Δ^# and Δ^ψ of a presentation.
    Alexander(AlexanderArgs),
    /// First Betti numbers and torsion of cyclic covers dual to ψ.
    Covers(CoversArgs),
    /// Thurston and Alexander norm balls of a fixture, with the lower-bound check.
    Normball(NormballArgs),
    /// Realization certificate for a class on the boundary of the dual ball.
    Certify(CertifyArgs),
    /// Example families and surgery checks.
    Examples {
        #[command(subcommand)]
        command: ExamplesCommand,
    },
    /// Primitive classes with vanishing Δ^ψ inside a box.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Emit a JSON report envelope.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct AlexanderArgs {
    #[arg(long, value_name = "FILE")]
    pres: String,
    /// Class to specialize at (repeatable).
    #[arg(long, value_name = "CSV", value_parser = parse_int_csv)]
    psi: Vec<IntCsv>,
    /// Also report every primitive class with entries in [-R, R].
    #[arg(long, value_name = "R")]
    scan: Option<i64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct CoversArgs {
    #[arg(long, value_name = "FILE")]
    pres: String,
    #[arg(long, value_name = "CSV", value_parser = parse_int_csv)]
    psi: IntCsv,
    #[arg(long = "max-m", value_name = "N", default_value_t = 8)]
    max_m: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct NormballArgs {
    #[arg(long, value_name = "FILE")]
    fixture: String,
    /// Number of sample classes for the lower-bound check.
    #[arg(long, value_name = "N", default_value_t = 100)]
    samples: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[arg(long, value_name = "FILE")]
    fixture: String,
    #[arg(long, value_name = "CSV-rationals")]
    w: String,
    #[arg(long, value_name = "CSV", value_parser = parse_int_csv)]
    psi: IntCsv,
    /// Base point and its cover degree, e.g. `1/2,1/2@2`.
    #[arg(long, value_name = "CSV-rationals@d")]
    v0: Option<String>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, value_name = "FILE")]
    pres: String,
    /// Box radius.
    #[arg(long, value_name = "R")]
    scan: i64,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand, Debug)]
enum ExamplesCommand {
    /// Print a presentation or fixture for a named family.
    Gen(GenArgs),
    /// Check the surgery scaling on a fixture with meridian and longitude.
    VerifySurgery(SurgeryArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_parser = ["circle-bundle", "three-torus", "surface-times-circle", "mapping-torus", "trefoil", "free-product"])]
    family: String,
    /// Euler number of a circle bundle.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    e: i64,
    /// Genus.
    #[arg(long, default_value_t = 2)]
    g: usize,
    /// Number of swapped handle pairs in a mapping torus.
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct SurgeryArgs {
    #[arg(long, value_name = "FILE")]
    fixture: String,
    /// Slopes `p/q`, comma separated.
    #[arg(long, value_name = "LIST", value_parser = parse_fills, value_delimiter = ',', required = true)]
    fills: Vec<(i64, i64)>,
    #[arg(long, value_name = "CSV", value_parser = parse_int_csv)]
    psi: IntCsv,
    #[command(flatten)]
    out: Output,
}

/// Comma-separated integers.
#[derive(Clone, Debug)]
struct IntCsv(Vec<i64>);

fn parse_int_csv(s: &str) -> Result<IntCsv, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer")))
        .collect::<Result<_, _>>()
        .map(IntCsv)
}

fn parse_fills(s: &str) -> Result<(i64, i64), String> {
    let (p, q) = s.split_once('/').ok_or_else(|| format!("`{s}` is not a slope p/q"))?;
    let p = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
    let q = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
    Ok((p, q))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = commands::run(cli.command, &argv[1..]);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.text.as_bytes());
    let _ = stdout.flush();
    if let Some(msg) = &outcome.message {
        eprintln!("error: {msg}");
    }
    ExitCode::from(match outcome.status {
        Status::Ok | Status::Inconclusive => 0,
        Status::Error => 1,
    })
}
