//! Command-line front end. Every command prints one JSON document on stdout.
//!
//! Exit codes: 0 when everything verified, 1 when a check or hypothesis
//! fails, 2 for usage, parse and domain errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::rings::json::{descriptor_to_json, matrix_to_json, value_to_json};
use crate::rings::RingDescriptor;
use crate::structure::quantum_plane_demo;
use crate::weightset::decompose;
use crate::witness::{build_theorem32, build_witness, corollary_units, lemma_pd_check, CommutatorWitness, Strategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "commorder", version, about = "Exact witnesses for commutators of finite order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether some n x n commutator over C has k-th power Id_n.
    Decide {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Build and check a pair (A, B) with [A, B]^k = Id_n.
    Witness {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        /// Write the witness here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a witness file from scratch.
    Verify { file: PathBuf },
    /// Check [D, P]^n = (1 - n) Id_n by two routes.
    LemmaPd {
        #[arg(long)]
        n: usize,
        /// Q, Zmod:m or Cyclo:m
        #[arg(long)]
        ring: String,
    },
    /// Build (A, B) over the ring with [A, B]^n = Id_n.
    Theorem32 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        /// The element u for the n3 strategy, written p/q or as an integer.
        #[arg(long)]
        u: Option<String>,
    },
    /// Run the quantum-plane isomorphism demo.
    StructureDemo {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum StrategyArg {
    N2,
    N3,
    #[value(name = "inverse_n_minus_1")]
    InverseNMinus1,
    CharDivides,
}

/// A payload and the exit code it should be reported with.
struct Outcome {
    code: i32,
    payload: Value,
}

impl Outcome {
    fn verified(payload: Value, ok: bool) -> Self {
        Outcome {
            code: if ok { EXIT_OK } else { EXIT_FAILED },
            payload,
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err.root() {
        Error::Domain(_) | Error::Parse(_) | Error::RingMismatch { .. } | Error::DimensionMismatch(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn failure(err: Error) -> Outcome {
    Outcome {
        code: exit_code_for(&err),
        payload: json!({"ok": false, "error": err.to_string()}),
    }
}

fn parse_ring(spec: &str) -> Result<RingDescriptor, Error> {
    spec.parse()
}

fn check_kn(k: u64, n: u64) -> Result<(), Error> {
    if k < 2 || n < 1 {
        return Err(Error::Domain(format!("need k >= 2 and n >= 1, got k = {k}, n = {n}")));
    }
    Ok(())
}

fn cmd_decide(k: u64, n: u64) -> Result<Outcome, Error> {
    check_kn(k, n)?;
    Ok(Outcome::verified(decompose(k, n).to_json(), true))
}

fn cmd_witness(k: u64, n: u64, out: Option<PathBuf>) -> Result<Outcome, Error> {
    check_kn(k, n)?;
    let cert = decompose(k, n);
    if !cert.is_member() {
        let mut payload = cert.to_json();
        payload["ok"] = json!(false);
        payload["error"] = json!(Error::NotInWeightSet { k, n }.to_string());
        return Ok(Outcome::verified(payload, false));
    }
    let w = build_witness(k, n)?;
    let checks = w.checks();
    let doc = w.to_json();
    match out {
        Some(path) => {
            let text = serde_json::to_string_pretty(&doc).expect("serializable");
            fs::write(&path, text + "\n").map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
            let payload = json!({
                "k": k,
                "n": n,
                "path": path.display().to_string(),
                "checks": checks.to_json(),
                "ok": checks.all(),
            });
            Ok(Outcome::verified(payload, checks.all()))
        }
        None => Ok(Outcome::verified(doc, checks.all())),
    }
}

fn cmd_verify(file: PathBuf) -> Result<Outcome, Error> {
    let text = fs::read_to_string(&file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let w = CommutatorWitness::from_json(&doc)?;
    let checks = w.checks();
    let payload = json!({
        "k": w.k,
        "n": w.n,
        "checks": checks.to_json(),
        "failed": checks.first_failure(),
        "ok": checks.all(),
    });
    Ok(Outcome::verified(payload, checks.all()))
}

fn cmd_lemma_pd(n: usize, ring: &str) -> Result<Outcome, Error> {
    let ring = parse_ring(ring)?;
    let report = lemma_pd_check(n, &ring)?;
    Ok(Outcome::verified(report.to_json(), report.ok()))
}

fn cmd_theorem32(n: usize, ring: &str, strategy: StrategyArg, u: Option<String>) -> Result<Outcome, Error> {
    let ring = parse_ring(ring)?;
    let strategy = match (strategy, u) {
        (StrategyArg::N3, Some(u)) => Strategy::N3(ring.from_rational(&u.parse()?)?),
        (StrategyArg::N3, None) => return Err(Error::Domain("strategy n3 needs --u".into())),
        (_, Some(_)) => return Err(Error::Domain("--u only applies to strategy n3".into())),
        (StrategyArg::N2, None) => Strategy::N2,
        (StrategyArg::InverseNMinus1, None) => Strategy::InverseNMinus1,
        (StrategyArg::CharDivides, None) => Strategy::CharDivides,
    };
    let dec = corollary_units(n, &ring, &strategy)?;
    let (a, b) = build_theorem32(&dec)?;
    let c = a.commutator(&b)?;
    let power_ok = c.power(n as i64)?.is_identity();
    let payload = json!({
        "n": n,
        "ring": descriptor_to_json(&ring),
        "strategy": strategy.name(),
        "units": dec.units().iter().map(value_to_json).collect::<Vec<_>>(),
        "A": matrix_to_json(&a),
        "B": matrix_to_json(&b),
        "C": matrix_to_json(&c),
        "power_ok": power_ok,
        "ok": power_ok,
    });
    Ok(Outcome::verified(payload, power_ok))
}

fn cmd_structure_demo(n: usize, seed: u64) -> Result<Outcome, Error> {
    let report = quantum_plane_demo(n, seed)?;
    Ok(Outcome::verified(report.to_json(), report.ok()))
}

/// Parses `args` (including the program name), runs the command, prints the
/// payload and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Decide { k, n } => cmd_decide(k, n),
        Command::Witness { k, n, out } => cmd_witness(k, n, out),
        Command::Verify { file } => cmd_verify(file),
        Command::LemmaPd { n, ring } => cmd_lemma_pd(n, &ring),
        Command::Theorem32 { n, ring, strategy, u } => cmd_theorem32(n, &ring, strategy, u),
        Command::StructureDemo { n, seed } => cmd_structure_demo(n, seed),
    };
    let outcome = result.unwrap_or_else(failure);
    if let Some(msg) = outcome.payload.get("error").and_then(Value::as_str) {
        eprintln!("commorder: {msg}");
    }
    let text = serde_json::to_string_pretty(&outcome.payload).expect("serializable");
    // a closed pipe on stdout is not worth a panic
    let _ = writeln!(std::io::stdout(), "{text}");
    outcome.code
}
