use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use inseparable_cli::{run, CliError, ProblemSpec, COMMANDS};

/// Purely inseparable field extensions over F_p.
#[derive(Parser, Debug)]
#[command(name = "insep", version)]
struct Args {
    /// One of: analyze, cotangent, derivations, fixed-field, galois-check, modularity,
    /// six-term, frobenius-chain, roundtrip, selftest.
    command: String,
    /// Problem JSON file; read from stdin when absent.
    #[arg(long)]
    spec: Option<String>,
    /// Overrides the problem file's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the problem file's search budget.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    /// Adds wall-clock time to the report (breaks byte-stability).
    #[arg(long)]
    timing: bool,
}

/// Used by `selftest` when no spec is given.
const DEFAULT_SPEC: &str = r#"{"p":2,"variables":["x","y"],"exponent_bound":1}"#;

fn read_spec(args: &Args) -> Result<String, CliError> {
    match &args.spec {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}"))),
        None if args.command == "selftest" && std::io::IsTerminal::is_terminal(&std::io::stdin()) => {
            Ok(DEFAULT_SPEC.into())
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
            if s.trim().is_empty() && args.command == "selftest" {
                return Ok(DEFAULT_SPEC.into());
            }
            Ok(s)
        }
    }
}

fn main_inner(args: &Args) -> Result<bool, CliError> {
    if !COMMANDS.contains(&args.command.as_str()) {
        return Err(CliError::UnknownCommand(args.command.clone()));
    }
    let text = read_spec(args)?;
    let mut raw: inseparable_cli::spec::RawSpec =
        serde_json::from_str(&text).map_err(|e| CliError::Schema(e.to_string()))?;
    if args.seed.is_some() {
        raw.seed = args.seed;
    }
    if args.budget.is_some() {
        raw.budget = args.budget;
    }
    let spec = ProblemSpec::from_raw(raw)?;
    let start = Instant::now();
    let mut report = run(&args.command, &spec)?;
    if args.timing {
        report.set_timing(start.elapsed().as_millis());
    }
    if args.text {
        print!("{}", report.to_text());
    } else {
        println!("{}", report.to_json());
    }
    Ok(report.inconclusive)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match main_inner(&args) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(4),
        Err(e) => {
            eprintln!("insep {}: {e}", args.command);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
