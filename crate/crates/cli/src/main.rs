use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use superschur::centralizer::DEFAULT_DIM_CAP;
use superschur::checks::{run_checks, Context, RunParams, CHECKS};
use superschur::report::Report;
use superschur::Mode;

#[derive(Parser, Debug)]
#[command(name = "superschur", version, about = "Exact verification of super Schur-Weyl dualities over Q(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification checks and print a report.
    Verify(VerifyArgs),
    /// List the available checks.
    ListChecks {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Quantum)]
    mode: ModeArg,
    /// Even dimension of V.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Odd dimension of V.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Tensor degree.
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Extra Hecke rank: the module is V^{⊗d} ⊗ H_{d+k}.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Check to run (repeatable); all checks when omitted.
    #[arg(long = "check", value_name = "NAME")]
    checks: Vec<String>,
    /// Evaluate q at the rational P/Q instead of keeping it generic.
    #[arg(long, value_name = "P/Q", value_parser = parse_rational)]
    specialize: Option<(i64, i64)>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest module dimension to build operators on.
    #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Classical,
    Quantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_rational(s: &str) -> Result<(i64, i64), String> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: i64 = p.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
    let q: i64 = q.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
    if q == 0 {
        return Err("denominator must be nonzero".into());
    }
    Ok((p, q))
}

/// Writes to stdout, tolerating a closed pipe (e.g. `| head`).
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let mode = match (args.mode, args.specialize) {
        (ModeArg::Classical, Some(_)) => return usage_error("--specialize needs --mode quantum"),
        (ModeArg::Classical, None) => Mode::Classical,
        (ModeArg::Quantum, None) => Mode::Quantum,
        (ModeArg::Quantum, Some((num, den))) => Mode::Specialized { num, den },
    };
    let params = RunParams { mode, m: args.m, n: args.n, d: args.d, k: args.k, dim_cap: args.dim_cap };
    if let Err(e) = params.validate() {
        return usage_error(e);
    }
    let ctx = Context::new(params);
    let outcomes = match run_checks(&ctx, &args.checks) {
        Ok(o) => o,
        Err(e) => return usage_error(e),
    };
    let report = Report::new(&ctx, outcomes);
    match args.format {
        Format::Json => emit(&format!("{}\n", report.to_json())),
        Format::Text => emit(&report.to_text()),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn list_checks(format: Format) -> ExitCode {
    match format {
        Format::Json => {
            let list: Vec<serde_json::Value> = CHECKS
                .iter()
                .map(|c| serde_json::json!({ "name": c.name, "description": c.description }))
                .collect();
            emit(&format!("{}\n", serde_json::to_string_pretty(&list).expect("check list serializes")));
        }
        Format::Text => {
            let width = CHECKS.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let lines: String = CHECKS.iter().map(|c| format!("{:width$}  {}\n", c.name, c.description)).collect();
            emit(&lines);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::ListChecks { format } => list_checks(format),
    }
}
