use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shifted_voa::scalar::parse_rational;
use shifted_voa_cli::{commands, CliError, JobConfig, Report, Suite};

#[derive(Parser)]
#[command(name = "shiftvoa", version, about = "Shifted lattice vertex operator algebras, exactly")]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Job description (UTF-8 JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Truncation `p/q`; for `spectrum` the largest weight listed.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Emit the JSON report.
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a text table (default).
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Central charge, spectrum, partition function, duality and type.
    Analyze,
    /// Same-partition-function or holomorphic families.
    Family,
    /// Run verification suites.
    Verify {
        #[arg(long)]
        suite: Option<String>,
    },
    /// Theta series of the shifted coset.
    Theta,
    /// Graded dimensions up to a weight.
    Spectrum,
}

fn run(args: &Args) -> Result<Report, CliError> {
    let mut cfg = match &args.config {
        Some(p) => JobConfig::from_path(p)?,
        None => JobConfig::default(),
    };
    if let Some(o) = &args.order {
        cfg.order = Some(parse_rational(o).map_err(|e| CliError::Usage(format!("--order: {e}")))?);
    }
    match &args.command {
        Command::Analyze => commands::analyze(&cfg),
        Command::Family => commands::family(&cfg),
        Command::Verify { suite } => {
            let name = suite.as_deref().or(cfg.suite.as_deref()).unwrap_or("all");
            let s: Suite = name.parse()?;
            commands::verify(&cfg, s)
        }
        Command::Theta => commands::theta(&cfg),
        Command::Spectrum => commands::spectrum(&cfg),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&args) {
        Ok(report) => {
            let text = if args.json {
                let mut t = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
                t.push('\n');
                t
            } else {
                report.table
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
