mod commands;
mod config;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use paramvex_core::problem::DimensionLimits;

use config::Scenario;

/// Value functions of parametric convex programs: sweeps and certificate checks.
#[derive(Parser)]
#[command(name = "paramvex", version)]
struct Cli {
    /// Seed for every randomized check (overrides the config).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Tolerance profile: default, strict or loose.
    #[arg(long, global = true, default_value = "default")]
    tol: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in instances.
    Catalog,
    /// Evaluate v on a grid and write CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the structural checks and write a JSON report.
    Check {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Check,
    Usage(String),
}

fn limits() -> Result<DimensionLimits, String> {
    let mut limits = DimensionLimits::default();
    if let Ok(raw) = std::env::var("PARAMVEX_MAX_DIM") {
        limits.max_dim = raw
            .trim()
            .parse()
            .map_err(|_| format!("PARAMVEX_MAX_DIM must be a positive integer, got {raw:?}"))?;
    }
    Ok(limits)
}

fn load(cli: &Cli, config: &PathBuf) -> Result<Scenario, Failure> {
    let s = Scenario::load(config, &cli.tol, cli.seed).map_err(Failure::Usage)?;
    s.program
        .check_limits(&limits().map_err(Failure::Usage)?)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(s)
}

fn emit(bytes: &[u8], out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(&path, bytes)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Catalog => emit(commands::catalog_listing().as_bytes(), None),
        Command::Sweep { config, out } => {
            let s = load(cli, config)?;
            let csv = commands::sweep_csv(&s).map_err(Failure::Usage)?;
            emit(&csv, out.clone().or(s.output.clone()))
        }
        Command::Check { config, out } => {
            let s = load(cli, config)?;
            let report = commands::check_report(&s).map_err(Failure::Usage)?;
            let mut json = serde_json::to_string_pretty(&report)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            json.push('\n');
            emit(json.as_bytes(), out.clone().or(s.output.clone()))?;
            for c in &report.checks {
                let expected = if c.expected { " (expected)" } else { "" };
                eprintln!("{:<15} {:?}{expected}", c.name.as_str(), c.verdict);
            }
            if report.acceptable() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("paramvex: {msg}");
            ExitCode::from(2)
        }
    }
}
