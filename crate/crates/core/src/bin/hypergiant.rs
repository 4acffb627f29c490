//! Command-line front end. Exit status: 0 pass, 1 statistical failure,
//! 2 usage or domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hypergiant::experiment::{run_experiment, ExperimentConfig, ExperimentKind, Verdict};
use hypergiant::Error;

#[derive(Parser)]
#[command(name = "hypergiant", version, about = "Giant component experiments on random k-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate λ*, ρ_λ, ρ_k, σ²/n and α over a grid of k and λ.
    Theory(Flags),
    /// Monte Carlo normality check of the largest component.
    Run(Flags),
    /// Critical-window comparison against the excursion limit.
    Critical(Flags),
    /// Cross-check implicit exploration against explicit hypergraphs.
    OracleCheck(Flags),
    /// Write the step-by-step walk and its decomposition for one seed.
    Trace(Flags),
}

#[derive(Args)]
struct Flags {
    /// Flat `key = value` config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<String>,
    /// Arity; a comma-separated list for `theory`.
    #[arg(long)]
    k: Option<String>,
    /// Comma-separated list for `theory`.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long)]
    runs: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    workers: Option<String>,
    #[arg(long)]
    out: Option<String>,
    /// Order statistics compared in `critical`.
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    grid_step: Option<String>,
    #[arg(long)]
    horizon: Option<String>,
    /// Also compare `critical` against k = 2.
    #[arg(long)]
    compare_graph: bool,
}

fn build_config(kind: ExperimentKind, flags: &Flags) -> Result<ExperimentConfig, Error> {
    let mut config = ExperimentConfig::new(kind);
    if let Some(path) = &flags.config {
        config.apply_file(path)?;
        config.experiment = kind;
    }
    let pairs = [
        ("n", &flags.n),
        ("k", &flags.k),
        ("lambda", &flags.lambda),
        ("alpha", &flags.alpha),
        ("runs", &flags.runs),
        ("seed", &flags.seed),
        ("workers", &flags.workers),
        ("out", &flags.out),
        ("r", &flags.r),
        ("grid_step", &flags.grid_step),
        ("horizon", &flags.horizon),
    ];
    for (key, value) in pairs {
        if let Some(v) = value {
            config.set(key, v)?;
        }
    }
    if flags.compare_graph {
        config.compare_graph = true;
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, flags) = match &cli.command {
        Command::Theory(f) => (ExperimentKind::Theory, f),
        Command::Run(f) => (ExperimentKind::Run, f),
        Command::Critical(f) => (ExperimentKind::Critical, f),
        Command::OracleCheck(f) => (ExperimentKind::OracleCheck, f),
        Command::Trace(f) => (ExperimentKind::Trace, f),
    };
    let result = build_config(kind, flags).and_then(|c| run_experiment(&c));
    match result {
        Ok((verdict, json)) => {
            println!("{json}");
            match verdict {
                Verdict::Fail => {
                    eprintln!("verdict: fail");
                    ExitCode::from(1)
                }
                Verdict::Pass => ExitCode::SUCCESS,
                Verdict::Insufficient => {
                    eprintln!("verdict: insufficient runs");
                    ExitCode::SUCCESS
                }
            }
        }
        Err(e @ Error::OracleMismatch { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
