//! `levy-hedge`: simulate Lévy-Ito markets, compute optimal hedges and run
//! the verification suites.

mod commands;
mod config;
mod exit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use levy_hedge::sim::verify::Suite;
use levy_hedge::sim::{BUILTIN_SCENARIOS, DEFAULT_SEED};

use config::{Overrides, RunConfig};
use exit::Failure;

#[derive(Parser)]
#[command(
    name = "levy-hedge",
    version,
    about = "Quadratic hedging in Lévy-Ito jump-diffusion markets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// JSON run configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    paths: Option<usize>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Number of time steps over the same horizon.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(short, long, action = clap::ArgAction::Count)]
    verbose: u8,
}

impl RunArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            seed: self.seed,
            paths: self.paths,
            steps: self.steps,
            out: self.out.clone(),
        }
    }

    fn config(&self) -> Result<Option<RunConfig>, Failure> {
        self.config.as_deref().map(RunConfig::load).transpose()
    }

    /// Config from `--config`, else the named built-in scenario.
    fn config_or(&self, builtin: Option<&str>) -> Result<RunConfig, Failure> {
        match (self.config()?, builtin) {
            (Some(c), None) => Ok(c),
            (None, Some(name)) => Ok(RunConfig::builtin(name)),
            (Some(_), Some(_)) => Err(Failure::Config(
                "give either --config or a scenario name, not both".into(),
            )),
            (None, None) => Err(Failure::Config(
                "a scenario name or --config is required".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the reporting-path CSV of each figure scenario.
    Figures {
        /// Built-in scenarios; all of them when omitted.
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(BUILTIN_SCENARIOS))]
        names: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print optimal hedge ratios, ρ, analytic Δ and degeneracy diagnostics.
    Hedge {
        scenario: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a Monte Carlo hedging experiment.
    Simulate {
        scenario: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a property suite; exits nonzero if any property fails.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        paths: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Figures { names, run } => {
            let cfg = run.config()?;
            let verbosity = run.verbose + cfg.as_ref().map_or(0, |c| c.verbosity);
            let names = if names.is_empty() && cfg.is_none() {
                BUILTIN_SCENARIOS.iter().map(|s| s.to_string()).collect()
            } else {
                names
            };
            if cfg.is_some() && !names.is_empty() {
                return Err(Failure::Config(
                    "give either --config or figure names, not both".into(),
                ));
            }
            commands::figures(&names, cfg, &run.overrides(), verbosity)
        }
        Command::Hedge { scenario, run } => {
            commands::hedge(run.config_or(scenario.as_deref())?, &run.overrides())
        }
        Command::Simulate { scenario, run } => {
            commands::simulate(run.config_or(scenario.as_deref())?, &run.overrides())
        }
        Command::Verify { suite, seed, paths } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: levy_hedge::Error| Failure::Config(e.to_string()))?;
            commands::verify(suite, seed, paths)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            f.into()
        }
    }
}
