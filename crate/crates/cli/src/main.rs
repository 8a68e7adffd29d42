//! `statecmp` — quantum state comparison strategies, bounds, and Monte Carlo
//! verification from the command line.
//!
//! Every command prints a deterministic report (JSON by default, CSV with
//! `--format csv`) and uses the exit code as a verification verdict:
//! 0 = all gates passed, 1 = a statistical or optimization gate failed,
//! 2 = invalid usage.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{BoundsArgs, CliError, RefuteArgs, TwostateArgs, UniversalArgs};
use statecmp::twostate::Strategy;

/// Default θ grid: k·π/100 for k = 1..25.
const DEFAULT_GRID: &str = "0.03141592653589793:0.7853981633974483:25";

#[derive(Parser)]
#[command(
    name = "statecmp",
    version,
    about = "Quantum state comparison: strategies, bounds, and Monte Carlo verification",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum StrategyArg {
    IndividualMinError,
    IndividualUnambiguous,
    CollectiveMinError,
    CollectiveUnambiguous,
    All,
}

impl StrategyArg {
    fn to_strategy(self) -> Option<Strategy> {
        match self {
            StrategyArg::IndividualMinError => Some(Strategy::IndividualMinError),
            StrategyArg::IndividualUnambiguous => Some(Strategy::IndividualUnambiguous),
            StrategyArg::CollectiveMinError => Some(Strategy::CollectiveMinError),
            StrategyArg::CollectiveUnambiguous => Some(Strategy::CollectiveUnambiguous),
            StrategyArg::All => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            StrategyArg::IndividualMinError => "individual_min_error",
            StrategyArg::IndividualUnambiguous => "individual_unambiguous",
            StrategyArg::CollectiveMinError => "collective_min_error",
            StrategyArg::CollectiveUnambiguous => "collective_unambiguous",
            StrategyArg::All => "all",
        }
    }
}

#[derive(clap::Args)]
struct OutputOpts {
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write the report to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two unknown states: Haar-average rates vs Monte Carlo.
    Universal {
        /// Subsystem dimension (2..=8).
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Number of Monte Carlo trials.
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        /// Fraction of trials prepared with the same state on both systems.
        #[arg(long = "same-fraction", default_value_t = 0.0)]
        same_fraction: f64,
        /// RNG seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Compare two known qubit states: closed forms vs Monte Carlo.
    Twostate {
        /// Angle θ in radians, 0 ≤ θ ≤ π/4 (θ > 0 for unambiguous strategies).
        #[arg(long)]
        theta: f64,
        /// Strategy to run, or all four.
        #[arg(long, value_enum, default_value = "all")]
        strategy: StrategyArg,
        /// Number of Monte Carlo trials (at least 1000).
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        /// RNG seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Closed-form sweep of every strategy over a θ grid.
    Bounds {
        /// Grid spec start:stop:count with θ values in (0, π/4].
        #[arg(long = "theta-grid", default_value = DEFAULT_GRID)]
        theta_grid: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Search for a "states are identical" certifier; its feasible trace
    /// collapses to zero.
    Refute {
        /// Subsystem dimension (2..=8).
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Number of sampled no-firing constraints (warns below 100).
        #[arg(long = "constraint-samples", default_value_t = 500)]
        constraint_samples: usize,
        /// RNG seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn emit(envelope: &report::Envelope, output: &OutputOpts) -> Result<(), CliError> {
    let text = match output.format {
        FormatArg::Json => envelope.to_json(),
        FormatArg::Csv => envelope.to_csv(),
    };
    match &output.out {
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|e| CliError::Failure(e.to_string()))
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn run(command: &Command) -> Result<bool, CliError> {
    let (envelope, pass, output) = match command {
        Command::Universal { dim, trials, same_fraction, seed, output } => {
            let args = UniversalArgs {
                dim: *dim,
                trials: *trials,
                same_fraction: *same_fraction,
                seed: *seed,
            };
            let (envelope, pass) = commands::cmd_universal(&args)?;
            (envelope, pass, output)
        }
        Command::Twostate { theta, strategy, trials, seed, output } => {
            let args = TwostateArgs {
                theta: *theta,
                strategy: strategy.to_strategy(),
                strategy_name: strategy.name().to_string(),
                trials: *trials,
                seed: *seed,
            };
            let (envelope, pass) = commands::cmd_twostate(&args)?;
            (envelope, pass, output)
        }
        Command::Bounds { theta_grid, output } => {
            let (envelope, pass) = commands::cmd_bounds(&BoundsArgs { theta_grid: theta_grid.clone() })?;
            (envelope, pass, output)
        }
        Command::Refute { dim, constraint_samples, seed, output } => {
            let args = RefuteArgs {
                dim: *dim,
                constraint_samples: *constraint_samples,
                seed: *seed,
            };
            let (envelope, pass) = commands::cmd_refute(&args)?;
            (envelope, pass, output)
        }
    };
    emit(&envelope, output)?;
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
