//! `mindswap` — planner and simulator for the two-body mind-switch
//! machine that never repeats a pair.
//!
//! Exit codes are a stable contract:
//! 0 success/restored, 1 usage or parse error, 2 constraint violation
//! (pair reuse, not restored, formula mismatch), 3 search budget exceeded.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod logfile;
mod report;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Constraint(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Constraint(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Constraint(m) | CliError::Budget(m) => {
                f.write_str(m)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    /// Avoid only the displacement's own 2-cycle factors; the closed-form
    /// minimum M is attained.
    Theorem,
    /// Avoid every pair already used in the log (the machine's real
    /// constraint); minimal by search.
    History,
}

#[derive(Parser)]
#[command(
    name = "mindswap",
    version,
    about = "Minimum-swap restoration plans for the mind-switch machine that never repeats a pair"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show a displacement's cycles, (n, m, r) counts, and parity.
    Decompose {
        /// Cycle notation, e.g. "(12)(3456789)".
        cycles: Option<String>,
        /// Swap log file to multiply out instead.
        #[arg(long, value_name = "FILE")]
        log: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Compute the minimum swap count and an explicit restoration plan.
    Plan {
        /// Cycle notation for the displacement (theorem mode by default).
        cycles: Option<String>,
        /// Swap log file (history mode by default).
        #[arg(long, value_name = "FILE")]
        log: Option<PathBuf>,
        /// Which pairs the plan must avoid.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Helper bodies to recruit, e.g. --helpers 10,11.
        #[arg(long, value_delimiter = ',', value_name = "A,B,...")]
        helpers: Option<Vec<u32>>,
        /// Depth cap for the history-mode search.
        #[arg(long, value_name = "D")]
        max_depth: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check the closed-form minimum against brute-force search.
    Certify {
        /// Largest label: exhaustive up to 6, sampled for 7..=8.
        #[arg(long, default_value_t = 5, value_name = "N")]
        n_max: usize,
        /// Sample count when n-max exceeds 6.
        #[arg(long, default_value_t = 100, value_name = "K")]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Replay a swap log, then a plan, and judge the outcome.
    Simulate {
        /// The history that scrambled everyone.
        log: PathBuf,
        /// The restoration plan to check.
        plan: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Decompose { cycles, log, json } => {
            commands::decompose(cycles.as_deref(), log.as_deref(), json)
        }
        Command::Plan {
            cycles,
            log,
            mode,
            helpers,
            max_depth,
            json,
        } => commands::plan(
            cycles.as_deref(),
            log.as_deref(),
            mode,
            helpers,
            max_depth,
            json,
        ),
        Command::Certify {
            n_max,
            samples,
            json,
        } => commands::certify(n_max, samples, json),
        Command::Simulate { log, plan, json } => {
            commands::simulate(&log, &plan, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
