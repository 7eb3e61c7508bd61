//! `ntnlink` — satellite-to-handset mmWave link analysis from scenario
//! files: budgets, sweeps, constellation coverage, PFD masks and
//! antenna sizing.
//!
//! Exit codes: 0 success/feasible, 1 usage or validation error,
//! 2 computed-infeasible.

mod commands;
mod report;
mod scenario;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::AntennaSide;
use ntnlink::linkbudget::LinkDirection;
use report::Report;
use scenario::Scenario;

#[derive(Debug)]
pub enum CliError {
    /// Wrong invocation: bad flags, unknown keys, malformed ranges.
    Usage(String),
    /// A scenario or input file violates an invariant.
    Validation(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Validation(msg) => write!(f, "validation error: {msg}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Dl,
    Ul,
}

impl From<Direction> for LinkDirection {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Dl => LinkDirection::Downlink,
            Direction::Ul => LinkDirection::Uplink,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "ntnlink",
    version,
    about = "Satellite-to-handset mmWave link analysis",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output form for the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Override a scenario value (repeatable), e.g. --set ue.peak_eirp_dbm=43
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a downlink or uplink budget ledger.
    Budget {
        #[arg(value_enum)]
        direction: Direction,
        scenario: PathBuf,
    },
    /// Sweep one variable and tabulate CNR, efficiency and rate.
    Sweep {
        #[arg(value_enum)]
        direction: Direction,
        scenario: PathBuf,
        /// One of: elevation, n_elements, bandwidth, eirp.
        variable: String,
        /// start:stop:step (inclusive) or a comma-separated list.
        range: String,
    },
    /// Check constellation coverage on a lat/lon grid over one period.
    Coverage {
        scenario: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        grid_step: f64,
        #[arg(long, default_value_t = 20)]
        time_samples: usize,
        /// Scan every phasing factor and report the best.
        #[arg(long)]
        phasing_scan: bool,
    },
    /// Evaluate a PFD mask at a set of arrival angles.
    Mask {
        scenario: PathBuf,
        band: String,
        /// start:stop:step or comma-separated angles in degrees.
        #[arg(long, default_value = "0:90:5")]
        angles: String,
    },
    /// Report antenna sizing for the satellite arrays or the terminal.
    Antenna {
        scenario: PathBuf,
        #[arg(value_enum)]
        which: AntennaSide,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful exits; everything else is usage
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let (report, exit) = match &cli.command {
        Command::Budget {
            direction,
            scenario,
        } => {
            let scenario = load(scenario, cli)?;
            commands::cmd_budget(&scenario, (*direction).into())?
        }
        Command::Sweep {
            direction,
            scenario,
            variable,
            range,
        } => {
            let scenario = load(scenario, cli)?;
            commands::cmd_sweep(&scenario, (*direction).into(), variable, range)?
        }
        Command::Coverage {
            scenario,
            grid_step,
            time_samples,
            phasing_scan,
        } => {
            let scenario = load(scenario, cli)?;
            commands::cmd_coverage(&scenario, *grid_step, *time_samples, *phasing_scan)?
        }
        Command::Mask {
            scenario,
            band,
            angles,
        } => {
            let scenario = load(scenario, cli)?;
            commands::cmd_mask(&scenario, band, angles)?
        }
        Command::Antenna { scenario, which } => {
            let scenario = load(scenario, cli)?;
            commands::cmd_antenna(&scenario, *which)?
        }
    };
    emit(cli, &report)?;
    Ok(exit)
}

fn load(path: &Path, cli: &Cli) -> Result<Scenario, CliError> {
    let scenario = Scenario::load(path, &cli.overrides)?;
    for warning in &scenario.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(scenario)
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Validation(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
