//! `spindles`: tables, single-space reports, Jacobi profiles and a
//! verification sweep for spindle numbers of classical symmetric spaces.

mod analyze;
mod output;
mod profile;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spindles_core::linalg::{RationalAngle, Tolerance};
use spindles_core::spaces::FamilyTag;
use spindles_core::SpaceFamily;

#[derive(Parser)]
#[command(name = "spindles", version, about = "Spindle numbers of classical compact symmetric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spindle numbers for every family with parameters up to a cap.
    Table {
        #[arg(long, default_value_t = 6)]
        cap: usize,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Full report for one space and its canonical element.
    Analyze {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Jacobi-field norm and slice dimension along one period, as CSV.
    Profile {
        #[command(flatten)]
        space: SpaceArgs,
        /// Grid step as a rational multiple of pi, e.g. `1/12`.
        #[arg(long)]
        step: String,
    },
    /// Run every invariant and propositional check.
    Verify {
        #[arg(long, default_value_t = 6)]
        cap: usize,
        /// Multiply every canonical element by this factor before checking.
        #[arg(long)]
        debug_scale: Option<f64>,
        /// Spindle numbers of two factors for the product check.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<u64>>,
    },
    /// JSON catalog of the spaces up to a cap: dimensions and center orders.
    Catalog {
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },
}

#[derive(clap::Args)]
struct SpaceArgs {
    /// Family tag: AI, AII, AIII, BDI_rank1, BDI_split, DIII, CI, CII, GRP_a, GRP_bd, GRP_c, GRP_d.
    family: String,
    /// `p q` for pair families, `n` otherwise.
    #[arg(num_args = 1..=2, required = true, allow_negative_numbers = true)]
    params: Vec<i64>,
}

impl SpaceArgs {
    fn resolve(&self) -> Result<SpaceFamily, Failure> {
        let tag: FamilyTag = self.family.parse().map_err(|e: spindles_core::Error| Failure::Usage(e.to_string()))?;
        let params = self
            .params
            .iter()
            .map(|&v| {
                usize::try_from(v).map_err(|_| Failure::Usage(format!("invalid parameters for {tag}: {v} is negative")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpaceFamily::from_slice(tag, &params)?)
    }
}

/// How a command failed, which decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or a numeric error: exit 2.
    Usage(String),
    /// A check did not hold: exit 1.
    Verification(String),
}

impl From<spindles_core::Error> for Failure {
    fn from(e: spindles_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// `SPINDLE_EPS` overrides the default tolerance.
fn tolerance() -> Result<Tolerance, Failure> {
    match std::env::var("SPINDLE_EPS") {
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(eps) if eps > 0.0 && eps.is_finite() => Ok(Tolerance::with_eps(eps)),
            _ => Err(Failure::Usage(format!("SPINDLE_EPS must be a positive number, got `{raw}`"))),
        },
        Err(_) => Ok(Tolerance::default()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let tol = tolerance()?;
    match cli.command {
        Command::Table { cap, csv, json } => table::run(cap, csv.as_deref(), json.as_deref(), tol),
        Command::Analyze { space, json } => analyze::run(space.resolve()?, json, tol),
        Command::Profile { space, step } => {
            let step: RationalAngle =
                step.parse().map_err(|_| Failure::Usage(format!("degenerate grid: cannot parse step `{step}`")))?;
            profile::run(space.resolve()?, step, tol)
        }
        Command::Verify { cap, debug_scale, pair } => {
            verify::run(cap, debug_scale.unwrap_or(1.0), pair.map(|p| (p[0], p[1])), tol)
        }
        Command::Catalog { cap } => table::catalog(cap, tol),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("spindles: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("spindles: {msg}");
            ExitCode::from(2)
        }
    }
}
