//! Command-line front end: identity checks, single-economy simulation,
//! parameter sweeps, sector scenarios and empirical range checks.
//!
//! Exit codes: 0 success, 1 identity failure, 2 input or usage error,
//! 3 divergence, 4 infeasible sector scenario.

pub mod config;
pub mod grid;
pub mod scenario;

mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use render::{render_pretty, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DIVERGED: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "bowley", version, about = "Labour share of income: identities, simulation and range checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the equilibrium identities on one accounting snapshot.
    Identities(commands::identities::Args),
    /// Simulate the single economy until its income rate settles.
    Simulate(commands::simulate::Args),
    /// Simulate every point of a parameter grid.
    Sweep(commands::sweep::Args),
    /// Run a multi-sector drift scenario.
    Sectors(commands::sectors::Args),
    /// Labour-share range from parameter boxes, or ratios of an observed series.
    Empirical(commands::empirical::Args),
}

/// Parses `args` (including the program name) and runs the command.
///
/// Summaries and tables without an output path go to `stdout`; diagnostics go
/// to standard error. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                eprint!("{}", e.render());
            } else {
                let _ = write!(stdout, "{}", e.render());
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Identities(a) => commands::identities::run(a, stdout),
        Command::Simulate(a) => commands::simulate::run(a, stdout),
        Command::Sweep(a) => commands::sweep::run(a, stdout),
        Command::Sectors(a) => commands::sectors::run(a, stdout),
        Command::Empirical(a) => commands::empirical::run(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
