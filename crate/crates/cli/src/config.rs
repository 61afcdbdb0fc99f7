use std::path::PathBuf;

use ckalg_core::ck_matrix::{Family, OmegaVector};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "ckalg", version, about = "Cayley-Klein Lie algebras and their central extensions, exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Print the generator matrices of the basis.
    Generators,
    /// Print the structure constants and check them.
    Structure,
    /// Compute H² and cross-check it against the classification.
    H2,
    /// Run h2 for every ω in {-1,0,1}^N.
    Sweep,
    /// Run the invariant checks for one algebra.
    Verify,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Algebra family: so, su, u or sq.
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Number of contraction coefficients.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Comma-separated rationals, e.g. `0,1,-1/2`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub omega: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Allow the quaternionic family at N >= 3.
    #[arg(long, global = true)]
    pub stretch: bool,
    /// Negate one bracket before checking (exercises the failure path).
    #[arg(long, global = true, hide = true)]
    pub corrupt: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub family: Family,
    pub n: usize,
    /// `None` for sweeps.
    pub omega: Option<OmegaVector>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub stretch: bool,
    pub corrupt: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let Cli { command, opts } = cli;
        let family: Family = opts
            .family
            .as_deref()
            .ok_or_else(|| CliError::input("--family is required"))?
            .parse()
            .map_err(|e| CliError::input(format!("{e}")))?;
        let omega = match &opts.omega {
            Some(s) => Some(s.parse::<OmegaVector>().map_err(|e| CliError::input(format!("--omega {s:?}: {e}")))?),
            None => None,
        };
        let n = match (command, &omega, opts.n) {
            (Command::Sweep, Some(_), _) => return Err(CliError::input("sweep takes --n, not --omega")),
            (Command::Sweep, None, Some(n)) => n,
            (Command::Sweep, None, None) => return Err(CliError::input("sweep needs --n")),
            (_, None, _) => return Err(CliError::input("--omega is required")),
            (_, Some(w), Some(n)) if w.n() != n => {
                return Err(CliError::input(format!("--omega has {} coefficients but --n is {n}", w.n())))
            }
            (_, Some(w), _) => w.n(),
        };
        if n == 0 {
            return Err(CliError::input("N must be at least 1"));
        }
        if opts.jobs == Some(0) {
            return Err(CliError::input("--jobs must be positive"));
        }
        let solves = matches!(command, Command::H2 | Command::Sweep);
        if solves && family == Family::Sq && n >= 3 && !opts.stretch {
            return Err(CliError::input("sq with N >= 3 needs --stretch"));
        }
        Ok(RunConfig {
            command,
            family,
            n,
            omega,
            format: opts.format,
            out: opts.out,
            jobs: opts.jobs,
            stretch: opts.stretch,
            corrupt: opts.corrupt,
        })
    }

    /// The single ω of a non-sweep command.
    pub fn omega(&self) -> &OmegaVector {
        self.omega.as_ref().expect("validated for non-sweep commands")
    }
}
