//! Command-line front end for `ckalg-core`: builds CK algebras, checks them
//! and reports their central extensions as JSON, CSV or text.

pub mod commands;
pub mod config;
pub mod report;

use std::fmt;
use std::fs;
use std::io::{self, Write};

use config::{Cli, Command, Format, RunConfig};

/// Exit status 2: the invocation itself was wrong.
pub const EXIT_INPUT: u8 = 2;
/// Exit status 1: a check or cross-check failed.
pub const EXIT_CHECK: u8 = 1;

#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { message: message.into() }
    }

    pub fn io(e: impl fmt::Display) -> Self {
        CliError { message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Runs one invocation; returns whether every check passed.
pub fn run(cli: Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let report = match cfg.command {
        Command::Generators => commands::generators(&cfg)?,
        Command::Structure => commands::structure(&cfg)?,
        Command::H2 => commands::h2(&cfg)?,
        Command::Sweep => commands::sweep(&cfg)?,
        Command::Verify => commands::verify(&cfg)?,
    };
    let rendered = report.render(cfg.format)?;
    match &cfg.out {
        Some(path) => fs::write(path, rendered).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?,
        None => io::stdout().write_all(rendered.as_bytes()).map_err(CliError::io)?,
    }
    if let (Format::Csv, Some(summary)) = (cfg.format, &report.summary) {
        eprintln!("{summary}");
    }
    Ok(report.ok)
}
