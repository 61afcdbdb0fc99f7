use std::process::ExitCode;

use ckalg::config::Cli;
use ckalg::{EXIT_CHECK, EXIT_INPUT};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match ckalg::run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
