mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

/// Exit status for usage and configuration errors.
const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, output) = match &cli.command {
        Command::Verify(c) => (commands::verify(c), c.output),
        Command::Coeff {
            common,
            monomial,
            side,
            both,
        } => (
            commands::coeff(common, monomial, *side, *both),
            common.output,
        ),
        Command::Show {
            object,
            common,
            tet,
        } => (commands::show(common, *object, tet), common.output),
        Command::Crosscheck(c) => (commands::crosscheck(c), c.output),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(output));
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
