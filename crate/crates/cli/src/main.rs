mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use sierpinski_eip::Error;

use crate::args::{Cli, Command};
use crate::commands::Verdict;

/// Exit statuses.
const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_FAILURE: u8 = 4;

fn run(cli: &Cli) -> anyhow::Result<Verdict> {
    let g = &cli.global;
    let (artifact, verdict) = match &cli.command {
        Command::Profile { target, sizes, method } => commands::profile(g, target, sizes, *method)?,
        Command::Boundary { target, set } => commands::boundary_cmd(g, target, set)?,
        Command::Solve { target, sizes } => commands::solve(g, target, sizes)?,
        Command::Verify { claim, target } => commands::verify(g, *claim, target)?,
        Command::Poset { target, what, below } => commands::poset(g, target, *what, below.as_deref())?,
        Command::Limit { eta_inverse, lambda } => commands::limit(g, eta_inverse.as_deref(), lambda.as_deref())?,
    };
    output::emit(&artifact, g.out.as_deref())?;
    Ok(verdict)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parameter(_) | Error::DimensionMismatch { .. }) => EXIT_USAGE,
        Some(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        _ => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Counterexample) => ExitCode::from(EXIT_COUNTEREXAMPLE),
        Ok(Verdict::BudgetExceeded) => ExitCode::from(EXIT_BUDGET),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
