use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;

use args::{Cli, Command};
use commands::CmdError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Sample(args) => commands::cmd_sample(args),
        Command::Validate(args) => commands::cmd_validate(args),
        Command::Bench(args) => commands::cmd_bench(args),
        Command::Curves(args) => commands::cmd_curves(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Io(e)) => {
            eprintln!("smallgamma: output failed: {e}");
            ExitCode::from(1)
        }
        Err(CmdError::InvalidArgs(msg)) => {
            eprintln!("smallgamma: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::ValidationFailed(count)) => {
            eprintln!("smallgamma: {count} report(s) failed validation thresholds");
            ExitCode::from(3)
        }
    }
}
