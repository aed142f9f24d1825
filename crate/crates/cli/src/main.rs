use std::process::ExitCode;

use clap::Parser;
use horopoly_cli::{emit, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command).and_then(|out| emit(&out)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                // The report is the useful part of a failed numeric test.
                CliError::Failed(report) | CliError::Inconclusive(report) => {
                    print!("{report}");
                    eprintln!("horopoly: {}", if matches!(e, CliError::Failed(_)) { "test failed" } else { "inconclusive" });
                }
                _ => eprintln!("horopoly: {e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
