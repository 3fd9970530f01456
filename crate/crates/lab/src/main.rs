use std::process::ExitCode;

use clap::Parser;
use schroder_lab::cli::{execute, Cli};

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("schroder-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
