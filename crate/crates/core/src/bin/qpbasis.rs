use std::process::ExitCode;

use clap::Parser;
use qpbasis::cli::{execute, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match execute(&config) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("qpbasis: {e}");
            ExitCode::from(e.status().code())
        }
    }
}
