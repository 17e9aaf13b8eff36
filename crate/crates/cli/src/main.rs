use std::process::ExitCode;

use abaplus_cli::{run, RunConfig, EXIT_OK, EXIT_USAGE};
use clap::Parser;

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // --help and --version are not usage errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return ExitCode::from(code as u8);
        }
    };
    ExitCode::from(run(&config) as u8)
}
