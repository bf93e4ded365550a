use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = syzcert::cli::Cli::parse();
    match syzcert::cli::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
