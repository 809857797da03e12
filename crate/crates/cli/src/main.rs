use std::process::ExitCode;

use clap::Parser;
use rabi_dsc_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match rabi_dsc_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit_code())
        }
    }
}
