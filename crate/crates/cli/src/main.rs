use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = dmc_cli::Cli::parse();
    let code = dmc_cli::run(&cli, &mut std::io::stdout().lock());
    ExitCode::from(code as u8)
}
