use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use rootforge_cli::{run, Cli, INPUT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(status) => ExitCode::from(status.code()),
        // a closed pipe (`| head`) is not worth reporting
        Err(rootforge_cli::CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
