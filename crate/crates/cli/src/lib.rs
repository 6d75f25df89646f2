//! Command-line front end for rootforge.

pub mod args;
mod commands;
pub mod input;
pub mod verify;

use std::io::Write;

use thiserror::Error;

pub use args::Cli;
use args::Command;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {}", .0.kind(), .0)]
    Core(#[from] rootforge::Error),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
        }
    }
}

/// Exit code for errors: bad input, invalid Π-systems and the like.
pub const INPUT_ERROR: u8 = 2;

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Build(a) => commands::build(a, out),
        Command::Pisystem(c) => commands::pisystem(c, out),
        Command::Wdd(c) => commands::wdd(c, out),
        Command::Catalog(c) => commands::catalog(c, out),
        Command::VerifyPaper(a) => verify::run(a, out),
    }
}
