//! Library side of the `dunkl` binary: argument definitions, the four
//! commands and report rendering.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check, 2 on a usage
//! error, 3 on a domain error.

pub mod args;
pub mod commands;
pub mod parse;
pub mod report;

use std::fmt;

use dunkl_core::DunklError;

pub use args::{Cli, Command};
pub use report::{Format, Report};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(DunklError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<DunklError> for CliError {
    fn from(e: DunklError) -> Self {
        CliError::Domain(e)
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Verify(_) => "verify",
            Command::Oracle(_) => "oracle",
            Command::Eval(_) => "eval",
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Spectrum(a) => commands::spectrum(cli, a),
        Command::Verify(a) => commands::verify(cli, a),
        Command::Oracle(a) => commands::oracle(cli, a),
        Command::Eval(a) => commands::eval(cli, a),
    }
}

/// Exit code for a finished report.
pub fn report_exit_code(report: &Report) -> u8 {
    if report.passed == Some(false) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_PASS
    }
}
