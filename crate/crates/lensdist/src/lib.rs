//! Command-line front end for `lensdist-core`.
//!
//! [`run`] parses arguments, dispatches, and writes either a table or one
//! JSON record. Exit codes: `0` success, `2` invalid input or usage, `1`
//! internal error.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

mod args;
mod commands;
pub mod literal;
pub mod records;
mod table;

pub use args::Cli;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let format = cli.format;
    let result = commands::dispatch(cli.command, cli.convention.into()).and_then(|o| {
        let text = match format {
            args::Format::Table => o.text,
            args::Format::Json => {
                let mut s = serde_json::to_string(&o.json).map_err(|e| CliError::Internal(e.to_string()))?;
                s.push('\n');
                s
            }
        };
        out.write_all(text.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
