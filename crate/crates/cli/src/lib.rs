//! `pamu` command-line front end.
//!
//! Exit codes: 0 success or concrete class, 1 configuration/argument error,
//! 2 no match, 3 ambiguous, 4 oracle disagreement.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

mod check;
mod commands;

pub use commands::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NO_MATCH: i32 = 2;
pub const EXIT_AMBIGUOUS: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match commands::execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}
