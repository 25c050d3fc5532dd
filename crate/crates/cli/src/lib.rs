//! Command-line front end: argument parsing, command dispatch and report
//! rendering. The binary in `main.rs` only wires these to the process.

pub mod args;
pub mod commands;
pub mod report;

use std::process::ExitCode;

use clap::Parser;
use lietame::Error;
use serde_json::json;

pub use args::Cli;
pub use report::{Output, Report};

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Structural(_) => 2,
        Error::Consistency(_) => 3,
        Error::Resource(_) => 4,
    }
}

fn error_json(kind: &str, message: &str) -> String {
    let mut s = serde_json::to_string(&json!({"error": {"kind": kind, "message": message}})).unwrap();
    s.push('\n');
    s
}

/// Runs one invocation, returning the text for stdout, the text for stderr and
/// the exit code.
pub fn run<I, T>(argv: I) -> (String, String, u8)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (e.to_string(), String::new(), 0),
                _ => (String::new(), error_json("usage", e.to_string().trim()), 2),
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(o) => {
            let text = if cli.json { o.report.to_json() } else { o.render_text() };
            (text, String::new(), if o.failed { 3 } else { 0 })
        }
        Err(e) => (String::new(), error_json(e.kind(), &e.to_string()), exit_code(&e)),
    }
}

pub fn main_with_args() -> ExitCode {
    let (out, err, code) = run(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(code)
}
