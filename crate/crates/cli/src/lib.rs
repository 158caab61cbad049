//! Command-line front end for `realforms-core`.
//!
//! Every command prints one JSON document (or its text rendering). Exit codes:
//! 0 on success, 1 when a re-check or verification suite fails or a seeded
//! search gives up, 2 on usage or input errors. Errors are printed as
//! `{"error": {"kind", "message", "exit_code"}}`.

pub mod args;
pub mod commands;
pub mod error;
pub mod render;

use std::ffi::OsString;

use clap::error::ErrorKind as ClapKind;
use clap::Parser;

pub use args::{Cli, OutputMode};
pub use error::{CliError, ErrorKind};

/// What the process prints to stdout and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn emit(value: &serde_json::Value, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
            s.push('\n');
            s
        }
        OutputMode::Text => render::render_text(value),
    }
}

// Parse errors happen before `--output` is known, so look for it by hand.
fn requested_mode(args: &[OsString]) -> OutputMode {
    let args: Vec<&str> = args.iter().filter_map(|a| a.to_str()).collect();
    let text = args.windows(2).any(|w| w == ["--output", "text"]) || args.contains(&"--output=text");
    if text {
        OutputMode::Text
    } else {
        OutputMode::Json
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ClapKind::DisplayHelp | ClapKind::DisplayVersion) => {
            return Outcome {
                code: 0,
                stdout: e.render().to_string(),
            };
        }
        Err(e) => {
            let err = CliError::usage(e.render().to_string().trim_end());
            return Outcome {
                code: err.exit_code(),
                stdout: emit(&err.to_json(), requested_mode(&args)),
            };
        }
    };
    match commands::execute(&cli.command) {
        Ok(report) => Outcome {
            code: if report.ok { 0 } else { 1 },
            stdout: emit(&report.value, cli.output),
        },
        Err(err) => Outcome {
            code: err.exit_code(),
            stdout: emit(&err.to_json(), cli.output),
        },
    }
}
