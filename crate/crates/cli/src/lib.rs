//! Command-line front end: argument parsing, report assembly and rendering.

pub mod args;
mod commands;
pub mod goldens;
pub mod render;
pub mod sweep;

use clap::Parser;
use serde_json::json;
use thiserror::Error;

pub use args::{Cli, Format, Verb};

/// Version of the JSON envelope.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{flag}: {message}")]
    Usage { flag: String, message: String },
    #[error(transparent)]
    Presentation(#[from] talex_core::presentations::PresentationError),
    #[error(transparent)]
    Poly(#[from] talex_core::polyring::PolyError),
    #[error(transparent)]
    Twisted(#[from] talex_core::twisted::TwistedError),
    #[error(transparent)]
    CharVariety(#[from] talex_core::charvariety::CharVarietyError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// What a run writes and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Executes a parsed command.
pub fn run(cli: &Cli) -> Outcome {
    let report = match commands::execute(cli) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let status = if report.verified { "ok" } else { "verification_failed" };
    let code = if report.verified { EXIT_OK } else { EXIT_VERIFICATION };
    let stdout = match cli.format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": cli,
                "status": status,
                "result": report.result,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let header = format!("{}: {status}\n", cli.command.name());
            header + &report.text.unwrap_or_else(|| render::to_text(&report.result))
        }
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}
