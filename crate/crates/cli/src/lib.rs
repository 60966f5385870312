//! Command-line front end for `gl11-core`: argument parsing, JSON output and
//! batch mode.

pub mod args;
pub mod batch;
pub mod commands;
pub mod output;

use gl11_core::Error;
use serde_json::{json, Value};

pub use args::{Cli, Command, GlobalOpts};

/// Success.
pub const EXIT_OK: i32 = 0;
/// The question is outside what the known rules determine, or a check failed.
pub const EXIT_DOMAIN: i32 = 1;
/// Malformed input.
pub const EXIT_USAGE: i32 = 2;

/// A JSON document and the exit code that goes with it.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: Value,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidInput(_) | Error::DivisionByZero => EXIT_USAGE,
        Error::Undetermined(_)
        | Error::NotSemisimple(_)
        | Error::Decomposition(_)
        | Error::Numeric(_)
        | Error::Verification(_) => EXIT_DOMAIN,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::Undetermined(_) => "undetermined",
        Error::InvalidInput(_) => "invalid_input",
        Error::Parse(_) => "parse",
        Error::NotSemisimple(_) => "not_semisimple",
        Error::Decomposition(_) => "decomposition",
        Error::Numeric(_) => "numeric",
        Error::Verification(_) => "verification",
    }
}

pub fn error_document(e: &Error) -> Value {
    json!({ "error": { "kind": error_kind(e), "message": e.to_string() } })
}

/// Run one non-batch command.
pub fn run_command(cmd: &Command, global: &GlobalOpts) -> Outcome {
    match commands::execute(cmd, global) {
        Ok(document) => {
            let failed = document.get("status").is_some_and(|s| s == "fail");
            Outcome { document, code: if failed { EXIT_DOMAIN } else { EXIT_OK } }
        }
        Err(e) => Outcome { document: error_document(&e), code: exit_code(&e) },
    }
}
