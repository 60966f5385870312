//! Batch mode: each non-empty input line holds one command, either as a JSON
//! array of arguments (`["fuse", "A(1;0)", "A(2;0)"]`) or as whitespace-separated
//! words (`fuse A(1;0) A(2;0)`). Lines starting with `#` are skipped.

use std::io::BufRead;

use clap::Parser;
use serde_json::{json, Value};

use crate::args::{Cli, Command, GlobalOpts};
use crate::{run_command, Outcome, EXIT_USAGE};

fn words(line: &str) -> Result<Vec<String>, String> {
    if line.starts_with('[') {
        serde_json::from_str(line).map_err(|e| format!("bad JSON argument list: {e}"))
    } else {
        Ok(line.split_whitespace().map(str::to_owned).collect())
    }
}

/// Run a single batch line. Flags given to `batch` itself act as defaults:
/// they are placed before the line's own arguments, so the line can override them.
pub fn run_line(line: &str, defaults: &[String]) -> Outcome {
    let usage = |message: String| Outcome {
        document: json!({ "error": { "kind": "usage", "message": message } }),
        code: EXIT_USAGE,
    };
    let args = match words(line) {
        Ok(a) => a,
        Err(e) => return usage(e),
    };
    let argv = std::iter::once("gl11".to_owned()).chain(defaults.iter().cloned()).chain(args);
    match Cli::try_parse_from(argv) {
        Ok(Cli { command: Command::Batch { .. }, .. }) => usage("batch cannot be nested".into()),
        Ok(cli) => run_command(&cli.command, &cli.global),
        Err(e) => usage(e.to_string().trim_end().to_owned()),
    }
}

/// Flags equivalent to `g`, used as defaults for every line.
pub fn default_flags(g: &GlobalOpts, raw_ext: &str) -> Vec<String> {
    vec![
        format!("--cutoff={}", g.cutoff),
        format!("--m-range={}", g.m_range),
        format!("--tol={:e}", g.tol),
        format!("--ext={raw_ext}"),
    ]
}

/// Run every line of `input`, writing one document per line. The exit code is
/// the largest line exit code.
pub fn run(input: impl BufRead, defaults: &[String], mut emit: impl FnMut(Value)) -> std::io::Result<i32> {
    let mut code = 0;
    for (index, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let out = run_line(trimmed, defaults);
        code = code.max(out.code);
        emit(json!({ "line": index + 1, "exit": out.code, "output": out.document }));
    }
    Ok(code)
}
