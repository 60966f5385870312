use std::io::{self, BufReader, Write};
use std::process::ExitCode;

use clap::Parser;
use gl11_cli::args::{Cli, Command};
use gl11_cli::{batch, run_command, EXIT_USAGE};
use serde_json::Value;

fn print(doc: &Value) {
    let mut out = io::stdout().lock();
    let _ = serde_json::to_writer(&mut out, doc);
    let _ = writeln!(out);
}

/// The raw `--ext` value, forwarded verbatim to batch lines.
fn raw_ext() -> String {
    let args: Vec<String> = std::env::args().collect();
    for (i, a) in args.iter().enumerate() {
        if let Some(v) = a.strip_prefix("--ext=") {
            return v.to_owned();
        }
        if a == "--ext" {
            if let Some(v) = args.get(i + 1) {
                return v.clone();
            }
        }
    }
    "sl21-neg-half".to_owned()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Batch { file } => {
            let defaults = batch::default_flags(&cli.global, &raw_ext());
            let result = match file {
                Some(path) => std::fs::File::open(path)
                    .and_then(|f| batch::run(BufReader::new(f), &defaults, |d| print(&d))),
                None => batch::run(io::stdin().lock(), &defaults, |d| print(&d)),
            };
            result.unwrap_or_else(|e| {
                eprintln!("gl11: {e}");
                EXIT_USAGE
            })
        }
        cmd => {
            let outcome = run_command(cmd, &cli.global);
            if let Some(msg) = outcome.document.pointer("/error/message").and_then(Value::as_str) {
                eprintln!("gl11: {msg}");
            }
            print(&outcome.document);
            outcome.code
        }
    };
    ExitCode::from(code as u8)
}
