mod args;
mod commands;
mod error;
mod manifest;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use crate::args::Cli;
use crate::error::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = commands::limits_from_env(std::env::var("CHOWKIT_LIMITS").ok()).and_then(|limits| {
        catch_unwind(AssertUnwindSafe(|| commands::run(&cli, limits)))
            .unwrap_or_else(|_| Err(CliError::Internal("panic".into())))
    });
    match outcome {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let written = if cli.json {
                let v = json!({"result": out.result, "normalization": "primitive-positive", "status": out.status});
                writeln!(stdout, "{v}")
            } else {
                if out.status != "ok" {
                    eprintln!("status: {}", out.status);
                }
                writeln!(stdout, "{}", out.text)
            };
            if written.is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("error[{}]: {msg}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}
