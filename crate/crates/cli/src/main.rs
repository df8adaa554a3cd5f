mod args;
mod commands;
mod error;
mod json;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, OutputFormat};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(outcome) => {
            let text = match cli.output {
                OutputFormat::Json => serde_json::to_string_pretty(&outcome.value)
                    .expect("JSON values always serialize"),
                OutputFormat::Table => render::table(&outcome.value),
            };
            // A closed pipe on stdout is not worth a panic.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
