use std::fs;
use std::process::ExitCode;

use clap::Parser;
use galilei::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    let (report, text) = match cli::run(&args) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let out = cli::render(&args, &report, &text);
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &out) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        for v in report.failures() {
            eprintln!("FAILED: {}", v.claim);
        }
        ExitCode::FAILURE
    }
}
