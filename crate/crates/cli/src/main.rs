use std::process::ExitCode;

use clap::Parser;
use fwword_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let out = run(&Cli::parse());
    if let Some(s) = out.stdout {
        println!("{s}");
    }
    if let Some(s) = out.stderr {
        eprintln!("{s}");
    }
    ExitCode::from(out.code)
}
