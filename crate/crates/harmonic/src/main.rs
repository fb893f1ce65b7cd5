use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use harmonic::{run, Cli};

fn main() -> ExitCode {
    let out = run(Cli::parse());
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
