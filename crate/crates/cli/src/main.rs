use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use framework_forge_cli::{run_command, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, out, err) = run_command(&cli);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(code as u8)
}
