use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sandlab::{run, Cli, MAX_CORE_VAR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let max_core = std::env::var(MAX_CORE_VAR).ok();
    match run(&cli, max_core.as_deref()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("sandlab: {e}");
            ExitCode::from(2)
        }
    }
}
