use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use silting::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.body),
                None => std::io::stdout().write_all(out.body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(silting::app::EXIT_USAGE);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
