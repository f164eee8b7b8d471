use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use twistcox_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::iter::once("twistcox".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    match run(&cli, &echo) {
        Ok(report) => {
            let _ = write!(std::io::stdout().lock(), "{report}");
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
