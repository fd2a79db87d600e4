use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use polyloop::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.out.is_none() {
                let mut stdout = std::io::stdout().lock();
                if writeln!(stdout, "{}", report.body).is_err() {
                    return ExitCode::from(2);
                }
            }
            if report.code != 0 {
                eprintln!("polyloop: verification failed");
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("polyloop: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
