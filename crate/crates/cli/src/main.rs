use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use hodge_cones_cli::commands::{run, Cli};
use hodge_cones_cli::config::thread_cap;
use hodge_cones_cli::error::CliError;

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|()| out.flush());
}

fn fail(err: &CliError) -> ExitCode {
    emit(&err.to_json().to_string());
    eprintln!("error: {err}");
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::usage(e.to_string().trim_end())),
    };
    match thread_cap(std::env::var("HODGE_CONES_THREADS").ok().as_deref()) {
        Ok(Some(t)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
                eprintln!("warning: could not size the thread pool: {e}");
            }
        }
        Ok(None) => {}
        Err(e) => return fail(&e),
    }
    match run(&cli) {
        Ok(report) => {
            emit(&report.render(cli.format));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(&e),
    }
}
