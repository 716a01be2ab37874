use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use cubinv::args::{Cli, Command, VerifyCommand};
use cubinv::commands::{self, Common};
use cubinv::pool;
use cubinv::record::{self, RunRecord};
use cubinv::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let start = Instant::now();
    let workers = pool::worker_count(cli.workers)?;
    let common = Common { workers, format: cli.format, timing: !cli.no_timing };
    let out = commands::run(&cli.command, &common)?;
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    match &cli.output {
        Some(path) => std::fs::write(path, &out.text).map_err(CliError::io(path))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(out.text.as_bytes()).map_err(CliError::io("<stdout>"))?;
        }
    }
    let code = out.exit_code();
    let log = cli.record.clone().or_else(|| match &cli.command {
        Command::Verify(VerifyCommand::Positivity(a)) => a.checkpoint.as_ref().map(|d| d.join("runs.jsonl")),
        _ => None,
    });
    if let Some(log) = log {
        let config = commands::config_of(&cli.command, workers);
        let rec = RunRecord::new(config, start.elapsed().as_secs_f64(), code, out.text.as_bytes(), &out.lineage);
        record::append(&log, rec)?;
    }
    if code == 3 {
        eprintln!("error: an internal cross-check failed; see the report");
    }
    Ok(code)
}
