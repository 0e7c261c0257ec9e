mod args;
mod commands;
mod config;
mod error;
mod output;
mod verify;

use args::{Cli, Command, VerifyArgs};
use clap::Parser;
use commands::Outcome;
use error::{CliError, CliResult};
use output::RunManifest;
use std::process::ExitCode;

const THREADS_ENV: &str = "SLE_DUO_THREADS";

fn init_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))
}

fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let results = verify::run(a.level, verify::Context { tamper: a.tamper_b_sign });
    let rows: Vec<_> = results.iter().map(|r| (r.name.to_string(), r.passed, r.detail.clone())).collect();
    print!("{}", output::table(&rows));
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    println!("{} of {} checks passed", results.len() - failed.len(), results.len());
    let mut outputs = Vec::new();
    if let Some(out) = &a.out {
        output::write(out, &output::to_json(&results)?)?;
        outputs.push(out.clone());
    }
    let failure = (!failed.is_empty()).then(|| CliError::Disagreement(format!("failed: {}", failed.join(", "))));
    Ok(Outcome { outputs, failure })
}

fn run(cli: &Cli) -> CliResult<()> {
    init_threads()?;
    let started = output::now();
    let cmd = &cli.command;
    let (outcome, mut manifest) = match cmd {
        Command::Prob(a) => (commands::prob(a)?, RunManifest::new(cmd.name(), a, None, started)?),
        Command::Schramm(a) => (commands::schramm(a)?, RunManifest::new(cmd.name(), a, None, started)?),
        Command::Simulate(a) => (commands::simulate(a)?, RunManifest::new(cmd.name(), a, Some(a.seed), started)?),
        Command::Qhall(a) => (commands::qhall(a)?, RunManifest::new(cmd.name(), a, None, started)?),
        Command::Kzero(a) => (commands::kzero(a)?, RunManifest::new(cmd.name(), a, None, started)?),
        Command::Verify(a) => (verify(a)?, RunManifest::new(cmd.name(), a, None, started)?),
    };
    if let Some(path) = &cli.config {
        manifest.parameters.insert("config".into(), path.display().to_string().into());
    }
    if !outcome.outputs.is_empty() {
        let paths: Vec<&std::path::Path> = outcome.outputs.iter().map(|p| p.as_path()).collect();
        manifest.finish(&paths)?;
    }
    outcome.failure.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let argv = match config::expand(std::env::args_os().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("sle-duo: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sle-duo: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
