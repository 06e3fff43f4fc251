mod args;
mod commands;
mod output;
mod source;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use ramlab::Error;
use serde_json::json;

use args::{Cli, Command};

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;
const EXIT_COMPUTATION: u8 = 4;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::VerificationFailed(_) => EXIT_VERIFICATION,
        Error::BadParams(_)
        | Error::UnknownName(_)
        | Error::DegreeTooSmall(_)
        | Error::POutOfRange(_)
        | Error::LambdaOutOfRange(_) => EXIT_USAGE,
        _ => EXIT_COMPUTATION,
    }
}

fn report(kind: &str, message: String, code: u8) -> ExitCode {
    eprintln!("{}", json!({ "error": kind, "message": message, "exit_code": code }));
    ExitCode::from(code)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("RAMLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| format!("RAMLAB_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return report("usage", e.to_string().trim_end().to_string(), EXIT_USAGE),
    };
    if let Err(message) = configure_threads() {
        return report("usage", message, EXIT_USAGE);
    }
    let result = match &cli.command {
        Command::Build(c) => commands::build(c),
        Command::Metrics(c) => commands::metrics(c),
        Command::Mix(c) => commands::mix(c),
        Command::Profile(c) => commands::profile(c),
        Command::Spectrum(c) => commands::spectrum(c),
        Command::Decompose(c) => commands::decompose(c),
        Command::Certify(c) => commands::certify_cmd(c),
        Command::Theory(c) => commands::theory(c),
        Command::Tree(c) => commands::tree(c),
    };
    match result {
        Ok(manifest) => {
            print!("{manifest}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = exit_code(&err);
            let kind = if code == EXIT_VERIFICATION { "verification" } else if code == EXIT_USAGE { "usage" } else { "computation" };
            report(kind, err.to_string(), code)
        }
    }
}
