mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn emit(cli: &Cli, outcome: &commands::Outcome) -> Result<(), String> {
    let json = || serde_json::to_string_pretty(&outcome.report).expect("report serialises");
    match cli.json.as_deref() {
        Some("-") => println!("{}", json()),
        Some(path) => {
            std::fs::write(path, json() + "\n").map_err(|e| format!("cannot write {path}: {e}"))?;
            print!("{}{}", outcome.summary, outcome.report.to_table());
        }
        None => print!("{}{}", outcome.summary, outcome.report.to_table()),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match commands::run(&cli.command) {
        Ok(o) => o,
        Err(commands::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = emit(&cli, &outcome) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if outcome.report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
