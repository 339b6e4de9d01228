mod cli;

use std::process::ExitCode;

use clap::Parser;
use cli::{build_table, suite, Cli, Command, Failure, Format, RunConfig};

fn emit(cfg: &RunConfig, text: &str) -> Result<(), Failure> {
    match &cfg.output {
        Some(path) => std::fs::write(path, text).map_err(|e| cli::input_error(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(cfg: &RunConfig) -> Result<bool, Failure> {
    let items = suite::items(cfg)?;
    let results = suite::run(&items);
    let all_pass = results.iter().all(|(_, r)| r.is_ok());
    let text = match cfg.format {
        Format::Json => {
            let v: Vec<_> = results
                .iter()
                .map(|(name, r)| match r {
                    Ok(d) => serde_json::json!({"name": name, "pass": true, "detail": d}),
                    Err(d) => serde_json::json!({"name": name, "pass": false, "detail": d}),
                })
                .collect();
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        Format::Csv => {
            let mut s = String::from("name,verdict\n");
            for (name, r) in &results {
                s.push_str(&format!("{name},{}\n", if r.is_ok() { "PASS" } else { "FAIL" }));
            }
            s
        }
        Format::Text => results
            .iter()
            .map(|(name, r)| match r {
                Ok(d) => format!("PASS {name}: {d}\n"),
                Err(d) => format!("FAIL {name}: {d}\n"),
            })
            .collect(),
    };
    emit(cfg, &text)?;
    Ok(all_pass)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Homology(cfg) => {
            let r = build_table(&cfg)?;
            emit(&cfg, &r.render(cfg.format))?;
            Ok(true)
        }
        Command::Table(cfg) => {
            let r = build_table(&cfg)?;
            if r.dictionary.is_none() {
                return Err(cli::input_error("no ordinary-homology dictionary applies to this instance"));
            }
            emit(&cfg, &r.side_by_side())?;
            Ok(true)
        }
        Command::Verify(cfg) => verify(&cfg),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
