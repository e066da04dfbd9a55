//! `polariton-mbc`: sweeps, spectra and the coupling-route comparison,
//! written as CSV (and optionally SVG) into an output directory.

mod commands;
mod config;
mod csv;
mod error;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use crate::commands::Command;
use crate::config::Config;
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "polariton-mbc",
    version,
    about = "Open-cavity polariton spectra and dissipation rates",
    after_help = "Every config key is also accepted as `--section.key VALUE`."
)]
struct Cli {
    #[arg(value_enum)]
    command: Command,

    /// Config file with `[section]` headers and `key = value` lines
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Override a config entry; repeatable
    #[arg(long = "set", value_name = "SECTION.KEY=VALUE")]
    set: Vec<String>,

    /// Output directory (same as `--set output.dir=DIR`)
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Also write SVG plots
    #[arg(long)]
    svg: bool,
}

fn resolve(cli: &Cli) -> Result<Config, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    for spec in &cli.set {
        cfg.apply_override(spec)?;
    }
    if let Some(dir) = &cli.out {
        cfg.apply_override(&format!("output.dir={}", dir.display()))?;
    }
    if cli.svg {
        cfg.apply_override("output.svg=true")?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = config::expand_key_flags(std::env::args());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match resolve(&cli).and_then(|mut cfg| commands::run(cli.command, &mut cfg)) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let mut msg = format!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                msg.push_str(&format!(": {s}"));
                source = s.source();
            }
            eprintln!("{msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
