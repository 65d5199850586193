use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use satura::{run, CliError, Config, Format};
use satura_core::MonomialOrder;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

/// Runs a script of ring and map declarations and commands.
#[derive(Debug, Parser)]
#[command(name = "satura", version)]
struct Args {
    /// Script file; reads standard input when absent or `-`.
    script: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "human")]
    format: FormatArg,
    /// Degree bound for `scan-saturation` and `seminormal` without `degree N`.
    #[arg(long, default_value_t = satura_core::saturation::DEFAULT_SCAN_BOUND)]
    degree_bound: u32,
    /// Monomial order of every declared ring.
    #[arg(long, value_enum, default_value = "grevlex")]
    order: OrderArg,
    /// Leave out elapsed times so output is byte-stable.
    #[arg(long)]
    no_timing: bool,
}

fn read_script(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            return std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })
        }
        _ => std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: "standard input".to_string(),
                source,
            })?,
    };
    Ok(text)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let text = match read_script(args.script.as_ref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let order = match args.order {
        OrderArg::Lex => MonomialOrder::Lex,
        OrderArg::Grevlex => MonomialOrder::Grevlex,
    };
    let format = match args.format {
        FormatArg::Human => Format::Human,
        FormatArg::Json => Format::Json,
    };
    let config = Config {
        degree_bound: args.degree_bound,
        timing: !args.no_timing,
    };
    let out = run(&text, order, &config, format);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit_code as u8)
}
