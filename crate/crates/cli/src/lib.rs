//! Script language, command dispatcher and report rendering on top of
//! `satura-core`.

pub mod error;
pub mod exec;
pub mod render;
pub mod script;

pub use crate::error::{CliError, Location};
pub use crate::exec::{execute, Config, Outcome, Record, Report};
pub use crate::render::{render, Format};
pub use crate::script::{parse_script, Script};

use satura_core::MonomialOrder;

/// Output of a whole run: rendered report, diagnostics and exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Parses and executes `text`; the rendered records produced before an error
/// are kept.
pub fn run(text: &str, order: MonomialOrder, config: &Config, format: Format) -> RunOutput {
    let script = match parse_script(text, order) {
        Ok(s) => s,
        Err(e) => {
            return RunOutput {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                exit_code: e.exit_code(),
            }
        }
    };
    let (report, error) = execute(&script, config);
    let stdout = render(&report, format);
    let mut stderr = String::new();
    if format == Format::Json && !report.records.is_empty() {
        stderr.push_str(render::TRUST_BANNER);
        stderr.push('\n');
    }
    let exit_code = match error {
        Some(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            e.exit_code()
        }
        None => 0,
    };
    RunOutput {
        stdout,
        stderr,
        exit_code,
    }
}
