use std::fmt;

/// One-based line and column (in characters) of a byte offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl Location {
    pub fn at(text: &str, offset: usize) -> Location {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        Location {
            line,
            column: before[line_start..].chars().count() + 1,
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{location}: syntax error: expected {}, found {found}", list(expected))]
    Syntax {
        location: Location,
        expected: Vec<String>,
        found: String,
    },
    #[error("{location}: name error: {message}")]
    Name { location: Location, message: String },
    #[error("{location}: {source}")]
    Domain {
        location: Location,
        source: satura_core::Error,
    },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn list(items: &[String]) -> String {
    match items {
        [one] => format!("`{one}`"),
        _ => format!(
            "one of {}",
            items
                .iter()
                .map(|s| format!("`{s}`"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

impl CliError {
    /// 1 for domain errors, 2 for usage, syntax and name errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain { .. } => 1,
            CliError::Syntax { .. }
            | CliError::Name { .. }
            | CliError::Usage(_)
            | CliError::Io { .. } => 2,
        }
    }
}
