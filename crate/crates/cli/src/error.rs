use std::path::PathBuf;

/// A syntax or validation error at a position in an input file (1-based).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("cannot read {path}: {source}", path = .path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] dircat::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 4 when a theorem's hypotheses fail, 2 for every input or build problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(dircat::Error::HypothesesNotMet(_)) => 4,
            _ => 2,
        }
    }
}
