use thiserror::Error;

use crate::expr::ParseError;

/// Everything that makes a command exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Syntax {
        path: String,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Expr(#[from] ParseError),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Eval(String),
    #[error(transparent)]
    Core(#[from] modset::Error),
}
