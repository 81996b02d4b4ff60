use std::path::PathBuf;

/// Errors produced while building or serializing a calendar layout.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("date out of supported range: {0}")]
    Range(String),

    #[error("grid too small: {needed} months do not fit in {rows} x {cols}")]
    Capacity { needed: usize, rows: usize, cols: usize },

    #[error("input table is empty")]
    EmptyInput,

    #[error("no non-missing values to scale")]
    EmptyDomain,

    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("{0}")]
    Schema(String),

    #[error("unknown locale '{0}'")]
    UnknownLocale(String),

    #[error("malformed locale file {path}, line {line}: {message}")]
    LocaleParse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
