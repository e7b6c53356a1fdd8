use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("cost matrix is not shifted: row {row} increases at column {column}")]
    NotShifted { row: usize, column: usize },

    #[error("cost row {row} is not convex: second difference at t={at} is negative")]
    NotConvex { row: usize, at: usize },

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("enumeration budget of {budget} candidates exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid instance at `{path}`: {message}")]
    InvalidInstance { path: String, message: String },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn dims(context: &'static str, expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch {
            context,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
