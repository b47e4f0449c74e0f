use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A minimizing coefficient came out negative, so no ideal realizes the polynomial.
    #[error("not a Hilbert-Samuel polynomial: coefficient c_{index} = {value} is negative")]
    InvalidPolynomial { index: usize, value: String },

    #[error("{generators} generators exceed the inclusion-exclusion cap of {cap}; use the interpolation fallback")]
    TooManyGenerators { generators: usize, cap: usize },

    #[error("budget exceeded at depth {depth} after {frames} frames")]
    BudgetExceeded { depth: usize, frames: u64 },

    #[error("search window exhausted at {window}; need at least {needed}")]
    WindowExhausted { window: u64, needed: u64 },

    #[error("degree bound {0} too small for a lex-segment")]
    DegreeBoundTooSmall(u64),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }
}
