use thiserror::Error;

/// Errors raised by the library.
///
/// `InvariantViolation` marks a bug or a broken internal constant; everything
/// else is attributable to the caller's input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("conductor {from} does not divide {to}")]
    InvalidConductor { from: u32, to: u32 },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("{group}: constraint `{constraint}` violated ({detail})")]
    Constraint {
        group: String,
        constraint: &'static str,
        detail: String,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvariantViolation(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
