use alloc::string::String;

/// Errors raised by the engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// The requested object is outside what the known fusion/flow rules determine.
    #[error("{0}")]
    Undetermined(String),
    /// Input violates a precondition of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A module handed to the oracle has a non-semisimple `N` or `E` action.
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
    /// Tensor statistics match no (or more than one) candidate decomposition.
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    /// An internal identity that must hold did not.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = core::result::Result<T, Error>;
