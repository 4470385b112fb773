use thiserror::Error;

/// Errors raised by every fallible operation in the crate.

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0}")]
    Structural(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular map: {0}")]
    Singular(String),
    #[error("not a Lie algebra morphism: {0}")]
    NotLieMorphism(String),
    #[error("not an intertwiner: {0}")]
    NotIntertwiner(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("cocycles not cohomologous under the given maps")]
    NotCohomologous,
    #[error("not a cocycle")]
    NotCocycle,
    #[error("invalid quadruple: {0}")]
    InvalidQuadruple(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Input problems (unreadable, malformed or structurally invalid data)
    /// as opposed to well-formed inputs that fail a mathematical check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(_) | Error::Structural(_) | Error::Parse(_) | Error::Io(_)
        )
    }
}
