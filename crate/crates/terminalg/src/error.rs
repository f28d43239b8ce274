use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: String, got: String },

    #[error("matrix is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("entry `{name}` takes {expected} parameter(s), got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("parameter excluded for `{name}`: condition `{condition}` violated")]
    ExcludedParameter { name: String, condition: String },

    #[error("1-4*lambda = {value} is not a square in Q(i); Theta is undefined here")]
    ThetaNotSquare { value: String },

    #[error("automorphism parameters are degenerate: {0}")]
    DegenerateAut(String),

    #[error("split test precondition Ann(theta) ∩ Ann(A) = 0 fails; witness vector {witness}")]
    SplitPrecondition { witness: String },

    #[error("unknown nabla symbol `{0}` for this base")]
    UnknownNabla(String),

    #[error("{0}")]
    Other(String),
}

impl Error {
    pub fn shape(expected: impl Into<String>, got: impl Into<String>) -> Self {
        Error::Shape {
            expected: expected.into(),
            got: got.into(),
        }
    }
}
