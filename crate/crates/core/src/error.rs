use thiserror::Error;

/// Errors raised by the engine. Mathematical outcomes such as an inconsistent
/// Ricci system are values, not errors; these variants are for misuse and
/// malformed input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("expected a homogeneous form of degree {expected}, found {found}")]
    Grade { expected: usize, found: String },

    #[error("unknown subalgebra `{0}`")]
    UnknownAlgebra(String),

    #[error("unknown torsion family `{0}`")]
    UnknownFamily(String),

    #[error("unknown curvature case `{0}`")]
    UnknownCase(String),

    #[error("missing parameter `{0}`")]
    MissingParameter(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    #[error("`{0}` is not bracket-closed")]
    NotClosed(String),

    #[error("`{sub}` is not contained in `{sup}`")]
    NotContained { sub: String, sup: String },

    #[error("vectors do not span R^8: {0}")]
    NotSpanning(String),

    #[error("undecided: {0}")]
    Undecided(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
