use thiserror::Error;

/// Errors raised by the library. Every failure mode has its own variant so
/// callers (and the CLI exit-code mapping) can tell them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational {0:?}: expected \"p\", \"-p\" or \"p/q\" with q > 0")]
    MalformedRational(String),

    #[error("algebra is not antisymmetric: [e_{}, e_{}] != -[e_{}, e_{}]", .0 + 1, .1 + 1, .1 + 1, .0 + 1)]
    NotAntisymmetric(usize, usize),

    #[error("matrix is not a derivation: Leibniz rule fails on (e_{}, e_{})", .0 + 1, .1 + 1)]
    NotADerivation(usize, usize),

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("{id}: missing binding for parameter {param}")]
    MissingBinding { id: String, param: String },

    #[error("{id}: unexpected binding for {param}; the entry has no such parameter")]
    ExtraBinding { id: String, param: String },

    #[error("{id}: parameter constraint violated ({constraint})")]
    ConstraintViolation { id: String, constraint: String },

    #[error("{context}: {message}")]
    Parse { context: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
