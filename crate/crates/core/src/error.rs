use thiserror::Error;

/// Crate-wide error type. Every fallible operation returns one of these;
/// nothing panics on bad user input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("surgery knot {0} has zero Thurston-Bennequin invariant")]
    ZeroTbKnot(usize),

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("mismatch in {field}: got {got}, want {want}")]
    Mismatch {
        field: String,
        got: String,
        want: String,
    },

    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),

    #[error("{0} is not a half-integer")]
    NotHalfInteger(String),

    #[error("invalid continued fraction: {0}")]
    BadCFrac(String),

    #[error("invalid diagram: {0}")]
    BadDiagram(String),

    #[error("slope normalization did not terminate within {0} iterations")]
    NoTermination(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
