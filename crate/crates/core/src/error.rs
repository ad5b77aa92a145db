use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {0} is too large (limit {1})")]
    FieldTooLarge(u64, u64),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("node pair contains a G2 bond ({0}, {1})")]
    G2Pair(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("enumeration cap of {0} elements exceeded")]
    CapExceeded(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
