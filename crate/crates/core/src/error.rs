use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("invalid order {0}: must be positive")]
    InvalidOrder(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element {element} outside group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("row {row} out of range for matrix with {rows} rows")]
    RowOutOfRange { row: usize, rows: usize },
    #[error("not a difference matrix: {0}")]
    InvalidDifferenceMatrix(String),
    #[error("difference matrix is not normalized")]
    NotNormalized,
    #[error("expected lambda {expected}, found {found}")]
    LambdaMismatch { expected: usize, found: usize },
    #[error("unknown built-in difference matrix {0:?}")]
    UnknownBuiltin(String),
    #[error("symbol {symbol} occurs {found} times, expected {expected}")]
    SymbolCount {
        symbol: usize,
        found: usize,
        expected: usize,
    },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
