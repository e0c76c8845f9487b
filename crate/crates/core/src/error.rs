use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring descriptor mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),
    #[error("magma is not left-divisible (Q2 fails): witness column {0}")]
    NoDivision(usize),
    #[error("magma is not a rack: {0}")]
    NotARack(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("bracket does not satisfy the right Leibniz identity at triple {0:?}")]
    NotLeibniz([usize; 3]),
    #[error("comultiplication is not cocommutative: basis index {0}")]
    NotCocommutative(usize),
    #[error("no counit available")]
    MissingCounit,
    #[error("missing second multiplication (bar-star) tensor")]
    MissingBarstar,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("enumeration incomplete: {0}")]
    EnumerationIncomplete(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
