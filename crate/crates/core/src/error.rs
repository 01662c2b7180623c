use thiserror::Error;

/// A triplet or dimension that violates the membership inequalities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("dimension n = {n} is below 2")]
    DimensionTooSmall { n: i64 },
    #[error("k = {k} is below 1 - min(0, d) = {min} for d = {d}")]
    RowBelowMinimum { d: i64, k: i64, min: i64 },
    #[error("k = {k} exceeds m = {m}")]
    EmptyBlock { k: i64, m: i64 },
    #[error("m = {m} exceeds n - max(0, d) = {max} for d = {d}, n = {n}")]
    RowAboveMaximum { d: i64, m: i64, max: i64, n: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed element at position {position}: {message}")]
pub struct ParseElementError {
    pub position: usize,
    pub message: String,
}

impl ParseElementError {
    pub(crate) fn new(position: usize, message: String) -> Self {
        ParseElementError { position, message }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("line {line}: expected {expected} characters, found {found}")]
    Ragged { line: usize, expected: usize, found: usize },
    #[error("line {line}, column {column}: expected '0' or '1', found {found:?}")]
    BadCharacter { line: usize, column: usize, found: char },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("not a rook matrix: {0}")]
    NotRook(String),
    #[error("dimension mismatch: {left} x {left} times {right} x {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not in M_n: {0}")]
    NotInMn(String),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("family parameter {value} outside {min}..={max} for n = {n}")]
    ParameterOutOfRange { value: i64, min: i64, max: i64, n: i64 },
    #[error("no closed-form order is known for family {0}")]
    NoFormula(String),
    #[error("{element} is not in {family}")]
    NotInFamily { element: String, family: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: i64, min: i64 },
    #[error("n = {n} is above the supported maximum {max}")]
    TooLarge { n: i64, max: i64 },
    #[error("direct pair enumeration at n = {n} exceeds the budget n <= {cap}")]
    BudgetExceeded { n: i64, cap: i64 },
    #[error("empty range {n_min}..={n_max}")]
    EmptyRange { n_min: i64, n_max: i64 },
}

/// Umbrella error for callers that mix parsing, validation and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseElementError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Census(#[from] CensusError),
}
