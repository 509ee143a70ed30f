use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {p}^{degree} exceeds the supported size")]
    FieldTooLarge { p: u64, degree: usize },
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("length m = {m} is not coprime to q = {q}")]
    NotCoprime { m: usize, q: u64 },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("element is not a root of x^m - lambda")]
    NotARoot,
    #[error("defining set is not closed under the Frobenius map")]
    NotClosed,
    #[error("invalid defining set: {0}")]
    InvalidDefiningSet(String),
    #[error("invalid eigenvalue set: {0}")]
    InvalidEigenvalueSet(String),
    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,
    #[error("enumeration budget exceeded: {needed} work units, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
    #[error("coefficient does not lie in the base field")]
    DescentFailure,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
