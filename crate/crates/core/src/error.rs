use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("malformed chord diagram: {0}")]
    MalformedDiagram(String),
    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series constant term is not 1")]
    NonUnitSeries,
    #[error("odd Casimir variable C{0} present where only even ones are allowed")]
    OddVariable(usize),
    #[error("{0} is not odd")]
    NotOdd(usize),
    #[error("coefficient equation at order {order} is not linear in C{target}")]
    NonLinearEquation { order: usize, target: usize },
    #[error("coefficient equation at order {0} does not vanish")]
    InconsistentSeries(usize),
    #[error("size guard exceeded: {terms} index tuples, limit {limit}")]
    SizeGuard { terms: u128, limit: u128 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("{0} out of supported range")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
