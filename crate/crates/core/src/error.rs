use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeavittError {
    #[error("arity mismatch: L_{left} vs L_{right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range 1..={arity}")]
    GeneratorOutOfRange { index: usize, arity: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("monomial violates the reduced-basis junction condition")]
    NotReduced,
    #[error("gcd({d}, {n}-1) != 1")]
    NotCoprime { n: usize, d: usize },
    #[error("d = {d} >= n = {n}; reduce d modulo n-1 first")]
    RequiresReduction { n: usize, d: usize },
    #[error("{d} does not divide {n}")]
    NotDivisible { n: usize, d: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("element is not homogeneous of degree 0")]
    NotDegreeZero,
    #[error("level {level} is below the y-length {needed} of a term")]
    LevelTooSmall { level: usize, needed: usize },
    #[error("d = 1 has no list to place")]
    EmptyConstruction,
    #[error("invalid placement: {0}")]
    InvalidPlacement(String),
    #[error("certificate node {node} ({label}) does not evaluate to its target")]
    CertificateMismatch { node: usize, label: String },
    #[error("certificate node {node} refers to a missing or later node")]
    MalformedCertificate { node: usize },
    #[error("defining relations fail: {0}")]
    RelationFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LeavittError>;
