use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field order {order} exceeds the configured cap {cap}")]
    UnsupportedOrder { order: u32, cap: u32 },
    #[error("cannot parse field specification {0:?}")]
    FieldSyntax(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not a nonzero singular idempotent")]
    NotIdempotent,
    #[error("matrix is not a nonzero nilpotent")]
    NotNilpotent,
    #[error("matrix is not a nonzero zero-divisor")]
    NotZeroDivisor,
    #[error("subgraph {0} has no vertices for this field")]
    EmptySubgraph(&'static str),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("matrix dimension {dim} exceeds the exact cap {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },
    #[error("x^2 - ({s})x + ({p}) is reducible over the rationals")]
    ReduciblePolynomial { s: String, p: String },
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("{what} is outside its domain at n = {n}")]
    OutOfDomain { what: String, n: u32 },
    #[error("characteristic polynomial keeps an unresolved factor of degree {degree}")]
    UnresolvedFactor { degree: usize },
    #[error("family graph {index} is not regular")]
    NotRegular { index: usize },
    #[error("index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
