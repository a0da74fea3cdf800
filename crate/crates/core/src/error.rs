use thiserror::Error;

/// Malformed or out-of-domain input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("negative partition entry {0}")]
    NegativePart(i64),
    #[error("partition entry {0} is too large")]
    PartTooLarge(i64),
    #[error("zero modulus: Z/0 is not a finite group")]
    ZeroModulus,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("set operations need nonempty operands")]
    EmptySet,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("group order overflows 128 bits")]
    Overflow,
    #[error("bound must be at least 1")]
    ZeroBound,
}

/// An instance too large for the configured limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    #[error("oracle bound exceeded: the {prime}-part has order {order}, limit is {limit}")]
    OracleBound { prime: u64, order: u128, limit: u128 },
    #[error("enumeration bound {bound} exceeds the limit {limit}")]
    EnumerationBound { bound: u128, limit: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Resource(#[from] ResourceError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
