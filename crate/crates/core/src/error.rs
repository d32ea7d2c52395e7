use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("the empty composition has no {0}")]
    EmptyComposition(&'static str),

    #[error("{0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expected basis {expected}, found {found} (convert first)")]
    BasisMismatch { expected: &'static str, found: &'static str },

    #[error("word is not in the z-subalgebra (must be 1 or end in y)")]
    WordNotInH1,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("0 has no inverse mod {0}")]
    NotInvertible(u64),

    #[error("denominator {den} is divisible by the prime {p}")]
    DenominatorDivisible { den: String, p: u64 },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("relation table: {0}")]
    Table(String),

    #[error("fit: the systems at the given primes are inconsistent")]
    FitInconsistent,

    #[error("fit: could not reconstruct coefficients within bounds; supply more or larger primes")]
    FitNeedMorePrimes,

    #[error("fit: {0}")]
    FitDegenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
