use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus mismatch: x^{left}-1 vs x^{right}-1")]
    ModulusMismatch { left: usize, right: usize },

    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("m = {0} is even; an odd modulus is required")]
    EvenModulus(usize),

    #[error("{op}: {reason}")]
    Precondition { op: &'static str, reason: String },

    #[error("enumeration too large: dimension {k} exceeds the limit of {limit}")]
    EnumerationTooLarge { k: usize, limit: usize },

    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("generator is not in standard form [I_k | A]")]
    NotStandardForm,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("oracle disagreement: {0}")]
    Counterexample(String),
}

impl Error {
    pub(crate) fn precondition(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Precondition {
            op,
            reason: reason.into(),
        }
    }
}
