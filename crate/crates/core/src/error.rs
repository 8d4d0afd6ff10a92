use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("series is not a power series: numerator has exponent {0} < 0")]
    NotPowerSeries(i64),
    #[error("denominator does not clear series")]
    DenominatorDoesNotClear,
    #[error("pole order mismatch at t = 1: expected {expected}, actual {actual}")]
    PoleOrder { expected: i64, actual: i64 },
    #[error("degree bound exceeded: {monomials} monomials in degree {degree} (limit {limit})")]
    DegreeBound {
        degree: i64,
        monomials: usize,
        limit: usize,
    },
    #[error("section spec not plausibly regular: coefficient of t^{degree} is {value}")]
    NotRegular { degree: usize, value: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("identity check failed: {0}")]
    Verification(String),
    #[error("round trip mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
