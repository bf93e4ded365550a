use thiserror::Error;

/// Errors raised on malformed input or when an operation is asked of a
/// surface family that cannot answer it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected} coordinates, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("coefficient {0} exceeds the supported bound of 10^6")]
    CoefficientOutOfRange(i64),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("intersection matrix is not symmetric at ({0}, {1})")]
    AsymmetricForm(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation `{op}` is not supported on {family} surfaces")]
    Unsupported { op: &'static str, family: String },

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("class has negative arithmetic genus {0}; no irreducible member")]
    NegativeGenus(i64),

    #[error("restricted degree must be positive, got {0}")]
    NonPositiveDegree(i64),

    #[error("Clifford bound {bound} is inconsistent with genus {genus} (at most {max})")]
    InconsistentClifford { bound: i64, genus: i64, max: i64 },

    #[error("parity violation: D^2 + D.K = {0} is odd")]
    Parity(i64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
