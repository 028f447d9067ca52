use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant has a stable machine-readable [`Error::kind`] used by the
/// command-line front end when reporting failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("weights differ: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the brute-force bound {bound}")]
    SizeBound { degree: usize, bound: usize },

    #[error("coefficient of weight {weight} requested but the family is only known up to weight {cap}")]
    CapExceeded { weight: usize, cap: usize },

    #[error("series cap {cap} is below the required {needed}")]
    InsufficientCap { needed: usize, cap: usize },

    #[error("logarithm needs constant term 1")]
    LogConstantTerm,

    #[error("exponential needs constant term 0")]
    ExpConstantTerm,

    #[error("value is not invertible: {0}")]
    NotInvertible(String),

    #[error("non-integral count: {0}")]
    NonIntegral(String),

    #[error("invalid cover profile: {0}")]
    InvalidProfile(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("formula outside its valid range: {0}")]
    DegenerateRange(String),

    #[error("incomplete count table: {0}")]
    IncompleteTable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::Parse(_) => "parse",
            Error::WeightMismatch { .. } => "weight_mismatch",
            Error::SizeBound { .. } => "size_bound",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InsufficientCap { .. } => "insufficient_cap",
            Error::LogConstantTerm => "log_constant_term",
            Error::ExpConstantTerm => "exp_constant_term",
            Error::NotInvertible(_) => "not_invertible",
            Error::NonIntegral(_) => "non_integral",
            Error::InvalidProfile(_) => "invalid_profile",
            Error::DegreeMismatch(_) => "degree_mismatch",
            Error::DegenerateRange(_) => "degenerate_range",
            Error::IncompleteTable(_) => "incomplete_table",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
