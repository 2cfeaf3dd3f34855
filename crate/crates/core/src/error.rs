use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not doubled distinct: {0}")]
    NotDoubledDistinct(String),

    #[error("two-rowed array is malformed: {0}")]
    MalformedArray(String),

    #[error("core has a hook length divisible by t={0}")]
    CoreNotTCore(u32),

    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("expected cancellation failed: {0}")]
    NonCancellation(String),

    #[error("argument outside the valid domain: {0}")]
    DomainError(String),

    #[error("asymptotic hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("k must be odd, got {0}")]
    ParityError(u32),

    #[error("statistic {stat} is not defined over class {class}")]
    IncompatibleStatistic { stat: String, class: String },

    #[error("distribution is degenerate (zero variance)")]
    DegenerateDistribution,

    #[error("no partitions in the class at this size: {0}")]
    EmptyClass(String),

    #[error("not computable with the implemented routes: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code, used by the CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::NotDoubledDistinct(_) => "not_doubled_distinct",
            Error::MalformedArray(_) => "malformed_array",
            Error::CoreNotTCore(_) => "core_not_t_core",
            Error::OrderMismatch(_, _) => "order_mismatch",
            Error::NonCancellation(_) => "non_cancellation",
            Error::DomainError(_) => "domain_error",
            Error::HypothesisViolated(_) => "hypothesis_violated",
            Error::ParityError(_) => "parity_error",
            Error::IncompatibleStatistic { .. } => "incompatible_statistic",
            Error::DegenerateDistribution => "degenerate_distribution",
            Error::EmptyClass(_) => "empty_class",
            Error::Unsupported(_) => "unsupported",
        }
    }
}
