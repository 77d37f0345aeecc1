use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SdError {
    #[error("bad argument: {0}")]
    BadArgument(String),

    #[error("degenerate support: pooled minimum equals pooled maximum ({0})")]
    DegenerateSupport(f64),

    #[error("non-positive price {value} at position {index}")]
    NonPositivePrice { index: usize, value: f64 },

    #[error("non-finite observation {value} at position {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("sample lengths differ: {n1} vs {n2}")]
    LengthMismatch { n1: usize, n2: usize },

    #[error("subsampling requires block sizes b1 and b2")]
    MissingSubsampleSize,
}

pub type Result<T> = std::result::Result<T, SdError>;

pub(crate) fn bad_arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(SdError::BadArgument(msg.into()))
}
