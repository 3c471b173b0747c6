use alloc::string::String;

/// Errors raised by the partition, incidence and transform layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("partitions of different ground sets ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("{lower} is not below {upper} in the refinement order")]
    Incomparable { lower: String, upper: String },
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
