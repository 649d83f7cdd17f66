use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size limit exceeded: more than {limit} {what}")]
    SizeLimit { what: &'static str, limit: usize },
    #[error("not a groupoid: arrow {arrow} has no inverse")]
    NotAGroupoid { arrow: String },
    #[error("not a Picard groupoid")]
    NotPicard,
    #[error("truncation bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("degree {degree} outside truncation {truncation}")]
    DegreeOutOfRange { degree: usize, truncation: usize },
    #[error("truncation {0} is too small, at least 2 is needed")]
    TruncationTooSmall(usize),
    #[error("mismatched endpoints: {0}")]
    Mismatch(String),
    #[error("tensor product is not total on this structure")]
    PartialTensor,
    #[error("unknown standard map `{0}`")]
    UnknownStandardMap(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
