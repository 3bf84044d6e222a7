use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coordinate handed in by the caller is non-finite or out of range.
    #[error("invalid coordinate: {0}")]
    InvalidCoordinate(String),
    /// The link does not follow the resolver URL grammar.
    #[error("malformed link: {0}")]
    MalformedLink(String),
    /// Numeric coordinates in a link fall outside the valid ranges.
    #[error("coordinate out of range: {0}")]
    OutOfRange(String),
    #[error("bad timestamp: {0}")]
    BadTimestamp(String),
    #[error("invalid host: {0}")]
    InvalidHost(String),
}

impl Error {
    /// Stable machine-readable code, shared with the conformance vectors.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidCoordinate(_) => "invalid_coordinate",
            Error::MalformedLink(_) => "malformed",
            Error::OutOfRange(_) => "out_of_range",
            Error::BadTimestamp(_) => "bad_timestamp",
            Error::InvalidHost(_) => "invalid_host",
        }
    }
}
