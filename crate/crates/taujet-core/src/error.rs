use alloc::string::String;
use core::fmt;

/// Errors surfaced by the exact pipeline.
///
/// `Domain` marks inputs outside an operation's mathematical domain (division
/// by zero, a reciprocal of a series with vanishing constant term, a schedule
/// parameter out of range). `Resource` marks requests that are mathematically
/// fine but exceed a configured size cap, such as asking for the dense
/// polynomial form of a cascade past the depth cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the operation's domain.
    Domain(String),
    /// Request exceeds a configured size limit.
    Resource(String),
}

impl Error {
    /// A domain error with the given message.
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// A resource-limit error with the given message.
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Resource(msg) => write!(f, "resource limit: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
