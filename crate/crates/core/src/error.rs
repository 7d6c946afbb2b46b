use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input outside the domain of the operation (zero sizes, malformed
    /// partitions, foreign group elements, duplicate labels, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested finite model does not fit the configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An internal identity that must hold did not (broken group table,
    /// non-integral Burnside average, mismatched components).
    #[error("consistency error: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
