use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration or rewriting bound was exceeded.
    #[error("guard violation: {what} = {value} exceeds the limit {limit}")]
    Guard {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
    /// An argument lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Guard {
            what,
            value: value as u64,
            limit: limit as u64,
        })
    } else {
        Ok(())
    }
}
