//! Error taxonomy shared by every module.
//!
//! Two failure categories cover the whole crate:
//!
//! * [`Error::Domain`] — the caller asked for something outside an
//!   operation's contract (negative time, `a > L`, an odd inversion order,
//!   an unparsable grid, ...). The CLI maps these to exit code 2.
//! * [`Error::Accuracy`] — the inputs were legal but an internal numeric
//!   process could not deliver its advertised accuracy (a series that did
//!   not converge inside its term cap, a quadrature that stalled, a
//!   negative density residue beyond the clamp band). These indicate a
//!   bug or a pathological regime, not caller misuse.

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Input outside an operation's documented domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Internal numeric process failed to meet its accuracy contract.
    #[error("accuracy error: {0}")]
    Accuracy(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Convenience constructor for [`Error::Domain`].
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Convenience constructor for [`Error::Accuracy`].
    pub fn accuracy(msg: impl Into<String>) -> Self {
        Error::Accuracy(msg.into())
    }
}
