use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Domain` means an argument violated a documented precondition (bad sample
/// size, shape parameter of the wrong sign, probability outside (0,1), a point
/// outside the closure of a support). `Numerical` means an iterative kernel
/// failed to reach its tolerance; the message carries diagnostics.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

/// Shared guard for the `n >= 2` precondition of every finite-sample kernel.
pub(crate) fn check_n(n: u64) -> Result<()> {
    if n < 2 {
        Err(Error::domain(format!("sample size n must be >= 2, got {n}")))
    } else {
        Ok(())
    }
}
