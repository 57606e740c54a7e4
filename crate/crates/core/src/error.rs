use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed or incompatible input (mismatched variables, non-strict partition, ...).
    Usage(String),
    /// A mathematical precondition failed (non-invertible constant term, pole, ...).
    Domain(String),
    /// A floating point evaluation left its reliable range.
    Range(String),
    /// An operator produced terms above the weight bound of its carrier.
    Truncation { weight: i64, bound: i64 },
    /// Two constraints of an over-determined recursion disagree.
    Inconsistent { constraint: i64, detail: String },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Usage(m) => write!(f, "usage error: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Range(m) => write!(f, "range error: {m}"),
            Error::Truncation { weight, bound } => {
                write!(f, "truncation error: weight {weight} exceeds bound {bound}")
            }
            Error::Inconsistent { constraint, detail } => {
                write!(f, "inconsistent recursion at constraint L_{constraint}: {detail}")
            }
        }
    }
}

impl core::error::Error for Error {}
