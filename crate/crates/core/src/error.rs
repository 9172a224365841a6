use alloc::string::String;
use core::fmt;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Composition or seaweed text could not be parsed.
    Parse { token: String, reason: &'static str },
    /// Top and bottom compositions have different sums.
    SumMismatch { top: usize, bottom: usize },
    /// `n` must be at least 1.
    ZeroSize,
    /// The spectrum is only defined when the meander is a single path.
    NotFrobenius { index: usize },
    /// Family parameters outside the family's domain.
    Domain { family: &'static str, constraint: &'static str },
    /// The family has no extended-spectrum formula.
    Unsupported { family: &'static str, what: &'static str },
    /// A predicate was asked about an empty multiset.
    EmptyMultiset,
    /// Block lemmas need coprime parameters.
    NotCoprime { k1: usize, k2: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { token, reason } => write!(f, "parse error at {token:?}: {reason}"),
            Error::SumMismatch { top, bottom } => {
                write!(f, "compositions have different sums: top {top}, bottom {bottom}")
            }
            Error::ZeroSize => f.write_str("n must be at least 1"),
            Error::NotFrobenius { index } => write!(
                f,
                "spectrum undefined: meander is not a single path (index {index})"
            ),
            Error::Domain { family, constraint } => {
                write!(f, "parameters outside the domain of {family}: {constraint}")
            }
            Error::Unsupported { family, what } => write!(f, "{family} has no {what} formula"),
            Error::EmptyMultiset => f.write_str("multiset is empty"),
            Error::NotCoprime { k1, k2 } => {
                write!(f, "gcd({k1}, {k2}) != 1: the seaweeds are not Frobenius")
            }
        }
    }
}

impl core::error::Error for Error {}
