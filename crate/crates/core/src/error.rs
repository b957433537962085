use std::fmt;

/// Errors surfaced by group construction, counting queries and oracles.
///
/// Internal invariant violations (a formula numerator not divisible by the
/// group order, a negative count) are bugs, not user errors, and panic
/// instead of returning a variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed group or element syntax.
    Parse(String),
    /// An argument outside its documented range (subset size, zero modulus, ...).
    Range(String),
    /// A structural limit was exceeded (group order cap, enumeration cap, oracle caps).
    CapExceeded {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    /// An element has the wrong number of coordinates for its group.
    ArityMismatch { expected: usize, got: usize },
    /// A brute-force table found two elements in the same e-class with
    /// different counts. This cannot happen if the counting theory is right,
    /// so it is reported as its own fatal diagnostic rather than folded into
    /// a generic failure.
    EClassConflict(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Range(msg) => write!(f, "range error: {msg}"),
            Error::CapExceeded {
                what,
                limit,
                requested,
            } => write!(
                f,
                "{what} cap exceeded: limit {limit}, requested {requested}"
            ),
            Error::ArityMismatch { expected, got } => {
                write!(
                    f,
                    "element arity mismatch: group has {expected} coordinates, element has {got}"
                )
            }
            Error::EClassConflict(msg) => {
                write!(f, "fatal: counts not constant on an e-class: {msg}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
