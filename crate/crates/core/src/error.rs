use std::fmt;

/// Errors surfaced by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division or remainder requested with a modulus that is not monic.
    NonMonicModulus,
    /// A Bezout identity was requested for a pair whose mod-2 reductions
    /// share a common factor.
    NotCoprimeMod2,
    /// An operation that requires an odd length received an even one.
    EvenLength(u64),
    /// gcd of two zero polynomials.
    GcdOfZeros,
    /// The defining law of the local chain ring failed: f^(2^k) did not
    /// reduce to twice a unit modulo f(-x^(2^k)).
    ChainRingLaw(String),
    /// An index or parameter fell outside its valid range.
    OutOfRange(String),
    /// Exhaustive search was requested on an ambient too large for it.
    OracleScaleLimit { rank: usize, max: usize },
    /// Canonical modules of different ambient ranks were mixed.
    RankMismatch { left: usize, right: usize },
    /// A full codeword walk was requested on a code above the size guard.
    EnumerationTooLarge(String),
    /// Malformed textual or JSON input.
    Parse(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonMonicModulus => write!(f, "non-monic modulus"),
            Error::NotCoprimeMod2 => write!(f, "factors not coprime mod 2"),
            Error::EvenLength(n) => write!(f, "length {n} is even; an odd length is required"),
            Error::GcdOfZeros => write!(f, "gcd(0, 0) is undefined"),
            Error::ChainRingLaw(msg) => write!(f, "chain ring law violated: {msg}"),
            Error::OutOfRange(msg) => write!(f, "out of range: {msg}"),
            Error::OracleScaleLimit { rank, max } => {
                write!(f, "oracle scale limit: ambient rank {rank} exceeds {max}")
            }
            Error::RankMismatch { left, right } => {
                write!(f, "ambient rank mismatch: {left} vs {right}")
            }
            Error::EnumerationTooLarge(msg) => write!(f, "enumeration too large: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
