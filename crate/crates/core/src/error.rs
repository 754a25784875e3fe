use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidPrime(u32),
    NonInvertible,
    ModulusMismatch { left: u32, right: u32 },
    RingMismatch,
    DimensionMismatch { expected: usize, got: usize },
    NotHomogeneous,
    /// Truncation bounds too small to certify the requested data.
    IncreaseBounds(String),
    /// A random construction did not behave generically; retry with a new seed.
    NotGeneric(String),
    /// Retry budget exhausted.
    GenericityExhausted { attempts: u32, last: String },
    NotInIdeal,
    PeriodNotReached,
    OutOfRange(String),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPrime(p) => write!(f, "{p} is not an odd prime below 2^31"),
            Error::NonInvertible => write!(f, "non-invertible"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::RingMismatch => write!(f, "operands live in different rings"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::IncreaseBounds(what) => write!(f, "increase bounds: {what}"),
            Error::NotGeneric(what) => write!(f, "points not general, retry seed: {what}"),
            Error::GenericityExhausted { attempts, last } => {
                write!(f, "no generic configuration after {attempts} attempts ({last})")
            }
            Error::NotInIdeal => write!(f, "form does not lie in the ideal"),
            Error::PeriodNotReached => write!(f, "period not reached, increase steps"),
            Error::OutOfRange(what) => write!(f, "out of range: {what}"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
