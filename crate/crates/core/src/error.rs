use core::fmt;

use alloc::string::String;

/// Errors raised by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` was expected to be prime.
    NotPrime(u64),
    /// A prime power needs an exponent of at least one.
    ZeroExponent,
    /// `p^n` does not fit the machine word used for field sizes.
    PrimePowerTooLarge { p: u64, n: u32 },
    /// `q` is not a prime power.
    NotPrimePower(u64),
    /// The supplied modulus polynomial is not usable for `F_{p^n}`.
    BadModulus(String),
    /// The supplied modulus polynomial factors over `F_p`.
    ReducibleModulus,
    /// `gcd(u, v, N) != 1`, so `(u, v)` is not a point of `P^1(Z/NZ)`.
    NotInProjectiveLine { level: u64, u: i64, v: i64 },
    /// Level outside the supported range.
    InvalidLevel(u64),
    /// The prime divides the level.
    PrimeDividesLevel { p: u64, level: u64 },
    /// The operation needs an odd prime.
    EvenPrime,
    /// Level is not a squarefree composite.
    NotSquarefreeComposite(u64),
    /// Gonality tables only cover degrees 1..=3.
    DegreeUnsupported(u32),
    /// Degree must be at least one.
    ZeroDegree,
    /// Brute-force enumeration was asked for a field outside its guard.
    CensusGuard { q: u64, max: u64 },
    /// A vector or symbol belongs to a different level than the space.
    LevelMismatch { expected: u64, found: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroExponent => write!(f, "prime power exponent must be at least 1"),
            Error::PrimePowerTooLarge { p, n } => write!(f, "{p}^{n} is too large"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::BadModulus(msg) => write!(f, "bad modulus: {msg}"),
            Error::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            Error::NotInProjectiveLine { level, u, v } => {
                write!(f, "gcd({u}, {v}, {level}) != 1: not a point of P^1(Z/{level}Z)")
            }
            Error::InvalidLevel(n) => write!(f, "unsupported level {n}"),
            Error::PrimeDividesLevel { p, level } => write!(f, "{p} divides the level {level}"),
            Error::EvenPrime => write!(f, "an odd prime is required"),
            Error::NotSquarefreeComposite(n) => write!(f, "{n} is not a squarefree composite"),
            Error::DegreeUnsupported(d) => {
                write!(f, "gonality tables cover degrees 1..=3, got {d}")
            }
            Error::ZeroDegree => write!(f, "degree must be at least 1"),
            Error::CensusGuard { q, max } => {
                write!(f, "brute-force census needs odd q <= {max}, got {q}")
            }
            Error::LevelMismatch { expected, found } => {
                write!(f, "level mismatch: space has level {expected}, input has {found}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
