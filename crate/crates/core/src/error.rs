use thiserror::Error;

/// Errors raised by the exact and floating-point routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("p-component undefined: {0}")]
    Undefined(String),
    #[error("series has no multiplicative inverse (constant term is not a unit)")]
    NonUnitSeries,
    #[error("logarithm needs a series with constant term 1")]
    LogConstantTerm,
    #[error("G_{n_max} is not p-integral for p = {p} (need n_max <= p - 2)")]
    GregoryOutOfRange { n_max: usize, p: u64 },
    #[error("tail bound {bound:e} does not meet tolerance/2 = {half_tol:e}")]
    TailBound { bound: f64, half_tol: f64 },
    #[error("unstable recurrence: precision doubling disagrees at n = {0}")]
    UnstableRecurrence(usize),
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cache i/o: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
