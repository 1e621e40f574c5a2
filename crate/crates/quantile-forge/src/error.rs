//! Error type shared across the crate.

use std::fmt;

/// Errors produced by estimator, distribution, and simulation routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A sample must contain at least one observation.
    EmptySample,
    /// Samples must be free of NaN and infinite values.
    NonFiniteValue,
    /// A sample passed as pre-sorted was not in ascending order.
    UnsortedValues,
    /// A probability (quantile level) was outside the open interval (0, 1).
    ProbabilityOutOfRange(f64),
    /// The estimator type tag must be between 1 and 9.
    InvalidHfType(u8),
    /// An operation needed more observations than the sample provides.
    SampleTooSmall { needed: usize, got: usize },
    /// An order-statistic or weight index was outside its valid range.
    IndexOutOfRange { name: &'static str, value: usize, max: usize },
    /// A distribution parameter violated its positivity constraint.
    NonPositiveParameter { name: &'static str, value: f64 },
    /// An unrecognized distribution family or estimator name.
    UnknownName(String),
    /// A grid cell failed validation; `index` is its position in the grid.
    InvalidCell { index: usize, source: Box<Error> },
    /// A bracketing interval whose endpoints do not straddle a sign change.
    NoSignChange { lo: f64, hi: f64 },
    /// An iterative routine failed to converge within its iteration budget.
    NoConvergence { what: &'static str },
    /// Trial count must be at least one.
    ZeroTrials,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySample => write!(f, "sample is empty"),
            Error::NonFiniteValue => write!(f, "sample contains NaN or infinite values"),
            Error::UnsortedValues => write!(f, "values are not in ascending order"),
            Error::ProbabilityOutOfRange(p) => {
                write!(f, "probability {p} is outside the open interval (0, 1)")
            }
            Error::InvalidHfType(t) => write!(f, "estimator type {t} is not in 1..=9"),
            Error::SampleTooSmall { needed, got } => {
                write!(f, "sample of size {got} is too small (need at least {needed})")
            }
            Error::IndexOutOfRange { name, value, max } => {
                write!(f, "{name} = {value} is out of range (max {max})")
            }
            Error::NonPositiveParameter { name, value } => {
                write!(f, "parameter {name} = {value} must be positive")
            }
            Error::UnknownName(s) => write!(f, "unknown name: {s:?}"),
            Error::InvalidCell { index, source } => {
                write!(f, "cell #{index} is invalid: {source}")
            }
            Error::NoSignChange { lo, hi } => {
                write!(f, "no sign change between {lo} and {hi}")
            }
            Error::NoConvergence { what } => write!(f, "{what} did not converge"),
            Error::ZeroTrials => write!(f, "trial count must be at least 1"),
        }
    }
}

impl std::error::Error for Error {}
