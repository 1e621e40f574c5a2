//! Quantile estimators: the nine classical interpolation rules plus the
//! exponential-model corrected family, behind one dispatch type.

mod exponential;
mod hf;

pub use exponential::{
    exp_order_stat_mean, exp_order_stat_var, expon_frac, optimal_weights, q10_quantile,
    q11_general, q11_mle, q11_variance, q7_exp_bias, WeightVector,
};
pub use hf::hf_quantile;

use crate::error::Error;
use crate::sample::{QuantileQuery, SortedSample};
use std::fmt;
use std::str::FromStr;

/// Identifies one estimator. Parses from / prints to the compact names used
/// in configs and CSV output: `hf1`..`hf9`, `q10`, `q11:<i>:<m>`, `q11mle`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EstimatorId {
    /// Classical sample quantile, definitions 1-9.
    Hf(u8),
    /// Two-point exponential bias-corrected estimate.
    Q10,
    /// Weighted multi-point estimate anchored at order statistic `i`
    /// with `m` upper terms.
    Q11General { i: usize, m: usize },
    /// Exponential maximum-likelihood plug-in.
    Q11Mle,
}

impl EstimatorId {
    /// Build an HF variant, rejecting types outside 1..=9.
    pub fn hf(hf_type: u8) -> Result<Self, Error> {
        if (1..=9).contains(&hf_type) {
            Ok(Self::Hf(hf_type))
        } else {
            Err(Error::InvalidHfType(hf_type))
        }
    }

    /// Check that this estimator can run on a sample of size `n`.
    pub fn validate_for(&self, n: usize) -> Result<(), Error> {
        match *self {
            Self::Hf(t) => {
                if !(1..=9).contains(&t) {
                    return Err(Error::InvalidHfType(t));
                }
                if n == 0 {
                    return Err(Error::SampleTooSmall { needed: 1, got: 0 });
                }
            }
            Self::Q10 => {
                if n < 2 {
                    return Err(Error::SampleTooSmall { needed: 2, got: n });
                }
            }
            Self::Q11General { i, m } => {
                if n == 0 {
                    return Err(Error::SampleTooSmall { needed: 1, got: 0 });
                }
                if i > n - 1 {
                    return Err(Error::IndexOutOfRange {
                        name: "i",
                        value: i,
                        max: n - 1,
                    });
                }
                if m < 1 || m > n - i {
                    return Err(Error::IndexOutOfRange {
                        name: "m",
                        value: m,
                        max: n - i,
                    });
                }
            }
            Self::Q11Mle => {
                if n == 0 {
                    return Err(Error::SampleTooSmall { needed: 1, got: 0 });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for EstimatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Hf(t) => write!(f, "hf{t}"),
            Self::Q10 => write!(f, "q10"),
            Self::Q11General { i, m } => write!(f, "q11:{i}:{m}"),
            Self::Q11Mle => write!(f, "q11mle"),
        }
    }
}

impl FromStr for EstimatorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "q10" {
            return Ok(Self::Q10);
        }
        if s == "q11mle" {
            return Ok(Self::Q11Mle);
        }
        if let Some(t) = s.strip_prefix("hf") {
            let t: u8 = t.parse().map_err(|_| Error::UnknownName(s.to_string()))?;
            return Self::hf(t);
        }
        if let Some(rest) = s.strip_prefix("q11:") {
            let mut parts = rest.splitn(2, ':');
            let i = parts
                .next()
                .and_then(|p| p.parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownName(s.to_string()))?;
            let m = parts
                .next()
                .and_then(|p| p.parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownName(s.to_string()))?;
            return Ok(Self::Q11General { i, m });
        }
        Err(Error::UnknownName(s.to_string()))
    }
}

/// Evaluate estimator `id` on `sample` at probability `query`.
///
/// Pure: equal inputs give bit-identical outputs.
pub fn estimate(
    sample: &SortedSample,
    query: QuantileQuery,
    id: EstimatorId,
) -> Result<f64, Error> {
    match id {
        EstimatorId::Hf(t) => hf_quantile(sample, query, t),
        EstimatorId::Q10 => q10_quantile(sample, query),
        EstimatorId::Q11General { i, m } => q11_general(sample, query, i, m),
        EstimatorId::Q11Mle => q11_mle(sample, query),
    }
}
