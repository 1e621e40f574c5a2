//! Exponential-model quantile estimators and their closed-form moments.
//!
//! Everything here leans on one fact: for a unit-rate exponential sample,
//! the gaps between consecutive order statistics are independent
//! exponentials, so E[X_(i)] = sum_{j=1}^{i} 1/(n-j+1) and the variance is
//! the same sum with squared terms. That gives exact bias formulas for
//! interpolation-based quantile estimators, a two-point corrected estimator
//! with zero bias at every (n, q), and a weighted multi-point family whose
//! weights minimize variance subject to unbiasedness.
//!
//! All bias conventions are expected-minus-true.

use crate::error::Error;
use crate::sample::{QuantileQuery, SortedSample};

/// ln(1-q), evaluated without cancellation. Every formula in this module
/// that needs log(1-q) or its negation goes through this one function so
/// algebraic identities between them survive in floating point.
#[inline]
fn ln_one_minus(q: f64) -> f64 {
    (-q).ln_1p()
}

/// Partial sum Σ_{j=1}^{i} 1/(n-j+1), with the empty sum = 0 for i = 0.
fn harmonic_tail(n: usize, i: usize) -> f64 {
    let mut s = 0.0;
    for j in 1..=i {
        s += 1.0 / (n - j + 1) as f64;
    }
    s
}

fn harmonic_tail_sq(n: usize, i: usize) -> f64 {
    let mut s = 0.0;
    for j in 1..=i {
        let d = (n - j + 1) as f64;
        s += 1.0 / (d * d);
    }
    s
}

fn check_order_index(n: usize, i: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::SampleTooSmall { needed: 1, got: 0 });
    }
    if i > n {
        return Err(Error::IndexOutOfRange {
            name: "i",
            value: i,
            max: n,
        });
    }
    Ok(())
}

/// Mean of the i-th order statistic of n unit-rate exponentials;
/// 0 when i = 0.
pub fn exp_order_stat_mean(n: usize, i: usize) -> Result<f64, Error> {
    check_order_index(n, i)?;
    Ok(harmonic_tail(n, i))
}

/// Variance of the i-th order statistic of n unit-rate exponentials;
/// 0 when i = 0.
pub fn exp_order_stat_var(n: usize, i: usize) -> Result<f64, Error> {
    check_order_index(n, i)?;
    Ok(harmonic_tail_sq(n, i))
}

/// Anchor index i = floor(q(n-1)) + 1 and fractional part g = q(n-1) - floor.
#[inline]
fn anchor(q: f64, n: usize) -> (usize, f64) {
    let pos = q * (n - 1) as f64;
    let lt = pos.floor();
    (lt as usize + 1, pos - lt)
}

fn require_two(n: usize) -> Result<(), Error> {
    if n < 2 {
        Err(Error::SampleTooSmall { needed: 2, got: n })
    } else {
        Ok(())
    }
}

/// Exact bias (expected minus true) of the type-7 sample quantile at `q`
/// under a unit-rate exponential with sample size `n`.
pub fn q7_exp_bias(q: QuantileQuery, n: usize) -> Result<f64, Error> {
    require_two(n)?;
    let q = q.value();
    let (i, g) = anchor(q, n);
    Ok(harmonic_tail(n, i) + g / (n - i) as f64 + ln_one_minus(q))
}

/// Interpolation factor that cancels the exponential bias when used as
/// the weight on X_(i+1) in a two-point estimate. May fall outside [0, 1];
/// negative values extrapolate below the anchor order statistic.
pub fn expon_frac(q: QuantileQuery, n: usize) -> Result<f64, Error> {
    require_two(n)?;
    let q = q.value();
    let (i, _) = anchor(q, n);
    Ok((n - i) as f64 * (-ln_one_minus(q) - harmonic_tail(n, i)))
}

/// Two-point quantile estimate (1-f)·X_(i) + f·X_(i+1) with f chosen so
/// the estimator is exactly unbiased for every exponential distribution.
pub fn q10_quantile(sample: &SortedSample, query: QuantileQuery) -> Result<f64, Error> {
    let n = sample.n();
    require_two(n)?;
    let (i, _) = anchor(query.value(), n);
    let f = expon_frac(query, n)?;
    // i <= n-1 whenever q < 1 and n >= 2, so both accesses are in range
    let lo = sample.order_stat(i);
    let hi = sample.order_stat(i + 1);
    Ok((1.0 - f) * lo + f * hi)
}

/// Minimum-variance unbiased weights for the multi-point exponential
/// quantile estimator anchored at X_(i) with m upper terms.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    /// Sample size the weights were derived for.
    pub n: usize,
    /// Anchor order-statistic index; 0 means "anchor at the support minimum".
    pub i: usize,
    /// Number of weighted terms above the anchor.
    pub m: usize,
    /// Target probability.
    pub q: f64,
    /// Weight on X_(i); `None` when i = 0 (there is no anchor term).
    pub f: Option<f64>,
    /// Weights on X_(i+1) ... X_(i+m).
    pub fs: Vec<f64>,
    /// Lagrange multiplier from the variance minimization.
    pub beta: f64,
    /// Exact estimator variance under a unit-rate exponential.
    pub analytic_variance: f64,
}

impl WeightVector {
    /// Evaluate the weighted estimate on a sample of matching size.
    pub fn apply(&self, sample: &SortedSample) -> Result<f64, Error> {
        if sample.n() != self.n {
            return Err(Error::SampleTooSmall {
                needed: self.n,
                got: sample.n(),
            });
        }
        let mut acc = match self.f {
            Some(f) => f * sample.order_stat(self.i),
            None => 0.0,
        };
        for (j, w) in self.fs.iter().enumerate() {
            acc += w * sample.order_stat(self.i + j + 1);
        }
        Ok(acc)
    }
}

fn check_weight_domain(n: usize, i: usize, m: usize) -> Result<(), Error> {
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
    Ok(())
}

/// Solve for the weights that make the estimator unbiased for the
/// exponential model while minimizing its variance.
///
/// The anchor bias b = E[X_(i)] - phi_q is spread evenly (in expectation)
/// across the m inter-order-statistic gaps; the last weight differs because
/// it also carries every gap above i+m-1 up to i+m.
pub fn optimal_weights(
    n: usize,
    i: usize,
    m: usize,
    q: QuantileQuery,
) -> Result<WeightVector, Error> {
    check_weight_domain(n, i, m)?;
    let qv = q.value();
    let b = harmonic_tail(n, i) + ln_one_minus(qv);
    let beta = 2.0 * b / m as f64;
    let mut fs = vec![-beta / 2.0; m];
    fs[m - 1] = -beta * (n - i - m + 1) as f64 / 2.0;
    let f = if i >= 1 {
        Some(1.0 - fs.iter().sum::<f64>())
    } else {
        None
    };
    Ok(WeightVector {
        n,
        i,
        m,
        q: qv,
        f,
        fs,
        beta,
        analytic_variance: harmonic_tail_sq(n, i) + b * b / m as f64,
    })
}

/// Weighted multi-point quantile estimate using `optimal_weights`.
pub fn q11_general(
    sample: &SortedSample,
    query: QuantileQuery,
    i: usize,
    m: usize,
) -> Result<f64, Error> {
    optimal_weights(sample.n(), i, m, query)?.apply(sample)
}

/// Exact variance of the weighted estimator under a unit-rate exponential.
/// Non-increasing in m for fixed (n, i, q).
pub fn q11_variance(n: usize, i: usize, m: usize, q: QuantileQuery) -> Result<f64, Error> {
    Ok(optimal_weights(n, i, m, q)?.analytic_variance)
}

/// Maximum-likelihood plug-in estimate for the exponential model:
/// -mean(x)·ln(1-q). Coincides with the i = 0, m = n member of the
/// weighted family.
pub fn q11_mle(sample: &SortedSample, query: QuantileQuery) -> Result<f64, Error> {
    let mean = sample.values().iter().sum::<f64>() / sample.n() as f64;
    Ok(-mean * ln_one_minus(query.value()))
}
