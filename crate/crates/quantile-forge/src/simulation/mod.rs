//! Monte Carlo measurement of estimator bias, variance, and MSE, plus the
//! analytic zero-bias root finder.
//!
//! Reproducibility model: every grid cell owns an independent random stream
//! whose identity is a stable content hash of the cell itself (distribution,
//! estimator, n, q) — never its position in the grid. Adding, removing, or
//! reordering cells therefore cannot perturb any other cell's draws, and a
//! cell evaluated alone reproduces its in-grid result bit for bit. The same
//! property makes parallel execution trivially deterministic.

mod moments;

pub use moments::MomentAccumulator;

use crate::distributions::{DistributionSpec, RngStream};
use crate::error::Error;
use crate::estimators::{estimate, q7_exp_bias, EstimatorId};
use crate::sample::{QuantileQuery, SortedSample};
use rayon::prelude::*;

/// One Monte Carlo experiment: an (estimator, distribution, n, q) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSpec {
    pub dist: DistributionSpec,
    pub estimator: EstimatorId,
    /// Sample size per trial.
    pub n: usize,
    pub q: QuantileQuery,
    pub trials: u64,
    pub seed: u64,
}

/// Measured performance of one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellMetrics {
    /// Mean of (estimate − true quantile).
    pub bias: f64,
    /// Sample variance (n−1 denominator) of the estimates.
    pub variance: f64,
    /// Mean squared deviation from the true quantile:
    /// bias² + variance·(trials−1)/trials.
    pub mse: f64,
    /// Standard error of the bias estimate, sqrt(variance/trials).
    pub se_bias: f64,
    pub true_quantile: f64,
    pub trials: u64,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

struct Fnv1a(u64);

impl Fnv1a {
    fn new() -> Self {
        Self(FNV_OFFSET)
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(FNV_PRIME);
        }
    }

    fn write_u64(&mut self, v: u64) {
        self.write(&v.to_le_bytes());
    }

    fn write_f64(&mut self, v: f64) {
        self.write_u64(v.to_bits());
    }
}

impl CellSpec {
    /// Validate every field; the estimator must be runnable at this n.
    pub fn validate(&self) -> Result<(), Error> {
        if self.n < 2 {
            return Err(Error::SampleTooSmall {
                needed: 2,
                got: self.n,
            });
        }
        self.estimator.validate_for(self.n)?;
        if self.trials == 0 {
            return Err(Error::ZeroTrials);
        }
        Ok(())
    }

    /// Stable stream identifier: a content hash of what the cell measures.
    ///
    /// Depends only on (distribution, estimator, n, q) — not on trials, the
    /// seed, or grid position — so extending a run or rearranging a grid
    /// leaves every other cell's draws untouched.
    pub fn stream_id(&self) -> u64 {
        let mut h = Fnv1a::new();
        let family_tag = match self.dist {
            DistributionSpec::Normal { .. } => 1u64,
            DistributionSpec::LogNormal { .. } => 2,
            DistributionSpec::Exponential { .. } => 3,
            DistributionSpec::Weibull { .. } => 4,
            DistributionSpec::Lomax { .. } => 5,
            DistributionSpec::LogLogistic { .. } => 6,
        };
        h.write_u64(family_tag);
        for (_, v) in self.dist.param_values() {
            h.write_f64(v);
        }
        match self.estimator {
            EstimatorId::Hf(t) => {
                h.write_u64(1);
                h.write_u64(t as u64);
            }
            EstimatorId::Q10 => h.write_u64(2),
            EstimatorId::Q11General { i, m } => {
                h.write_u64(3);
                h.write_u64(i as u64);
                h.write_u64(m as u64);
            }
            EstimatorId::Q11Mle => h.write_u64(4),
        }
        h.write_u64(self.n as u64);
        h.write_f64(self.q.value());
        h.0
    }
}

/// Run one cell: draw `trials` fresh samples, estimate, accumulate moments
/// of the deviation from the exact quantile. Deterministic for a fixed spec.
pub fn run_cell(spec: &CellSpec) -> Result<CellMetrics, Error> {
    spec.validate()?;
    let truth = spec.dist.quantile(spec.q.value())?;
    let mut rng = RngStream::new(spec.seed, spec.stream_id());
    let mut acc = MomentAccumulator::new();
    let mut buf = vec![0.0; spec.n];
    for _ in 0..spec.trials {
        spec.dist.sample_into(&mut rng, &mut buf);
        let sorted = SortedSample::from_unsorted(std::mem::take(&mut buf))?;
        let est = estimate(&sorted, spec.q, spec.estimator)?;
        buf = sorted.into_values();
        acc.push(est - truth);
    }
    let t = acc.count();
    let bias = acc.mean();
    let variance = acc.sample_variance();
    let mse = bias * bias + variance * ((t - 1) as f64 / t as f64);
    Ok(CellMetrics {
        bias,
        variance,
        mse,
        se_bias: (variance / t as f64).sqrt(),
        true_quantile: truth,
        trials: t,
    })
}

/// Evaluate a batch of cells, possibly in parallel.
///
/// Results come back in input order and are identical to calling
/// [`run_cell`] on each spec sequentially, whatever the thread count.
pub fn run_grid(cells: &[CellSpec]) -> Result<Vec<(CellSpec, CellMetrics)>, Error> {
    if cells.is_empty() {
        return Err(Error::EmptySample);
    }
    for (index, cell) in cells.iter().enumerate() {
        cell.validate().map_err(|e| Error::InvalidCell {
            index,
            source: Box::new(e),
        })?;
    }
    cells
        .par_iter()
        .map(|cell| run_cell(cell).map(|m| (cell.clone(), m)))
        .collect()
}

/// Find the probability q* where the type-7 estimator's exponential bias
/// vanishes, by bisection on the closed-form bias over [lo, hi].
///
/// Bisection rather than a derivative method: the analytic bias has kinks
/// wherever q(n−1) crosses an integer, so slopes are unreliable while sign
/// information is exact.
pub fn zero_bias_quantile_search(n: usize, lo: f64, hi: f64) -> Result<f64, Error> {
    let bias_at = |x: f64| -> Result<f64, Error> { q7_exp_bias(QuantileQuery::new(x)?, n) };
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = bias_at(lo)?;
    let f_hi = bias_at(hi)?;
    if f_lo.abs() <= 1e-10 {
        return Ok(lo);
    }
    if f_hi.abs() <= 1e-10 {
        return Ok(hi);
    }
    if (f_lo > 0.0) == (f_hi > 0.0) {
        return Err(Error::NoSignChange { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = bias_at(mid)?;
        if f_mid.abs() <= 1e-10 {
            return Ok(mid);
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence {
        what: "zero-bias bisection",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: f64) -> QuantileQuery {
        QuantileQuery::new(p).unwrap()
    }

    fn exp_cell(estimator: EstimatorId, n: usize, p: f64, trials: u64) -> CellSpec {
        CellSpec {
            dist: DistributionSpec::exponential(1.0).unwrap(),
            estimator,
            n,
            q: q(p),
            trials,
            seed: 42,
        }
    }

    #[test]
    fn run_cell_is_bit_deterministic() {
        let spec = exp_cell(EstimatorId::Hf(7), 5, 0.3, 500);
        let a = run_cell(&spec).unwrap();
        let b = run_cell(&spec).unwrap();
        assert_eq!(a.bias.to_bits(), b.bias.to_bits());
        assert_eq!(a.variance.to_bits(), b.variance.to_bits());
        assert_eq!(a.mse.to_bits(), b.mse.to_bits());
    }

    #[test]
    fn different_seeds_give_different_draws() {
        let mut a = exp_cell(EstimatorId::Hf(7), 5, 0.3, 200);
        let mut b = a.clone();
        a.seed = 1;
        b.seed = 2;
        assert_ne!(run_cell(&a).unwrap().bias, run_cell(&b).unwrap().bias);
    }

    #[test]
    fn stream_id_separates_cells_by_content() {
        let base = exp_cell(EstimatorId::Hf(7), 15, 0.5, 1);
        let mut other_q = base.clone();
        other_q.q = q(0.9);
        let mut other_n = base.clone();
        other_n.n = 16;
        let mut other_est = base.clone();
        other_est.estimator = EstimatorId::Q10;
        assert_ne!(base.stream_id(), other_q.stream_id());
        assert_ne!(base.stream_id(), other_n.stream_id());
        assert_ne!(base.stream_id(), other_est.stream_id());
        // trials and seed are deliberately excluded
        let mut more_trials = base.clone();
        more_trials.trials = 999;
        more_trials.seed = 7;
        assert_eq!(base.stream_id(), more_trials.stream_id());
    }

    #[test]
    fn hf7_bias_matches_analytic_value() {
        let spec = exp_cell(EstimatorId::Hf(7), 2, 0.5, 200_000);
        let m = run_cell(&spec).unwrap();
        let analytic = q7_exp_bias(q(0.5), 2).unwrap();
        assert!(
            (m.bias - analytic).abs() <= 3.0 * m.se_bias,
            "bias {} vs analytic {analytic} (se {})",
            m.bias,
            m.se_bias
        );
    }

    #[test]
    fn mse_identity_is_exact_by_construction() {
        let spec = exp_cell(EstimatorId::Q10, 8, 0.4, 1000);
        let m = run_cell(&spec).unwrap();
        let t = m.trials as f64;
        let expect = m.bias * m.bias + m.variance * ((t - 1.0) / t);
        assert_eq!(m.mse.to_bits(), expect.to_bits());
        assert!(m.mse >= 0.0 && m.variance >= 0.0);
        assert_eq!(m.se_bias, (m.variance / t).sqrt());
    }

    #[test]
    fn single_trial_cell_degenerates_cleanly() {
        let spec = exp_cell(EstimatorId::Hf(1), 3, 0.5, 1);
        let m = run_cell(&spec).unwrap();
        assert_eq!(m.variance, 0.0);
        assert_eq!(m.mse, m.bias * m.bias);
        assert_eq!(m.se_bias, 0.0);
    }

    #[test]
    fn grid_matches_sequential_cells() {
        let cells = vec![
            exp_cell(EstimatorId::Hf(7), 5, 0.25, 300),
            exp_cell(EstimatorId::Q10, 10, 0.5, 300),
            exp_cell(EstimatorId::Q11Mle, 4, 0.75, 300),
            // duplicate spec: must reproduce the same metrics exactly
            exp_cell(EstimatorId::Hf(7), 5, 0.25, 300),
        ];
        let grid = run_grid(&cells).unwrap();
        assert_eq!(grid.len(), cells.len());
        for (k, (spec, metrics)) in grid.iter().enumerate() {
            assert_eq!(spec, &cells[k]);
            let solo = run_cell(&cells[k]).unwrap();
            assert_eq!(metrics.bias.to_bits(), solo.bias.to_bits());
            assert_eq!(metrics.mse.to_bits(), solo.mse.to_bits());
        }
        assert_eq!(grid[0].1, grid[3].1);
    }

    #[test]
    fn grid_reports_first_invalid_cell_by_index() {
        let cells = vec![
            exp_cell(EstimatorId::Hf(7), 5, 0.25, 10),
            exp_cell(EstimatorId::Q10, 1, 0.5, 10),
            exp_cell(EstimatorId::Hf(3), 0, 0.5, 10),
        ];
        match run_grid(&cells) {
            Err(Error::InvalidCell { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected InvalidCell, got {other:?}"),
        }
        assert!(matches!(run_grid(&[]), Err(Error::EmptySample)));
    }

    #[test]
    fn cell_validation_rejects_bad_specs() {
        assert!(exp_cell(EstimatorId::Hf(7), 1, 0.5, 10).validate().is_err());
        assert!(exp_cell(EstimatorId::Hf(7), 5, 0.5, 0).validate().is_err());
        assert!(exp_cell(EstimatorId::Q11General { i: 4, m: 3 }, 5, 0.5, 10)
            .validate()
            .is_err());
    }

    #[test]
    fn zero_bias_search_known_roots() {
        let r15 = zero_bias_quantile_search(15, 0.6, 0.7).unwrap();
        assert!((0.6..=0.7).contains(&r15));
        assert!((r15 - 0.6782994).abs() < 1e-6, "r15 = {r15}");
        assert!(q7_exp_bias(q(r15), 15).unwrap().abs() <= 1e-10);

        let r2 = zero_bias_quantile_search(2, 0.6, 0.75).unwrap();
        assert!((r2 - 0.6982904).abs() < 1e-6, "r2 = {r2}");

        // sign flips across the root
        let below = q7_exp_bias(q(r15 - 0.01), 15).unwrap();
        let above = q7_exp_bias(q(r15 + 0.01), 15).unwrap();
        assert!(below > 0.0 && above < 0.0);
    }

    #[test]
    fn zero_bias_search_rejects_same_sign_bracket() {
        assert!(matches!(
            zero_bias_quantile_search(15, 0.1, 0.2),
            Err(Error::NoSignChange { .. })
        ));
    }
}
