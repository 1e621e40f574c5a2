//! Streaming first and second moments (Welford's update).
//!
//! The straightforward sum-of-squares approach loses all precision when the
//! mean is large relative to the spread (catastrophic cancellation); the
//! incremental form keeps the squared deviations centered as it goes and
//! stays accurate even for tens of millions of values sitting at
//! magnitude 1e8 with unit variance.

/// Running count, mean, and centered sum of squared deviations.
#[derive(Debug, Clone, Copy, Default)]
pub struct MomentAccumulator {
    count: u64,
    mean: f64,
    m2: f64,
}

impl MomentAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fold one observation into the running moments.
    #[inline]
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Mean of the observations so far; 0 when empty.
    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Centered sum of squared deviations Σ(x − mean)².
    pub fn sum_sq_dev(&self) -> f64 {
        self.m2
    }

    /// Unbiased (n−1 denominator) variance; 0 with fewer than two values.
    pub fn sample_variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    /// Population (n denominator) variance; 0 when empty.
    pub fn population_variance(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.m2 / self.count as f64
        }
    }
}
