//! Core input types: sorted samples and quantile levels.

use crate::error::Error;

/// An ascending, finite, NaN-free vector of observations.
///
/// Every estimator in this crate consumes a `SortedSample`; constructing one
/// is the single place where input validation happens.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedSample {
    values: Vec<f64>,
}

impl SortedSample {
    /// Build from values that are already in ascending order.
    ///
    /// Rejects empty input, NaN/infinite values, and out-of-order values.
    pub fn from_sorted(values: Vec<f64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteValue);
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedValues);
        }
        Ok(Self { values })
    }

    /// Build from unordered values, sorting them internally.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteValue);
        }
        values.sort_unstable_by(f64::total_cmp);
        Ok(Self { values })
    }

    /// Number of observations.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// The observations in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The i-th order statistic, 1-based: `order_stat(1)` is the minimum.
    ///
    /// Panics if `i` is 0 or exceeds the sample size; callers validate index
    /// ranges before reaching here.
    pub fn order_stat(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// Recover the underlying buffer, e.g. to reuse its allocation.
    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// A quantile level q in the open interval (0, 1).
///
/// q = 0 and q = 1 are rejected uniformly: the boundary levels degenerate to
/// single extreme order statistics for some estimators and are undefined for
/// others.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantileQuery {
    q: f64,
}

impl QuantileQuery {
    pub fn new(q: f64) -> Result<Self, Error> {
        if q.is_finite() && q > 0.0 && q < 1.0 {
            Ok(Self { q })
        } else {
            Err(Error::ProbabilityOutOfRange(q))
        }
    }

    pub fn value(self) -> f64 {
        self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(SortedSample::from_sorted(vec![]), Err(Error::EmptySample));
        assert_eq!(
            SortedSample::from_sorted(vec![1.0, f64::NAN]),
            Err(Error::NonFiniteValue)
        );
        assert_eq!(
            SortedSample::from_unsorted(vec![f64::INFINITY]),
            Err(Error::NonFiniteValue)
        );
    }

    #[test]
    fn rejects_descending_order() {
        assert_eq!(
            SortedSample::from_sorted(vec![2.0, 1.0]),
            Err(Error::UnsortedValues)
        );
    }

    #[test]
    fn ties_are_permitted() {
        let s = SortedSample::from_sorted(vec![1.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.n(), 3);
    }

    #[test]
    fn from_unsorted_sorts() {
        let s = SortedSample::from_unsorted(vec![3.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.values(), &[1.0, 2.0, 3.0]);
        assert_eq!(s.order_stat(1), 1.0);
        assert_eq!(s.order_stat(3), 3.0);
    }

    #[test]
    fn quantile_query_rejects_boundaries() {
        assert!(QuantileQuery::new(0.0).is_err());
        assert!(QuantileQuery::new(1.0).is_err());
        assert!(QuantileQuery::new(f64::NAN).is_err());
        assert!(QuantileQuery::new(-0.1).is_err());
        assert_eq!(QuantileQuery::new(0.5).unwrap().value(), 0.5);
    }
}
