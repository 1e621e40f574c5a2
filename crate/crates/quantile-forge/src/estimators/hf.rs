//! The nine classical sample-quantile definitions, numbered 1 through 9.
//!
//! Types 1-3 are discontinuous (they pick or average order statistics);
//! types 4-9 interpolate linearly between order statistics and differ only
//! in where they place the knots. Results match R's `quantile(type = k)`
//! and the equivalent NumPy `method` names.

use crate::error::Error;
use crate::sample::{QuantileQuery, SortedSample};

/// Sample quantile of `sample` at `q` using definition `hf_type` (1-9).
pub fn hf_quantile(
    sample: &SortedSample,
    query: QuantileQuery,
    hf_type: u8,
) -> Result<f64, Error> {
    if !(1..=9).contains(&hf_type) {
        return Err(Error::InvalidHfType(hf_type));
    }
    let n = sample.n();
    let nf = n as f64;
    let q = query.value();

    // Discontinuous types work on nq directly.
    match hf_type {
        1 => {
            let j = (nf * q).ceil() as usize;
            return Ok(sample.order_stat(j.clamp(1, n)));
        }
        2 => {
            let nq = nf * q;
            let j = nq.ceil() as usize;
            // At an integer nq the inverse CDF jumps; average the two sides.
            if nq == nq.floor() && j < n {
                let lo = sample.order_stat(j.max(1));
                let hi = sample.order_stat(j + 1);
                return Ok(0.5 * (lo + hi));
            }
            return Ok(sample.order_stat(j.clamp(1, n)));
        }
        3 => {
            // Nearest order statistic to nq, ties resolved to the even index.
            let target = nf * q - 0.5;
            let j = target.floor();
            let k = if target == j && (j as i64) % 2 == 0 {
                j as i64
            } else {
                j as i64 + 1
            };
            return Ok(sample.order_stat(k.clamp(1, n as i64) as usize));
        }
        _ => {}
    }

    // Interpolating types: position h on the 1-based order-statistic axis.
    let h = match hf_type {
        4 => nf * q,
        5 => nf * q + 0.5,
        6 => (nf + 1.0) * q,
        7 => (nf - 1.0) * q + 1.0,
        8 => (nf + 1.0 / 3.0) * q + 1.0 / 3.0,
        9 => (nf + 0.25) * q + 0.375,
        _ => unreachable!(),
    };
    if n == 1 {
        return Ok(sample.order_stat(1));
    }
    let h = h.clamp(1.0, nf);
    let j = (h.floor() as usize).clamp(1, n - 1);
    let g = h - j as f64;
    let lo = sample.order_stat(j);
    let hi = sample.order_stat(j + 1);
    Ok(lo + g * (hi - lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(values: &[f64]) -> SortedSample {
        SortedSample::from_unsorted(values.to_vec()).unwrap()
    }

    fn q(p: f64) -> QuantileQuery {
        QuantileQuery::new(p).unwrap()
    }

    #[test]
    fn median_of_three_type7() {
        let x = s(&[1.0, 2.0, 3.0]);
        assert_eq!(hf_quantile(&x, q(0.5), 7).unwrap(), 2.0);
    }

    #[test]
    fn even_median_type7_interpolates() {
        let x = s(&[10.0, 20.0, 30.0, 40.0]);
        assert_eq!(hf_quantile(&x, q(0.5), 7).unwrap(), 25.0);
    }

    #[test]
    fn type4_low_quartile_hits_first_order_stat() {
        let x = s(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(hf_quantile(&x, q(0.25), 4).unwrap(), 1.0);
    }

    #[test]
    fn single_observation_any_type_any_q() {
        let x = s(&[5.0]);
        for t in 1..=9 {
            for p in [0.01, 0.25, 0.5, 0.9, 0.99] {
                assert_eq!(hf_quantile(&x, q(p), t).unwrap(), 5.0, "type {t} p {p}");
            }
        }
    }

    #[test]
    fn type1_steps_at_multiples_of_one_over_n() {
        let x = s(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(hf_quantile(&x, q(0.2), 1).unwrap(), 1.0);
        assert_eq!(hf_quantile(&x, q(0.2 + 1e-12), 1).unwrap(), 2.0);
        assert_eq!(hf_quantile(&x, q(0.4), 1).unwrap(), 2.0);
    }

    #[test]
    fn type2_averages_at_jumps() {
        let x = s(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(hf_quantile(&x, q(0.2), 2).unwrap(), 1.5);
        assert_eq!(hf_quantile(&x, q(0.3), 2).unwrap(), 2.0);
        // at q = 1 - 1/n the jump is at the last pair
        assert_eq!(hf_quantile(&x, q(0.8), 2).unwrap(), 4.5);
    }

    #[test]
    fn type3_rounds_half_to_even_index() {
        let x = s(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        // nq - 0.5 = 2.0 exactly with j = 2 even: keep index 2
        assert_eq!(hf_quantile(&x, q(0.5), 3).unwrap(), 2.0);
        // nq - 0.5 = 1.0, j = 1 odd: round up to 2
        assert_eq!(hf_quantile(&x, q(0.3), 3).unwrap(), 2.0);
    }

    #[test]
    fn knot_identity_type7() {
        // At q = (k-1)/(n-1) the type-7 estimate is exactly the k-th order stat.
        let x = s(&[2.0, 3.0, 5.0, 7.0, 11.0, 13.0]);
        let n = 6usize;
        for k in 1..=n {
            let p = (k - 1) as f64 / (n - 1) as f64;
            if p <= 0.0 || p >= 1.0 {
                continue;
            }
            let got = hf_quantile(&x, q(p), 7).unwrap();
            assert_eq!(got, x.order_stat(k), "k={k}");
        }
    }

    #[test]
    fn extreme_q_clamps_to_sample_range() {
        let x = s(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        for t in 1..=9 {
            let lo = hf_quantile(&x, q(1e-9), t).unwrap();
            let hi = hf_quantile(&x, q(1.0 - 1e-9), t).unwrap();
            assert!(lo >= 1.0 && hi <= 5.0, "type {t}: {lo} {hi}");
        }
    }

    #[test]
    fn rejects_invalid_type() {
        let x = s(&[1.0, 2.0]);
        assert!(matches!(
            hf_quantile(&x, q(0.5), 0),
            Err(Error::InvalidHfType(0))
        ));
        assert!(matches!(
            hf_quantile(&x, q(0.5), 10),
            Err(Error::InvalidHfType(10))
        ));
    }
}
