//! Deterministic output rendering: the results CSV and the analytic tables.
//!
//! All floats print through Rust's shortest round-trip formatting, so output
//! bytes are identical across platforms and runs; lines always end in `\n`.

use crate::estimators::{expon_frac, q7_exp_bias, EstimatorId, WeightVector};
use crate::sample::QuantileQuery;
use crate::simulation::{CellMetrics, CellSpec};
use std::fmt::Write as _;

pub const CSV_HEADER: &str =
    "distribution,params,estimator,n,q,trials,true_quantile,bias,variance,mse,se_bias,seed";

/// Render simulation results as CSV, one row per cell, in input order.
pub fn render_csv(results: &[(CellSpec, CellMetrics)]) -> String {
    let mut out = String::with_capacity(64 + results.len() * 96);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (spec, m) in results {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            spec.dist.family_name(),
            spec.dist.params_label(),
            spec.estimator,
            spec.n,
            spec.q.value(),
            m.trials,
            m.true_quantile,
            m.bias,
            m.variance,
            m.mse,
            m.se_bias,
            spec.seed,
        );
    }
    out
}

/// Render the closed-form bias of the type-7 estimator and the correcting
/// interpolation factor over a q grid, as CSV text.
pub fn render_analytic_bias(n: usize, q_values: &[f64]) -> Result<String, crate::error::Error> {
    let mut out = String::from("q,bias_q7,frac_f\n");
    for &qv in q_values {
        let q = QuantileQuery::new(qv)?;
        let bias = q7_exp_bias(q, n)?;
        let frac = expon_frac(q, n)?;
        let _ = writeln!(out, "{qv},{bias},{frac}");
    }
    Ok(out)
}

/// Render a weight vector as a small readable table, flagging the two
/// special configurations (two-point corrected form; MLE form).
pub fn render_weights(w: &WeightVector) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, i = {}, m = {}, q = {}", w.n, w.i, w.m, w.q);
    match w.f {
        Some(f) => {
            let _ = writeln!(out, "f    = {f}");
        }
        None => {
            let _ = writeln!(out, "f    = (none: anchor at the support minimum)");
        }
    }
    for (j, fj) in w.fs.iter().enumerate() {
        let _ = writeln!(out, "f_{}  = {fj}", j + 1);
    }
    let _ = writeln!(out, "beta = {}", w.beta);
    let _ = writeln!(out, "analytic variance = {}", w.analytic_variance);
    let q10_anchor = (w.q * (w.n - 1) as f64).floor() as usize + 1;
    if w.i == q10_anchor && w.m == 1 {
        let _ = writeln!(out, "equivalent form: {}", EstimatorId::Q10);
    }
    if w.i == 0 && w.m == w.n {
        let _ = writeln!(out, "equivalent form: {}", EstimatorId::Q11Mle);
    }
    out
}
