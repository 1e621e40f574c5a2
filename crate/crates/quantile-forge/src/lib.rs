//! Sample-quantile estimation and benchmarking.
//!
//! The library implements the nine classical order-statistic quantile
//! definitions plus a family of bias-corrected estimators built on the
//! exponential model: closed-form order-statistic moments give an exact
//! bias formula for interpolated quantiles, a two-point estimator whose
//! exponential bias is identically zero, and a weighted multi-point
//! estimator with minimum variance subject to unbiasedness (its widest
//! member collapses to the maximum-likelihood plug-in).
//!
//! Around that core sit the benchmarking pieces: six analytic reference
//! distributions with exact quantile functions and inverse-transform
//! samplers, a counter-based deterministic RNG suitable for parallel
//! Monte Carlo, and a grid harness measuring bias, variance, and MSE per
//! (distribution, estimator, n, q) cell. The `quantile-forge` binary
//! drives all of it from JSON configs and emits byte-deterministic CSV.

pub mod cli;
pub mod distributions;
pub mod error;
pub mod estimators;
pub mod sample;
pub mod simulation;

pub use error::Error;
pub use sample::{QuantileQuery, SortedSample};
