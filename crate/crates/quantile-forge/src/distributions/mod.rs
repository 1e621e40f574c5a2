//! Benchmark distributions: exact quantile functions, CDFs, and
//! inverse-transform samplers.
//!
//! Sampling is deliberately inverse-transform only: every draw is a
//! deterministic function of a single uniform variate, so a sample sequence
//! is fully pinned by `(seed, stream_id, counter)` and reproducible across
//! platforms and thread schedules.

mod normal;
mod rng;

pub use normal::{erf, erfc, std_normal_cdf, std_normal_inv_cdf};
pub use rng::RngStream;

use crate::error::Error;

/// A fully parameterized benchmark distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistributionSpec {
    /// Normal with mean `mu` and standard deviation `sigma`.
    Normal { mu: f64, sigma: f64 },
    /// Log-normal: `exp(N(mu, sigma^2))`.
    LogNormal { mu: f64, sigma: f64 },
    /// Exponential with rate `rate` (mean `1/rate`).
    Exponential { rate: f64 },
    /// Weibull with shape `shape` and scale `scale`.
    Weibull { shape: f64, scale: f64 },
    /// Lomax (shifted Pareto) with tail index `shape` and scale `scale`.
    Lomax { shape: f64, scale: f64 },
    /// Log-logistic with scale `scale` (its median) and shape `shape`.
    LogLogistic { scale: f64, shape: f64 },
}

fn require_positive(name: &'static str, value: f64) -> Result<(), Error> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}

fn require_finite(name: &'static str, value: f64) -> Result<(), Error> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}

impl DistributionSpec {
    pub fn normal(mu: f64, sigma: f64) -> Result<Self, Error> {
        require_finite("mu", mu)?;
        require_positive("sigma", sigma)?;
        Ok(Self::Normal { mu, sigma })
    }

    pub fn log_normal(mu: f64, sigma: f64) -> Result<Self, Error> {
        require_finite("mu", mu)?;
        require_positive("sigma", sigma)?;
        Ok(Self::LogNormal { mu, sigma })
    }

    pub fn exponential(rate: f64) -> Result<Self, Error> {
        require_positive("rate", rate)?;
        Ok(Self::Exponential { rate })
    }

    pub fn weibull(shape: f64, scale: f64) -> Result<Self, Error> {
        require_positive("shape", shape)?;
        require_positive("scale", scale)?;
        Ok(Self::Weibull { shape, scale })
    }

    pub fn lomax(shape: f64, scale: f64) -> Result<Self, Error> {
        require_positive("shape", shape)?;
        require_positive("scale", scale)?;
        Ok(Self::Lomax { shape, scale })
    }

    pub fn log_logistic(scale: f64, shape: f64) -> Result<Self, Error> {
        require_positive("scale", scale)?;
        require_positive("shape", shape)?;
        Ok(Self::LogLogistic { scale, shape })
    }

    /// Build from a lowercase family name and positional parameter list, the
    /// form used in config files.
    pub fn from_name_params(family: &str, params: &[f64]) -> Result<Self, Error> {
        let want = |k: usize| -> Result<(), Error> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::UnknownName(format!(
                    "{family} expects {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match family {
            "normal" => {
                want(2)?;
                Self::normal(params[0], params[1])
            }
            "lognormal" => {
                want(2)?;
                Self::log_normal(params[0], params[1])
            }
            "exponential" => {
                want(1)?;
                Self::exponential(params[0])
            }
            "weibull" => {
                want(2)?;
                Self::weibull(params[0], params[1])
            }
            "lomax" => {
                want(2)?;
                Self::lomax(params[0], params[1])
            }
            "loglogistic" => {
                want(2)?;
                Self::log_logistic(params[0], params[1])
            }
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    /// Lowercase family name, as used in configs and CSV output.
    pub fn family_name(&self) -> &'static str {
        match self {
            Self::Normal { .. } => "normal",
            Self::LogNormal { .. } => "lognormal",
            Self::Exponential { .. } => "exponential",
            Self::Weibull { .. } => "weibull",
            Self::Lomax { .. } => "lomax",
            Self::LogLogistic { .. } => "loglogistic",
        }
    }

    /// Parameters in the positional order accepted by `from_name_params`.
    pub fn param_values(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Self::Normal { mu, sigma } | Self::LogNormal { mu, sigma } => {
                vec![("mu", mu), ("sigma", sigma)]
            }
            Self::Exponential { rate } => vec![("rate", rate)],
            Self::Weibull { shape, scale } => vec![("shape", shape), ("scale", scale)],
            Self::Lomax { shape, scale } => vec![("shape", shape), ("scale", scale)],
            Self::LogLogistic { scale, shape } => vec![("scale", scale), ("shape", shape)],
        }
    }

    /// Compact `name=value` parameter label, e.g. `mu=0;sigma=1`.
    pub fn params_label(&self) -> String {
        self.param_values()
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Exact inverse CDF at probability `p` in the open interval (0, 1).
    pub fn quantile(&self, p: f64) -> Result<f64, Error> {
        if !(p.is_finite() && p > 0.0 && p < 1.0) {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        Ok(self.quantile_unchecked(p))
    }

    #[inline]
    fn quantile_unchecked(&self, p: f64) -> f64 {
        match *self {
            Self::Normal { mu, sigma } => {
                mu + sigma * std_normal_inv_cdf(p).expect("p validated")
            }
            Self::LogNormal { mu, sigma } => {
                (mu + sigma * std_normal_inv_cdf(p).expect("p validated")).exp()
            }
            Self::Exponential { rate } => -(-p).ln_1p() / rate,
            Self::Weibull { shape, scale } => scale * (-(-p).ln_1p()).powf(1.0 / shape),
            // (1-p)^(-1/shape) - 1 computed as expm1 to stay accurate near p = 0
            Self::Lomax { shape, scale } => scale * (-(-p).ln_1p() / shape).exp_m1(),
            Self::LogLogistic { scale, shape } => scale * (p / (1.0 - p)).powf(1.0 / shape),
        }
    }

    /// CDF at `x`; values below the support return 0.
    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            Self::Normal { mu, sigma } => std_normal_cdf((x - mu) / sigma),
            Self::LogNormal { mu, sigma } => {
                if x <= 0.0 {
                    0.0
                } else {
                    std_normal_cdf((x.ln() - mu) / sigma)
                }
            }
            Self::Exponential { rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-rate * x).exp_m1()
                }
            }
            Self::Weibull { shape, scale } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-(x / scale).powf(shape)).exp_m1()
                }
            }
            Self::Lomax { shape, scale } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-shape * (x / scale).ln_1p()).exp_m1()
                }
            }
            Self::LogLogistic { scale, shape } => {
                if x <= 0.0 {
                    0.0
                } else {
                    let t = (x / scale).powf(shape);
                    t / (1.0 + t)
                }
            }
        }
    }

    /// Fill `out` with i.i.d. draws by inverse-transform sampling.
    ///
    /// Consumes exactly `out.len()` uniforms from `rng`.
    pub fn sample_into(&self, rng: &mut RngStream, out: &mut [f64]) {
        for slot in out.iter_mut() {
            *slot = self.quantile_unchecked(rng.next_open01());
        }
    }

    /// Draw `count` i.i.d. values; see [`DistributionSpec::sample_into`].
    pub fn sample(&self, rng: &mut RngStream, count: usize) -> Vec<f64> {
        let mut out = vec![0.0; count];
        self.sample_into(rng, &mut out);
        out
    }
}
