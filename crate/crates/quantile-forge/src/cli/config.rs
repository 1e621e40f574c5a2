//! Run configuration: JSON schema, validation, and cell-grid expansion.

use crate::cli::CliError;
use crate::distributions::DistributionSpec;
use crate::estimators::EstimatorId;
use crate::sample::QuantileQuery;
use crate::simulation::CellSpec;
use serde::Deserialize;
use std::path::{Path, PathBuf};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    distributions: Vec<RawDistribution>,
    estimators: Vec<String>,
    sample_sizes: Vec<usize>,
    q_grid: RawQGrid,
    trials: u64,
    seed: u64,
    #[serde(default)]
    output_path: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDistribution {
    family: String,
    params: Vec<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawQGrid {
    Range { start: f64, stop: f64, step: f64 },
    List(Vec<f64>),
}

/// A validated simulation run: the full cartesian grid
/// distributions × estimators × sample sizes × q values.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub distributions: Vec<DistributionSpec>,
    pub estimators: Vec<EstimatorId>,
    pub sample_sizes: Vec<usize>,
    pub q_values: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
}

/// Expand `start:stop:step` into an inclusive grid.
///
/// The accumulated endpoint is snapped to `stop` when it lands within a
/// relative whisker (step × 1e−9), so `0.05:0.95:0.05` really ends on 0.95;
/// intermediate points keep their accumulated values so that grid points
/// are exactly reproducible from (start, step).
pub fn expand_q_range(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) || step <= 0.0 {
        return Err(CliError::config(format!(
            "bad q grid: start={start}, stop={stop}, step={step} (need finite values, step > 0)"
        )));
    }
    if start > stop {
        return Err(CliError::config(format!(
            "bad q grid: start {start} exceeds stop {stop}"
        )));
    }
    let whisker = step * 1e-9;
    let mut out = Vec::new();
    let mut k = 0u64;
    loop {
        let v = start + k as f64 * step;
        if v > stop + whisker {
            break;
        }
        out.push(if (v - stop).abs() <= whisker { stop } else { v });
        k += 1;
    }
    check_q_values(&out)?;
    Ok(out)
}

fn check_q_values(qs: &[f64]) -> Result<(), CliError> {
    if qs.is_empty() {
        return Err(CliError::config("q grid is empty".to_string()));
    }
    for &v in qs {
        if !(v.is_finite() && v > 0.0 && v < 1.0) {
            return Err(CliError::config(format!(
                "q value {v} outside the open interval (0, 1)"
            )));
        }
    }
    Ok(())
}

impl RunConfig {
    pub fn from_json_str(text: &str) -> Result<Self, CliError> {
        let raw: RawConfig = serde_json::from_str(text)
            .map_err(|e| CliError::config(format!("config parse error: {e}")))?;
        Self::from_raw(raw)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::config(format!("cannot read config {}: {e}", path.display()))
        })?;
        Self::from_json_str(&text)
    }

    fn from_raw(raw: RawConfig) -> Result<Self, CliError> {
        if raw.distributions.is_empty() {
            return Err(CliError::config("distributions list is empty".to_string()));
        }
        if raw.estimators.is_empty() {
            return Err(CliError::config("estimators list is empty".to_string()));
        }
        if raw.sample_sizes.is_empty() {
            return Err(CliError::config("sample_sizes list is empty".to_string()));
        }
        if raw.trials == 0 {
            return Err(CliError::config("trials must be at least 1".to_string()));
        }
        let mut distributions = Vec::with_capacity(raw.distributions.len());
        for d in &raw.distributions {
            distributions.push(
                DistributionSpec::from_name_params(&d.family, &d.params).map_err(|e| {
                    CliError::config(format!("distribution {:?}: {e}", d.family))
                })?,
            );
        }
        let mut estimators = Vec::with_capacity(raw.estimators.len());
        for name in &raw.estimators {
            estimators.push(
                name.parse::<EstimatorId>()
                    .map_err(|e| CliError::config(format!("estimator {name:?}: {e}")))?,
            );
        }
        for &n in &raw.sample_sizes {
            if n < 2 {
                return Err(CliError::config(format!("sample size {n} is below 2")));
            }
        }
        let q_values = match raw.q_grid {
            RawQGrid::Range { start, stop, step } => expand_q_range(start, stop, step)?,
            RawQGrid::List(list) => {
                check_q_values(&list)?;
                list
            }
        };
        Ok(Self {
            distributions,
            estimators,
            sample_sizes: raw.sample_sizes,
            q_values,
            trials: raw.trials,
            seed: raw.seed,
            output_path: raw.output_path,
        })
    }

    /// Number of cells the grid expands to.
    pub fn cell_count(&self) -> usize {
        self.distributions.len()
            * self.estimators.len()
            * self.sample_sizes.len()
            * self.q_values.len()
    }

    /// Expand to the full cell list, in output order
    /// (distribution-major, then estimator, then n, then q).
    pub fn cells(&self, seed: u64) -> Vec<CellSpec> {
        let mut out = Vec::with_capacity(self.cell_count());
        for &dist in &self.distributions {
            for &estimator in &self.estimators {
                for &n in &self.sample_sizes {
                    for &qv in &self.q_values {
                        // q values were validated to lie in (0,1)
                        let q = QuantileQuery::new(qv).expect("validated q");
                        out.push(CellSpec {
                            dist,
                            estimator,
                            n,
                            q,
                            trials: self.trials,
                            seed,
                        });
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = r#"{
        "distributions": [
            {"family": "weibull", "params": [2.0, 1.0]},
            {"family": "normal", "params": [0.0, 1.0]}
        ],
        "estimators": ["hf7", "q10", "q11:0:15", "q11mle"],
        "sample_sizes": [15],
        "q_grid": {"start": 0.05, "stop": 0.95, "step": 0.05},
        "trials": 100,
        "seed": 20260817,
        "output_path": "out.csv"
    }"#;

    #[test]
    fn parses_and_expands() {
        let cfg = RunConfig::from_json_str(GOOD).unwrap();
        assert_eq!(cfg.q_values.len(), 19);
        assert_eq!(*cfg.q_values.first().unwrap(), 0.05);
        assert_eq!(*cfg.q_values.last().unwrap(), 0.95);
        assert_eq!(cfg.cell_count(), 2 * 4 * 1 * 19);
        let cells = cfg.cells(cfg.seed);
        assert_eq!(cells.len(), cfg.cell_count());
        // distribution-major order: first half weibull, second half normal
        assert_eq!(cells[0].dist.family_name(), "weibull");
        assert_eq!(cells[cells.len() - 1].dist.family_name(), "normal");
        // q varies fastest
        assert_eq!(cells[0].q.value(), 0.05);
        assert_eq!(cells[1].q.value(), 0.1);
    }

    #[test]
    fn q_list_form_accepted() {
        let text = GOOD.replace(
            r#"{"start": 0.05, "stop": 0.95, "step": 0.05}"#,
            "[0.1, 0.5, 0.9]",
        );
        let cfg = RunConfig::from_json_str(&text).unwrap();
        assert_eq!(cfg.q_values, vec![0.1, 0.5, 0.9]);
    }

    #[test]
    fn grid_endpoint_snaps_exactly() {
        let qs = expand_q_range(0.05, 0.95, 0.05).unwrap();
        assert_eq!(qs.len(), 19);
        assert_eq!(qs[18].to_bits(), 0.95f64.to_bits());
        // intermediate values keep their accumulated form
        assert_eq!(qs[2].to_bits(), (0.05f64 + 2.0 * 0.05).to_bits());
    }

    #[test]
    fn single_point_grid() {
        let qs = expand_q_range(0.5, 0.5, 0.05).unwrap();
        assert_eq!(qs, vec![0.5]);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(expand_q_range(0.9, 0.1, 0.05).is_err());
        assert!(expand_q_range(0.1, 0.9, 0.0).is_err());
        assert!(expand_q_range(0.1, 0.9, -0.1).is_err());
        assert!(expand_q_range(0.0, 0.5, 0.1).is_err()); // q = 0 not allowed
    }

    #[test]
    fn rejects_invalid_configs() {
        for (needle, replacement) in [
            (r#""estimators": ["hf7", "q10", "q11:0:15", "q11mle"]"#, r#""estimators": []"#),
            (r#""trials": 100"#, r#""trials": 0"#),
            (r#""sample_sizes": [15]"#, r#""sample_sizes": [1]"#),
            (r#""estimators": ["hf7", "q10", "q11:0:15", "q11mle"]"#, r#""estimators": ["hf12"]"#),
            (r#"{"family": "normal", "params": [0.0, 1.0]}"#, r#"{"family": "normal", "params": [0.0]}"#),
        ] {
            let text = GOOD.replace(needle, replacement);
            assert!(RunConfig::from_json_str(&text).is_err(), "{replacement}");
        }
        assert!(RunConfig::from_json_str("{not json").is_err());
    }

    #[test]
    fn output_path_is_optional() {
        let text = r#"{
            "distributions": [{"family": "exponential", "params": [1.0]}],
            "estimators": ["hf7"],
            "sample_sizes": [5],
            "q_grid": [0.5],
            "trials": 10,
            "seed": 1
        }"#;
        let cfg = RunConfig::from_json_str(text).unwrap();
        assert!(cfg.output_path.is_none());
    }
}
