//! Command implementations behind the `quantile-forge` binary.
//!
//! Everything here is a plain function from parsed arguments to output
//! text, so the whole surface is testable without spawning a process.
//! Exit-code contract: 0 success, 2 configuration/validation problems,
//! 3 a simulation cell failed (named by index), 4 numerical failure.

mod config;
mod report;

pub use config::{expand_q_range, RunConfig};
pub use report::{render_analytic_bias, render_csv, render_weights, CSV_HEADER};

use crate::error::Error;
use crate::estimators::optimal_weights;
use crate::sample::QuantileQuery;
use crate::simulation::{run_grid, zero_bias_quantile_search};
use std::fmt;
use std::path::{Path, PathBuf};

/// CLI-level failure, tagged with the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad configuration, arguments, or input files (exit 2).
    Config(String),
    /// A specific grid cell is invalid or failed (exit 3).
    Cell { index: usize, message: String },
    /// A numerical routine could not produce a result (exit 4).
    Numerical(String),
}

impl CliError {
    pub(crate) fn config(message: String) -> Self {
        Self::Config(message)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => 2,
            Self::Cell { .. } => 3,
            Self::Numerical(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Config(m) => write!(f, "{m}"),
            Self::Cell { index, message } => write!(f, "cell {index}: {message}"),
            Self::Numerical(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidCell { index, source } => Self::Cell {
                index,
                message: source.to_string(),
            },
            Error::NoSignChange { .. } | Error::NoConvergence { .. } => {
                Self::Numerical(e.to_string())
            }
            other => Self::Config(other.to_string()),
        }
    }
}

/// Seed precedence: command-line flag, then the QFORGE_SEED environment
/// variable, then the config file.
pub fn resolve_seed(
    flag: Option<u64>,
    env_value: Option<&str>,
    config_seed: u64,
) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    if let Some(text) = env_value {
        return text.trim().parse::<u64>().map_err(|_| {
            CliError::config(format!(
                "QFORGE_SEED must be an unsigned 64-bit integer, got {text:?}"
            ))
        });
    }
    Ok(config_seed)
}

/// Run a full simulation grid and render the CSV. With `threads` set, the
/// run executes on a dedicated pool of that size; the output bytes do not
/// depend on the thread count.
pub fn simulate_to_csv(
    config: &RunConfig,
    seed: u64,
    threads: Option<usize>,
) -> Result<String, CliError> {
    let cells = config.cells(seed);
    let results = match threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| CliError::config(format!("cannot build thread pool: {e}")))?;
            pool.install(|| run_grid(&cells))?
        }
        None => run_grid(&cells)?,
    };
    Ok(render_csv(&results))
}

/// `simulate` subcommand: load config, run the grid, write the CSV.
/// Returns a one-line summary for stdout.
pub fn cmd_simulate(
    config_path: &Path,
    out_flag: Option<PathBuf>,
    threads: Option<usize>,
    seed_flag: Option<u64>,
) -> Result<String, CliError> {
    let config = RunConfig::load(config_path)?;
    let seed = resolve_seed(
        seed_flag,
        std::env::var("QFORGE_SEED").ok().as_deref(),
        config.seed,
    )?;
    let out_path = out_flag.or_else(|| config.output_path.clone()).ok_or_else(|| {
        CliError::config(
            "no output path: set output_path in the config or pass --out".to_string(),
        )
    })?;
    let csv = simulate_to_csv(&config, seed, threads)?;
    std::fs::write(&out_path, &csv).map_err(|e| {
        CliError::config(format!("cannot write {}: {e}", out_path.display()))
    })?;
    Ok(format!(
        "wrote {} rows to {}\n",
        config.cell_count(),
        out_path.display()
    ))
}

/// Parse a `start:stop:step` grid argument.
pub fn parse_grid_arg(text: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::config(format!(
            "bad q grid {text:?}: expected start:stop:step"
        )));
    }
    let mut nums = [0.0f64; 3];
    for (slot, part) in nums.iter_mut().zip(&parts) {
        *slot = part.parse().map_err(|_| {
            CliError::config(format!("bad q grid {text:?}: {part:?} is not a number"))
        })?;
    }
    expand_q_range(nums[0], nums[1], nums[2])
}

/// `analytic-bias` subcommand: closed-form type-7 bias and correcting
/// fraction over a grid, as CSV on stdout.
pub fn cmd_analytic_bias(n: usize, grid_text: &str) -> Result<String, CliError> {
    let qs = parse_grid_arg(grid_text)?;
    Ok(render_analytic_bias(n, &qs)?)
}

/// `zero-bias` subcommand: locate the bias-free quantile level for the
/// type-7 estimator under the exponential model.
///
/// Brackets automatically by scanning a 0.01-spaced grid for a sign change,
/// then bisects.
pub fn cmd_zero_bias(n: usize) -> Result<String, CliError> {
    let bias_at = |x: f64| -> Result<f64, Error> {
        crate::estimators::q7_exp_bias(QuantileQuery::new(x)?, n)
    };
    let mut prev_q = 0.01;
    let mut prev_b = bias_at(prev_q)?;
    for k in 2..100 {
        let cur_q = k as f64 * 0.01;
        let cur_b = bias_at(cur_q)?;
        if prev_b.abs() <= 1e-10 {
            return Ok(format!("q* = {prev_q}\n"));
        }
        if (cur_b > 0.0) != (prev_b > 0.0) || cur_b.abs() <= 1e-10 {
            let root = zero_bias_quantile_search(n, prev_q, cur_q)?;
            return Ok(format!("q* = {root}\n"));
        }
        prev_q = cur_q;
        prev_b = cur_b;
    }
    Err(CliError::Numerical(format!(
        "no sign change in the type-7 exponential bias on the 0.01 grid for n = {n}"
    )))
}

/// `weights` subcommand: print the optimal weight vector for (n, i, m, q).
pub fn cmd_weights(n: usize, i: usize, m: usize, q: f64) -> Result<String, CliError> {
    let query = QuantileQuery::new(q)?;
    let w = optimal_weights(n, i, m, query)?;
    Ok(render_weights(&w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_precedence_flag_env_config() {
        assert_eq!(resolve_seed(Some(1), Some("2"), 3).unwrap(), 1);
        assert_eq!(resolve_seed(None, Some("2"), 3).unwrap(), 2);
        assert_eq!(resolve_seed(None, None, 3).unwrap(), 3);
        assert!(resolve_seed(None, Some("not-a-number"), 3).is_err());
    }

    #[test]
    fn grid_arg_parsing() {
        let qs = parse_grid_arg("0.05:0.95:0.05").unwrap();
        assert_eq!(qs.len(), 19);
        assert!(parse_grid_arg("0.05:0.95").is_err());
        assert!(parse_grid_arg("a:b:c").is_err());
        assert!(parse_grid_arg("0.5:0.4:0.1").is_err());
    }

    #[test]
    fn zero_bias_command_output() {
        let line = cmd_zero_bias(15).unwrap();
        assert!(line.starts_with("q* = 0.67"), "{line}");
        let line = cmd_zero_bias(2).unwrap();
        assert!(line.starts_with("q* = 0.698"), "{line}");
        // auto-bracketing handles large n as well
        let line = cmd_zero_bias(1000).unwrap();
        let value: f64 = line.trim().strip_prefix("q* = ").unwrap().parse().unwrap();
        assert!(value > 0.6 && value < 0.75, "{value}");
        // n < 2 is a parameter error (exit 2), not a numerical one
        match cmd_zero_bias(1) {
            Err(e) => assert_eq!(e.exit_code(), 2),
            Ok(_) => panic!("n = 1 should fail"),
        }
    }

    #[test]
    fn analytic_bias_command_rejects_small_n() {
        match cmd_analytic_bias(1, "0.1:0.9:0.1") {
            Err(e) => assert_eq!(e.exit_code(), 2),
            Ok(_) => panic!("n = 1 should fail"),
        }
    }

    #[test]
    fn weights_command_maps_errors_to_exit_2() {
        assert!(cmd_weights(5, 2, 3, 0.5).is_ok());
        for (n, i, m, q) in [(5, 5, 1, 0.5), (5, 2, 0, 0.5), (5, 2, 1, 1.5)] {
            match cmd_weights(n, i, m, q) {
                Err(e) => assert_eq!(e.exit_code(), 2, "({n},{i},{m},{q})"),
                Ok(_) => panic!("({n},{i},{m},{q}) should fail"),
            }
        }
    }

    #[test]
    fn error_mapping_covers_cell_and_numerical() {
        let cell = Error::InvalidCell {
            index: 4,
            source: Box::new(Error::ZeroTrials),
        };
        let mapped: CliError = cell.into();
        assert_eq!(mapped.exit_code(), 3);
        assert!(mapped.to_string().contains("cell 4"));

        let numeric: CliError = Error::NoSignChange { lo: 0.1, hi: 0.2 }.into();
        assert_eq!(numeric.exit_code(), 4);
    }
}
