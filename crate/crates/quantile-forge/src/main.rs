use clap::{Parser, Subcommand};
use quantile_forge::cli;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "quantile-forge",
    version,
    about = "Benchmark classical and exponential-model corrected quantile estimators"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a Monte Carlo grid from a JSON config and write the results CSV
    Simulate {
        /// Path to the JSON run configuration
        #[arg(long)]
        config: PathBuf,
        /// Output CSV path (overrides the config's output_path)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker thread count (default: one per CPU core)
        #[arg(long)]
        threads: Option<usize>,
        /// Seed override; takes precedence over QFORGE_SEED and the config
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the closed-form type-7 exponential bias and the correcting
    /// interpolation fraction over a q grid
    AnalyticBias {
        /// Sample size (at least 2)
        #[arg(long)]
        n: usize,
        /// Grid as start:stop:step, e.g. 0.05:0.95:0.05
        #[arg(long = "q-grid")]
        q_grid: String,
    },
    /// Find the quantile level where the type-7 estimator is exactly
    /// unbiased under the exponential model
    ZeroBias {
        /// Sample size (at least 2)
        #[arg(long)]
        n: usize,
    },
    /// Print the minimum-variance unbiased weight vector for (n, i, m, q)
    Weights {
        /// Sample size
        #[arg(long)]
        n: usize,
        /// Anchor order-statistic index (0 anchors at the support minimum)
        #[arg(long)]
        i: usize,
        /// Number of weighted terms above the anchor
        #[arg(long)]
        m: usize,
        /// Target probability in (0, 1)
        #[arg(long)]
        q: f64,
    },
}

fn main() {
    let args = Args::parse();
    let result = match args.command {
        Command::Simulate {
            config,
            out,
            threads,
            seed,
        } => cli::cmd_simulate(&config, out, threads, seed),
        Command::AnalyticBias { n, q_grid } => cli::cmd_analytic_bias(n, &q_grid),
        Command::ZeroBias { n } => cli::cmd_zero_bias(n),
        Command::Weights { n, i, m, q } => cli::cmd_weights(n, i, m, q),
    };
    match result {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
