//! Command-line front end: dataset generation, interpolation strategies,
//! sampling-rate simulation, forecasting, analysis and SVG plots.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 numerical or
//! domain error. Every randomized command takes `--seed` (default 0) and is
//! byte-reproducible given identical inputs.

mod commands;
mod io;
mod manifest;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fractal_ts::strategies::StrategyKind;

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Usage(String),
    Domain(fractal_ts::Error),
}

impl CliError {
    fn io(msg: impl Into<String>) -> Self {
        CliError::Io(msg.into())
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
            CliError::Domain(_) => "domain",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<fractal_ts::Error> for CliError {
    fn from(e: fractal_ts::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Parser)]
#[command(name = "fractal-ts", version, about = "Fractal-interpolation time-series toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ArgStrategy {
    Chs,
    Cvs,
    Fs,
    Linear,
}

impl ArgStrategy {
    pub fn kind(self) -> StrategyKind {
        match self {
            ArgStrategy::Chs => StrategyKind::Chs,
            ArgStrategy::Cvs => StrategyKind::Cvs,
            ArgStrategy::Fs => StrategyKind::Fs,
            ArgStrategy::Linear => StrategyKind::Linear,
        }
    }
}

#[derive(Args, Debug)]
pub struct StrategyArgs {
    #[arg(long, value_enum, required_unless_present = "strategy_config")]
    pub strategy: Option<ArgStrategy>,
    /// Full strategy configuration as a JSON document (as recorded in run
    /// manifests); overrides the individual flags.
    #[arg(long)]
    pub strategy_config: Option<PathBuf>,
    /// Interior points generated per gap.
    #[arg(long, default_value_t = 17)]
    pub n_interpolation: usize,
    /// Segment length; FS picks its own when omitted.
    #[arg(long)]
    pub sequence_size: Option<usize>,
    /// Require equal-size segments.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Augment a CSV series with an interpolation strategy.
    Interpolate {
        input: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Downsample, re-densify and score against the ground truth.
    SimulateDensify {
        input: PathBuf,
        /// Sampling-rate ratio between ground truth and coarse series.
        #[arg(long)]
        factor: usize,
        #[command(flatten)]
        strategy: StrategyArgs,
        /// Fine series to score against when `input` is already coarse.
        #[arg(long)]
        ground_truth: Option<PathBuf>,
        /// Write the MAE report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// End-to-end pipeline: optional augmentation, transforms, training.
    Forecast {
        input: PathBuf,
        /// Augmentation strategy; omit to forecast the raw series.
        #[arg(long, value_enum)]
        strategy: Option<ArgStrategy>,
        #[arg(long, default_value_t = 17)]
        n_interpolation: usize,
        #[arg(long)]
        sequence_size: Option<usize>,
        /// Tune hyperparameters before training.
        #[arg(long, conflicts_with = "config")]
        tune: bool,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        /// Predictor configuration JSON (as emitted by --emit-config).
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the metrics report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the tuned/used predictor configuration as JSON.
        #[arg(long)]
        emit_config: Option<PathBuf>,
        /// Write the trained predictor weights as JSON.
        #[arg(long)]
        save_model: Option<PathBuf>,
        /// Write the tuning study history as JSON (requires --tune).
        #[arg(long, requires = "tune")]
        study_log: Option<PathBuf>,
    },
    /// Print Hurst exponent and/or ADF stationarity test results.
    Analyze {
        input: PathBuf,
        #[arg(long)]
        hurst: bool,
        #[arg(long)]
        adf: bool,
    },
    /// Render one or more series into a single SVG line chart.
    Plot {
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a synthetic dataset.
    Generate {
        #[arg(long, value_enum)]
        kind: GenerateKind,
        #[arg(long, default_value_t = 168)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenerateKind {
    Diurnal,
    Noise,
    Randomwalk,
    Gamma,
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Interpolate {
            input,
            strategy,
            out,
        } => commands::interpolate::run(&input, &strategy, &out),
        Command::SimulateDensify {
            input,
            factor,
            strategy,
            ground_truth,
            out,
        } => commands::densify::run(
            &input,
            factor,
            &strategy,
            ground_truth.as_deref(),
            out.as_deref(),
        ),
        Command::Forecast {
            input,
            strategy,
            n_interpolation,
            sequence_size,
            tune,
            trials,
            repeats,
            config,
            seed,
            out,
            emit_config,
            save_model,
            study_log,
        } => commands::forecast::run(commands::forecast::ForecastArgs {
            input,
            strategy,
            n_interpolation,
            sequence_size,
            tune,
            trials,
            repeats,
            config,
            seed,
            out,
            emit_config,
            save_model,
            study_log,
        }),
        Command::Analyze { input, hurst, adf } => commands::analyze::run(&input, hurst, adf),
        Command::Plot { inputs, out } => commands::plot::run(&inputs, &out),
        Command::Generate { kind, n, seed, out } => commands::generate::run(kind, n, seed, &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.label());
            ExitCode::from(e.code())
        }
    }
}
