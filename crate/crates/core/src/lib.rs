//! Time-series augmentation through fractal interpolation, with the analysis
//! and forecasting machinery needed to measure what the augmentation buys.
//!
//! The crate is organized around a small number of moving parts:
//!
//! * [`fif`] — iterated-function-system interpolation of one segment;
//! * [`segment`] — overlapping splits of a series and their reunification;
//! * [`strategies`] — the CHS / CVS / FS scaling-factor strategies and the
//!   whole-series augmentation driver;
//! * [`optimizer`] — a minimal study/trial engine with a TPE sampler;
//! * [`analysis`] — Hurst exponent, unit-root testing, error metrics;
//! * [`pipeline`] — normalization, stationarity transforms, windowing, a
//!   gated recurrent predictor plus an autoregressive baseline, and tuning;
//! * [`densify`] — sampling-rate simulation against a known ground truth;
//! * [`synth`] — synthetic datasets for experiments and tests.
//!
//! Everything is deterministic under explicit seeds. With the `parallel`
//! feature (on by default) independent segments and tuning repeats run on a
//! rayon pool; per-item seeds keep results identical to sequential runs.
//!
//! ```
//! use fractal_ts::strategies::{augment, StrategyConfig, StrategyKind};
//! use fractal_ts::synth::diurnal;
//!
//! let series = diurnal(168, 0)?;
//! let mut config = StrategyConfig::new(StrategyKind::Cvs).with_seed(0);
//! config.sequence_size = Some(10);
//! let augmented = augment(&series, &config)?;
//! assert_eq!(augmented.series.len(), 168 + 167 * 17);
//! # Ok::<(), fractal_ts::Error>(())
//! ```

pub mod analysis;
pub mod densify;
pub mod error;
mod exec;
pub mod fif;
pub mod optimizer;
pub mod pipeline;
pub mod rng;
pub mod segment;
pub mod series;
pub mod strategies;
pub mod synth;

pub use error::{Error, Result};
pub use series::TimeSeries;
