//! Hyperparameter tuning for the recurrent predictor.
//!
//! A minimize study searches units, window length and learning rate; epochs
//! are fixed per dataset kind (150 raw, 25 interpolated). Each trial fits the
//! model `repeats` times with derived seeds and scores the mean test RMSE, so
//! the winning configuration is stable rather than lucky.

use crate::error::{Error, Result};
use crate::exec;
use crate::optimizer::Study;
use crate::pipeline::predictor::{evaluate, train_predictor, PredictorConfig};
use crate::pipeline::window::{chronological_split, make_windows};
use crate::rng::derive_seed;

/// Search budget and bounds. `default_raw`/`default_interpolated` match the
/// full procedure; `lite` trims trials, repeats and bounds to desk scale.
#[derive(Debug, Clone, Copy)]
pub struct TuneOptions {
    pub trials: usize,
    pub repeats: usize,
    pub seed: u64,
    /// Window search cap before the 30%-of-length rule: 15 raw, 100
    /// interpolated.
    pub max_window: usize,
    pub max_units: i64,
    pub epochs: usize,
}

impl TuneOptions {
    pub fn default_raw(seed: u64) -> Self {
        Self {
            trials: 50,
            repeats: 5,
            seed,
            max_window: 15,
            max_units: 64,
            epochs: 150,
        }
    }

    pub fn default_interpolated(seed: u64) -> Self {
        Self {
            trials: 50,
            repeats: 5,
            seed,
            max_window: 100,
            max_units: 64,
            epochs: 25,
        }
    }

    /// Reduced budget that keeps a full tune-train-evaluate cycle tractable
    /// on a single core.
    pub fn lite(interpolated: bool, seed: u64) -> Self {
        Self {
            trials: 10,
            repeats: 2,
            seed,
            max_window: if interpolated { 24 } else { 10 },
            max_units: 24,
            epochs: if interpolated { 8 } else { 60 },
        }
    }
}

/// Upper window bound: min(cap, ⌊0.30·n⌋ − 1), never below 1.
pub fn window_ceiling(dataset_len: usize, cap: usize) -> usize {
    let thirty_percent = (3 * dataset_len) / 10;
    cap.min(thirty_percent.saturating_sub(1)).max(1)
}

/// Tunes (units, window, learning rate) on `values`, which are expected to be
/// normalized already. Returns the best configuration with `epochs` filled
/// from the options and the study seed attached.
pub fn tune_hyperparameters(
    values: &[f64],
    interpolated: bool,
    opts: &TuneOptions,
) -> Result<PredictorConfig> {
    Ok(tune_hyperparameters_detailed(values, interpolated, opts)?.0)
}

/// [`tune_hyperparameters`] plus the study history as a JSON document
/// (trial index, params, objective).
pub fn tune_hyperparameters_detailed(
    values: &[f64],
    interpolated: bool,
    opts: &TuneOptions,
) -> Result<(PredictorConfig, String)> {
    let n = values.len();
    let w_high = window_ceiling(n, opts.max_window);
    if w_high < 1 || n < 10 {
        return Err(Error::SeriesTooShort { len: n, min: 10 });
    }
    let _ = interpolated; // bounds already encoded in the options

    let (train_vals, test_vals) = chronological_split(values, 0.7)?;
    let mut study = Study::minimize(opts.seed);
    let best = study.run(opts.trials, |trial| {
        let units = trial.suggest_int("units", 2, opts.max_units)? as usize;
        let window = if w_high == 1 {
            1
        } else {
            trial.suggest_int("input_data_points", 1, w_high as i64)? as usize
        };
        let learning_rate = trial.suggest_f64("learning_rate", 1e-3, 1e-1)?;
        let trial_seed = derive_seed(opts.seed, 1 + trial.index() as u64);
        let config = PredictorConfig {
            units,
            input_data_points: window,
            learning_rate,
            epochs: opts.epochs,
            seed: trial_seed,
        };
        mean_test_rmse(&train_vals, &test_vals, &config, opts.repeats)
    })?;

    let config = PredictorConfig {
        units: best.param("units").expect("suggested").as_i64() as usize,
        input_data_points: if w_high == 1 {
            1
        } else {
            best.param("input_data_points").expect("suggested").as_i64() as usize
        },
        learning_rate: best.param("learning_rate").expect("suggested").as_f64(),
        epochs: opts.epochs,
        seed: opts.seed,
    };
    Ok((config, study.history_json()))
}

/// Mean test RMSE over `repeats` fits with derived seeds. Repeats run on the
/// data-parallel pool; seeds make the outcome order-independent.
pub fn mean_test_rmse(
    train_vals: &[f64],
    test_vals: &[f64],
    config: &PredictorConfig,
    repeats: usize,
) -> Result<f64> {
    let train_set = make_windows(train_vals, config.input_data_points)?;
    let test_set = make_windows(test_vals, config.input_data_points)?;
    let runs: Vec<u64> = (0..repeats.max(1) as u64).collect();
    let rmses = exec::try_map(runs, |r| {
        let cfg = PredictorConfig {
            seed: derive_seed(config.seed, r),
            ..*config
        };
        let model = train_predictor(&train_set, &cfg)?;
        Ok(evaluate(&model, &test_set)?.rmse)
    })?;
    Ok(rmses.iter().sum::<f64>() / rmses.len() as f64)
}
