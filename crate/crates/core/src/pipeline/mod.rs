//! End-to-end preprocessing and forecasting: normalization, stationarity
//! transforms, chronological splitting, supervised windowing, a small
//! recurrent predictor with an autoregressive baseline, and tuning.

mod ar;
mod normalize;
mod predictor;
mod stationarity;
mod tune;
mod window;

pub use ar::{fit_ar_baseline, ArPredictor, DEFAULT_RIDGE};
pub use normalize::{denormalize, normalize, NormParams};
pub use predictor::{
    evaluate, predict, train_predictor, Forecaster, PredictorConfig, RecurrentPredictor,
};
pub use stationarity::{apply_transform, select_transform, TransformMethod, TransformRecord};
pub use tune::{
    mean_test_rmse, tune_hyperparameters, tune_hyperparameters_detailed, window_ceiling,
    TuneOptions,
};
pub use window::{chronological_split, make_windows, SupervisedSet};
