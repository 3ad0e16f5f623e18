//! Sequence-size optimization for the Formula Strategy.
//!
//! Searches integer sequence sizes in `[4, len - 3]` with a minimize study.
//! The objective splits the series non-strict, applies FS per segment, and
//! sums the per-segment RMSE against the linear interpolant. Sizes that put
//! a segment's endpoints at nearly equal values blow the formula's scaling
//! up to the clamp and score badly, so the study steers away from them.

use crate::analysis::metrics;
use crate::error::{Error, Result};
use crate::fif::evaluate_linear;
use crate::optimizer::Study;
use crate::segment::split;
use crate::series::TimeSeries;
use crate::strategies::{fs, StrategyConfig, StrategyKind};

pub fn optimize_sequence_size(
    series: &TimeSeries,
    n_interpolation: usize,
    trials: usize,
    seed: u64,
) -> Result<usize> {
    if series.len() < 8 {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            min: 8,
        });
    }
    let high = (series.len() - 3) as i64;
    let mut study = Study::minimize(seed);
    let best = study.run(trials.max(1), |trial| {
        let size = trial.suggest_int("sequence_size", 4, high)? as usize;
        total_rmse(series, size, n_interpolation)
    })?;
    Ok(best.param("sequence_size").expect("suggested").as_i64() as usize)
}

/// Sum of per-segment RMSE(FS points, linear interpolant at the same xs).
pub(crate) fn total_rmse(
    series: &TimeSeries,
    sequence_size: usize,
    n_interpolation: usize,
) -> Result<f64> {
    let mut config = StrategyConfig::new(StrategyKind::Fs);
    config.n_interpolation = n_interpolation;
    let mut total = 0.0;
    for segment in split(series, sequence_size, false)? {
        let interp = fs(&segment.series, &config)?;
        let xs: Vec<f64> = interp.points.xs().collect();
        let lin = evaluate_linear(&segment.series, &xs)?;
        total += metrics(&interp.points.values(), &lin)?.rmse;
    }
    Ok(total)
}
