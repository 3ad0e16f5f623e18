//! Closest Values Strategy: constant scaling tuned by a minimize study.

use crate::analysis::metrics;
use crate::error::Result;
use crate::fif::{evaluate_linear, generate_fif, InterpolatedSeries};
use crate::optimizer::{Study, Trial};
use crate::series::TimeSeries;
use crate::strategies::StrategyConfig;

#[derive(Debug, Clone)]
pub struct CvsRun {
    pub result: InterpolatedSeries,
    pub best_s: f64,
    pub best_objective: f64,
    pub history: Vec<Trial>,
}

pub fn cvs(segment: &TimeSeries, config: &StrategyConfig) -> Result<InterpolatedSeries> {
    cvs_seeded(segment, config, config.seed)
}

pub(crate) fn cvs_seeded(
    segment: &TimeSeries,
    config: &StrategyConfig,
    seed: u64,
) -> Result<InterpolatedSeries> {
    Ok(cvs_detailed_seeded(segment, config, seed)?.result)
}

/// Like [`cvs`] but returns the study history alongside the result.
pub fn cvs_detailed(segment: &TimeSeries, config: &StrategyConfig) -> Result<CvsRun> {
    cvs_detailed_seeded(segment, config, config.seed)
}

fn cvs_detailed_seeded(
    segment: &TimeSeries,
    config: &StrategyConfig,
    seed: u64,
) -> Result<CvsRun> {
    config.validate()?;
    let intervals = segment.len() - 1;
    let (lo, hi) = config.s_range;
    let n = config.n_interpolation;

    let mut study = Study::minimize(seed);
    let best = study.run(config.trials, |trial| {
        let s = trial.suggest_f64("s", lo, hi)?;
        rmse_to_linear(segment, s, intervals, n)
    })?;

    let best_s = best.param("s").expect("suggested every trial").as_f64();
    let result = generate_fif(segment, &vec![clamp_s(best_s); intervals], n)?;
    Ok(CvsRun {
        result,
        best_s,
        best_objective: best.objective,
        history: study.trials().to_vec(),
    })
}

/// RMSE between the fractal points and the linear interpolant evaluated at
/// the same abscissae (nodes included; they contribute zero).
fn rmse_to_linear(segment: &TimeSeries, s: f64, intervals: usize, n: usize) -> Result<f64> {
    let fif = generate_fif(segment, &vec![clamp_s(s); intervals], n)?;
    let xs: Vec<f64> = fif.points.xs().collect();
    let lin = evaluate_linear(segment, &xs)?;
    Ok(metrics(&fif.points.values(), &lin)?.rmse)
}

fn clamp_s(s: f64) -> f64 {
    const BOUND: f64 = 1.0 - 1e-6;
    s.clamp(-BOUND, BOUND)
}
