//! Sampling-rate simulation: downsample a fine series, re-densify it with an
//! interpolation strategy, and score the reconstruction against the original.
//!
//! With factor f, the coarse series keeps every f-th point and interpolation
//! with `n_interpolation = f - 1` restores the original point count, so the
//! reconstruction pairs with the ground truth position by position.

use crate::analysis::{metrics, Metrics};
use crate::error::{Error, Result};
use crate::series::TimeSeries;
use crate::strategies::{augment, StrategyConfig};

#[derive(Debug, Clone)]
pub struct DensifyReport {
    pub interpolated: TimeSeries,
    pub metrics: Metrics,
    /// Fine points actually compared (the tail beyond the last coarse sample
    /// is trimmed).
    pub compared_points: usize,
    pub factor: usize,
}

/// Downsamples `fine` by `factor` and reconstructs it with the strategy.
pub fn simulate_densify(
    fine: &TimeSeries,
    factor: usize,
    config: &StrategyConfig,
) -> Result<DensifyReport> {
    if factor == 0 || fine.len() < factor + 1 {
        return Err(Error::FactorMismatch {
            factor,
            fine: fine.len(),
            coarse: 0,
        });
    }
    let usable = (fine.len() - 1) / factor * factor + 1;
    let truth = fine.slice(0, usable - 1)?;
    let coarse = truth.downsample(factor)?;
    densify_against(&coarse, &truth, factor, config)
}

/// Reconstructs `coarse` with `n_interpolation = factor - 1` and scores it
/// against an explicitly provided ground truth.
pub fn densify_against(
    coarse: &TimeSeries,
    truth: &TimeSeries,
    factor: usize,
    config: &StrategyConfig,
) -> Result<DensifyReport> {
    if factor == 0 || truth.len() != (coarse.len() - 1) * factor + 1 {
        return Err(Error::FactorMismatch {
            factor,
            fine: truth.len(),
            coarse: coarse.len(),
        });
    }
    let interpolated = if factor == 1 {
        coarse.clone()
    } else {
        let mut cfg = config.clone();
        cfg.n_interpolation = factor - 1;
        augment(coarse, &cfg)?.series
    };
    let m = metrics(&interpolated.values(), &truth.values())?;
    Ok(DensifyReport {
        compared_points: interpolated.len(),
        interpolated,
        metrics: m,
        factor,
    })
}
