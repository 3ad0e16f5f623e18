//! Rescaled-range (R/S) estimation of the Hurst exponent.
//!
//! For each window size w the series is cut into ⌊n/w⌋ blocks; each block
//! contributes the range of its mean-adjusted cumulative sums divided by its
//! standard deviation. The slope of log(R/S) against log(w) is H: ~0.5 for
//! uncorrelated noise, near 1 for strongly persistent series.

use crate::analysis::ols_line;
use crate::error::{Error, Result};

const GRID_POINTS: usize = 12;
/// Standard window floor. Falls back to 4 when [8, n/2] holds fewer than
/// four distinct sizes, keeping short-but-valid inputs estimable.
const W_MIN_STANDARD: usize = 8;
const W_MIN_RELAXED: usize = 4;
const MIN_LEN_STANDARD: usize = 20;
const MIN_LEN_RELAXED: usize = 6;

#[derive(Debug, Clone)]
pub struct HurstEstimate {
    pub h: f64,
    pub window_sizes: Vec<usize>,
    pub rs_values: Vec<f64>,
    pub regression_r2: f64,
}

/// R/S Hurst estimate over window sizes spanning [8, n/2] geometrically.
pub fn hurst_exponent(values: &[f64]) -> Result<HurstEstimate> {
    if values.len() < MIN_LEN_STANDARD {
        return Err(Error::SeriesTooShortForHurst {
            len: values.len(),
            min: MIN_LEN_STANDARD,
        });
    }
    let mut sizes = window_sizes(values.len(), W_MIN_STANDARD);
    if sizes.len() < 4 {
        sizes = window_sizes(values.len(), W_MIN_RELAXED);
    }
    estimate(values, &sizes)
}

/// Variant for short raw segments (windows from 4, or from 2 below ten
/// points). May regress on as few as two sizes; intended for rough targets
/// such as the pre-interpolation Hurst of a ten-point segment.
pub fn hurst_exponent_relaxed(values: &[f64]) -> Result<HurstEstimate> {
    if values.len() < MIN_LEN_RELAXED {
        return Err(Error::SeriesTooShortForHurst {
            len: values.len(),
            min: MIN_LEN_RELAXED,
        });
    }
    let w_min = if values.len() >= 10 { W_MIN_RELAXED } else { 2 };
    estimate(values, &window_sizes(values.len(), w_min))
}

fn estimate(values: &[f64], sizes: &[usize]) -> Result<HurstEstimate> {
    let (min, max) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    if max - min == 0.0 {
        return Err(Error::ConstantSeries);
    }

    let mut kept_sizes = Vec::with_capacity(sizes.len());
    let mut rs_values = Vec::with_capacity(sizes.len());
    for &w in sizes {
        if let Some(rs) = mean_rescaled_range(values, w) {
            kept_sizes.push(w);
            rs_values.push(rs);
        }
    }
    if kept_sizes.len() < 2 {
        return Err(Error::SeriesTooShortForHurst {
            len: values.len(),
            min: MIN_LEN_RELAXED,
        });
    }

    let lx: Vec<f64> = kept_sizes.iter().map(|&w| (w as f64).ln()).collect();
    let ly: Vec<f64> = rs_values.iter().map(|&v| v.ln()).collect();
    let (h, _, r2) = ols_line(&lx, &ly);
    Ok(HurstEstimate {
        h,
        window_sizes: kept_sizes,
        rs_values,
        regression_r2: r2,
    })
}

/// Mean R/S over all complete blocks of size `w`; None if every block is
/// degenerate (zero variance).
fn mean_rescaled_range(values: &[f64], w: usize) -> Option<f64> {
    let blocks = values.len() / w;
    let mut sum = 0.0;
    let mut count = 0usize;
    for b in 0..blocks {
        let block = &values[b * w..(b + 1) * w];
        let mean = block.iter().sum::<f64>() / w as f64;
        let mut cum = 0.0;
        let mut zmin = f64::INFINITY;
        let mut zmax = f64::NEG_INFINITY;
        let mut var = 0.0;
        for &v in block {
            let dev = v - mean;
            cum += dev;
            zmin = zmin.min(cum);
            zmax = zmax.max(cum);
            var += dev * dev;
        }
        let sd = (var / w as f64).sqrt();
        if sd > 1e-12 {
            sum += (zmax - zmin) / sd;
            count += 1;
        }
    }
    (count > 0).then(|| sum / count as f64)
}

/// Geometric grid of distinct integer window sizes in [w_min, n/2].
fn window_sizes(n: usize, w_min: usize) -> Vec<usize> {
    let w_max = n / 2;
    if w_max < w_min {
        return Vec::new();
    }
    if w_max == w_min {
        return vec![w_min];
    }
    let ratio = (w_max as f64 / w_min as f64).powf(1.0 / (GRID_POINTS - 1) as f64);
    let mut sizes: Vec<usize> = (0..GRID_POINTS)
        .map(|k| (w_min as f64 * ratio.powi(k as i32)).round() as usize)
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes.retain(|&w| w >= w_min && w <= w_max);
    sizes
}
