//! Formula Strategy: closed-form per-interval vertical scaling.
//!
//! For each interval, `s_i = Δy_i / sqrt((y_N - y_0)² + Δy_i²)`. When the
//! segment's endpoints are level, the denominator collapses to |Δy_i| and the
//! factor degenerates to ±1; those entries are clamped just inside the
//! contractivity bound, which keeps the attractor defined at the cost of a
//! large variation. Picking a sequence size whose segment endpoints differ
//! avoids the degeneracy; see `optimize_sequence_size`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fif::{generate_fif, InterpolatedSeries};
use crate::series::TimeSeries;
use crate::strategies::StrategyConfig;

const SCALING_BOUND: f64 = 1.0 - 1e-6;

/// Per-interval scaling factors. `constant` is false: FS varies the factor
/// across intervals, unlike CHS and CVS.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingVector {
    pub values: Vec<f64>,
    pub constant: bool,
    /// How many entries hit the contractivity clamp.
    pub clamped: usize,
}

pub fn fs_scaling(segment: &TimeSeries) -> Result<ScalingVector> {
    if segment.len() < 3 {
        return Err(Error::SegmentTooShort {
            len: segment.len(),
            min: 3,
        });
    }
    let ys: Vec<f64> = segment.points().iter().map(|p| p.1).collect();
    let n = ys.len();
    if ys.iter().all(|&y| y == ys[0]) {
        return Err(Error::AllPointsEqual);
    }
    let end_diff = ys[n - 1] - ys[0];
    let mut clamped = 0usize;
    let values = ys
        .windows(2)
        .map(|w| {
            let dy = w[1] - w[0];
            let denom = (end_diff * end_diff + dy * dy).sqrt();
            if denom == 0.0 {
                return 0.0; // flat interval between level endpoints
            }
            let s = dy / denom;
            if s.abs() > SCALING_BOUND {
                clamped += 1;
                s.signum() * SCALING_BOUND
            } else {
                s
            }
        })
        .collect();
    if clamped > 0 {
        log::warn!(
            "{clamped} scaling factor(s) degenerated to |s| = 1 (level segment endpoints); \
             clamped to {SCALING_BOUND}"
        );
    }
    Ok(ScalingVector {
        values,
        constant: false,
        clamped,
    })
}

/// Generates the interpolant with the formula-derived scaling; no search loop
/// is involved, so the output is fully deterministic.
pub fn fs(segment: &TimeSeries, config: &StrategyConfig) -> Result<InterpolatedSeries> {
    let scaling = fs_scaling(segment)?;
    generate_fif(segment, &scaling.values, config.n_interpolation)
}
