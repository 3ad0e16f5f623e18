//! The interpolation strategies and the whole-series augmentation driver.
//!
//! All strategies subdivide a segment's gaps with the same point generator
//! and differ only in how the vertical scaling is chosen:
//!
//! * **CHS** — random constant scaling, keep the candidate whose Hurst
//!   exponent lands closest to the raw segment's.
//! * **CVS** — constant scaling tuned by a minimize study against the RMSE
//!   to the linear interpolant.
//! * **FS** — closed-form per-interval scaling from the increment formula;
//!   no search loop.
//! * **Linear** — evenly spaced points on the linear interpolant, as the
//!   comparison baseline.

mod chs;
mod cvs;
mod fs;
mod seqsize;

pub use chs::{chs, chs_detailed, ChsCandidate, ChsRun};
pub use cvs::{cvs, cvs_detailed, CvsRun};
pub use fs::{fs, fs_scaling, ScalingVector};
pub use seqsize::optimize_sequence_size;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::fif::{evaluate_linear, InterpolatedSeries};
use crate::rng::derive_seed;
use crate::segment::{reunite, split, Segment};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyKind {
    Chs,
    Cvs,
    Fs,
    Linear,
}

impl StrategyKind {
    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Chs => "chs",
            StrategyKind::Cvs => "cvs",
            StrategyKind::Fs => "fs",
            StrategyKind::Linear => "linear",
        }
    }
}

/// Configuration shared by all strategies.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrategyConfig {
    pub kind: StrategyKind,
    /// Interior points generated per gap.
    pub n_interpolation: usize,
    /// Segment length; `None` means 10, except for FS where the sequence-size
    /// study picks it.
    pub sequence_size: Option<usize>,
    /// Range the constant scaling factor is drawn from (CHS) or searched in
    /// (CVS).
    pub s_range: (f64, f64),
    /// CHS candidate draws.
    pub iterations: usize,
    /// CVS study trials.
    pub trials: usize,
    /// Sequence-size study trials (FS without an explicit sequence_size).
    pub seq_size_trials: usize,
    pub seed: u64,
    pub strict: bool,
}

pub const DEFAULT_SEQUENCE_SIZE: usize = 10;
pub const DEFAULT_N_INTERPOLATION: usize = 17;

impl StrategyConfig {
    pub fn new(kind: StrategyKind) -> Self {
        Self {
            kind,
            n_interpolation: DEFAULT_N_INTERPOLATION,
            sequence_size: None,
            s_range: (-1.0, 1.0),
            iterations: 15,
            trials: 15,
            seq_size_trials: 50,
            seed: 0,
            strict: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_interpolation == 0 || self.iterations == 0 || self.trials == 0 {
            return Err(Error::EmptyInput);
        }
        let (lo, hi) = self.s_range;
        if lo.is_nan() || hi.is_nan() || lo >= hi || lo < -1.0 || hi > 1.0 {
            return Err(Error::InvalidRange {
                name: "s_range".into(),
                low: lo,
                high: hi,
            });
        }
        Ok(())
    }
}

/// Runs one strategy on a single segment. `seed` feeds the segment's own
/// random draws or study.
pub fn run_strategy(
    segment: &TimeSeries,
    config: &StrategyConfig,
    seed: u64,
) -> Result<InterpolatedSeries> {
    match config.kind {
        StrategyKind::Chs => chs::chs_seeded(segment, config, seed),
        StrategyKind::Cvs => cvs::cvs_seeded(segment, config, seed),
        StrategyKind::Fs => fs(segment, config),
        StrategyKind::Linear => linear_interpolation(segment, config.n_interpolation),
    }
}

/// Comparison baseline: `n_interpolation` evenly spaced points per gap on the
/// piecewise-linear interpolant.
pub fn linear_interpolation(segment: &TimeSeries, n: usize) -> Result<InterpolatedSeries> {
    if segment.len() < 3 {
        return Err(Error::SegmentTooShort {
            len: segment.len(),
            min: 3,
        });
    }
    let nodes = segment.points();
    let mut out = Vec::with_capacity(nodes.len() + (nodes.len() - 1) * n);
    let mut node_indices = Vec::with_capacity(nodes.len());
    for gap in 0..nodes.len() - 1 {
        node_indices.push(out.len());
        out.push(nodes[gap]);
        let (lo, hi) = (nodes[gap].0, nodes[gap + 1].0);
        let xs: Vec<f64> = (1..=n)
            .map(|k| lo + (hi - lo) * k as f64 / (n + 1) as f64)
            .collect();
        let ys = evaluate_linear(segment, &xs)?;
        out.extend(xs.into_iter().zip(ys));
    }
    node_indices.push(out.len());
    out.push(nodes[nodes.len() - 1]);
    Ok(InterpolatedSeries {
        points: TimeSeries::from_points(out)?,
        node_indices,
        n_interpolation: n,
    })
}

/// Outcome of a whole-series augmentation.
#[derive(Debug, Clone)]
pub struct AugmentResult {
    pub series: TimeSeries,
    /// Sequence size actually used (relevant when FS picked its own).
    pub sequence_size: usize,
}

/// Split → per-segment strategy → reunite. Segments run through the
/// data-parallel pool when the `parallel` feature is on; per-segment seeds
/// derive from `(config.seed, segment index)`, so the result is identical
/// either way.
pub fn augment(series: &TimeSeries, config: &StrategyConfig) -> Result<AugmentResult> {
    let (sequence_size, indexed) = prepare_segments(series, config)?;
    let cfg = config.clone();
    let interpolated = exec::try_map(indexed, move |(i, seg): (usize, Segment)| {
        run_strategy(&seg.series, &cfg, derive_seed(cfg.seed, i as u64))
    })?;
    Ok(AugmentResult {
        series: reunite(&interpolated)?,
        sequence_size,
    })
}

/// Always-sequential reference path for benchmarks and determinism checks.
pub fn augment_seq(series: &TimeSeries, config: &StrategyConfig) -> Result<AugmentResult> {
    let (sequence_size, indexed) = prepare_segments(series, config)?;
    let interpolated = exec::try_map_seq(indexed, |(i, seg): (usize, Segment)| {
        run_strategy(&seg.series, config, derive_seed(config.seed, i as u64))
    })?;
    Ok(AugmentResult {
        series: reunite(&interpolated)?,
        sequence_size,
    })
}

fn prepare_segments(
    series: &TimeSeries,
    config: &StrategyConfig,
) -> Result<(usize, Vec<(usize, Segment)>)> {
    config.validate()?;
    let sequence_size = match config.sequence_size {
        Some(s) => s,
        None if config.kind == StrategyKind::Fs => optimize_sequence_size(
            series,
            config.n_interpolation,
            config.seq_size_trials,
            config.seed,
        )?,
        None => DEFAULT_SEQUENCE_SIZE,
    };
    let segments = split(series, sequence_size, config.strict)?;
    Ok((sequence_size, segments.into_iter().enumerate().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn noisy_trend(n: usize) -> TimeSeries {
        // deterministic pseudo-noise is enough here
        TimeSeries::from_values(
            &(0..n)
                .map(|i| 0.5 * i as f64 + (i as f64 * 12.9898).sin())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn augment_length_arithmetic_all_strategies() {
        let series = noisy_trend(36);
        for kind in [
            StrategyKind::Chs,
            StrategyKind::Cvs,
            StrategyKind::Fs,
            StrategyKind::Linear,
        ] {
            let mut config = StrategyConfig::new(kind).with_seed(3);
            config.sequence_size = Some(10);
            let out = augment(&series, &config).unwrap();
            assert_eq!(out.series.len(), 36 + 35 * 17, "{kind:?}");
            // all original points present verbatim
            for p in series.points() {
                assert!(out.series.points().contains(p), "{kind:?} lost {p:?}");
            }
        }
    }

    #[test]
    fn linear_strategy_is_collinear_on_linear_data() {
        let series = TimeSeries::from_values(&[0.0, 2.0, 4.0, 6.0, 8.0, 10.0]).unwrap();
        let out = linear_interpolation(&series, 17).unwrap();
        for (x, y) in out.points.points() {
            assert!((y - 2.0 * x).abs() < 1e-9);
        }
    }

    #[test]
    fn parallel_and_sequential_paths_agree() {
        let series = noisy_trend(30);
        let mut config = StrategyConfig::new(StrategyKind::Cvs).with_seed(17);
        config.sequence_size = Some(10);
        let par = augment(&series, &config).unwrap();
        let seq = augment_seq(&series, &config).unwrap();
        assert_eq!(par.series, seq.series);
    }

    #[test]
    fn rejects_invalid_s_range() {
        let series = noisy_trend(12);
        let mut config = StrategyConfig::new(StrategyKind::Chs);
        config.s_range = (0.5, 0.2);
        assert!(matches!(
            augment(&series, &config),
            Err(Error::InvalidRange { .. })
        ));
    }
}
