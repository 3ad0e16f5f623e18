//! Min-max style normalization onto an arbitrary target interval.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormParams {
    pub data_min: f64,
    pub data_max: f64,
    pub target: (f64, f64),
    /// Set when the input was constant; the forward map sent everything to
    /// the interval midpoint and cannot be inverted.
    pub degenerate: bool,
}

/// Affine map of `[min, max]` onto `[a, b]`. Constant input maps to the
/// target midpoint with the degenerate flag set.
pub fn normalize(values: &[f64], a: f64, b: f64) -> Result<(Vec<f64>, NormParams)> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if a.is_nan() || b.is_nan() || b <= a {
        return Err(Error::InvalidRange {
            name: "target".into(),
            low: a,
            high: b,
        });
    }
    let (min, max) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let params = NormParams {
        data_min: min,
        data_max: max,
        target: (a, b),
        degenerate: max == min,
    };
    let out = if params.degenerate {
        vec![(a + b) / 2.0; values.len()]
    } else {
        let scale = (b - a) / (max - min);
        values.iter().map(|&v| (v - min) * scale + a).collect()
    };
    Ok((out, params))
}

/// Exact inverse of [`normalize`] for non-degenerate parameters.
pub fn denormalize(values: &[f64], params: &NormParams) -> Result<Vec<f64>> {
    if params.degenerate {
        return Err(Error::DegenerateInverse);
    }
    let (a, b) = params.target;
    let scale = (params.data_max - params.data_min) / (b - a);
    Ok(values
        .iter()
        .map(|&v| (v - a) * scale + params.data_min)
        .collect())
}
