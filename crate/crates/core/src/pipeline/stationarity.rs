//! Trend-removal transforms and data-driven transform selection.
//!
//! A series that already tests stationary (ADF p < 0.05) is left alone.
//! Otherwise every transform whose domain admits the data is tried and the
//! one with the smallest post-transform p-value wins.

use serde::{Deserialize, Serialize};

use crate::analysis::{adf_test, AdfResult};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformMethod {
    None,
    Log,
    Sqrt,
    LinearDetrend,
}

impl TransformMethod {
    pub fn name(self) -> &'static str {
        match self {
            TransformMethod::None => "none",
            TransformMethod::Log => "log",
            TransformMethod::Sqrt => "sqrt",
            TransformMethod::LinearDetrend => "linear_detrend",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TransformRecord {
    pub method: TransformMethod,
    /// Slope and intercept of the removed trend (LinearDetrend only).
    pub trend: Option<(f64, f64)>,
    /// ADF results bracketing the transform; absent when the series is too
    /// short to test.
    pub adf_before: Option<AdfResult>,
    pub adf_after: Option<AdfResult>,
}

/// Applies one transform, recording ADF results where the length allows.
pub fn apply_transform(
    values: &[f64],
    method: TransformMethod,
) -> Result<(Vec<f64>, TransformRecord)> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut trend = None;
    let out: Vec<f64> = match method {
        TransformMethod::None => values.to_vec(),
        TransformMethod::Log => {
            check_domain(values, "log", |v| v > 0.0)?;
            values.iter().map(|v| v.ln()).collect()
        }
        TransformMethod::Sqrt => {
            check_domain(values, "sqrt", |v| v >= 0.0)?;
            values.iter().map(|v| v.sqrt()).collect()
        }
        TransformMethod::LinearDetrend => {
            let xs: Vec<f64> = (0..values.len()).map(|i| i as f64).collect();
            let (slope, intercept, _) = crate::analysis::ols_line(&xs, values);
            trend = Some((slope, intercept));
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| v - (slope * i as f64 + intercept))
                .collect()
        }
    };
    let record = TransformRecord {
        method,
        trend,
        adf_before: adf_test(values).ok(),
        adf_after: adf_test(&out).ok(),
    };
    Ok((out, record))
}

fn check_domain(values: &[f64], method: &'static str, ok: fn(f64) -> bool) -> Result<()> {
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| !ok(v)) {
        return Err(Error::DomainViolation {
            method,
            value,
            index,
        });
    }
    Ok(())
}

/// Picks the transform: `None` if the raw series is already stationary,
/// otherwise the applicable transform with the smallest ADF p-value.
pub fn select_transform(values: &[f64]) -> Result<TransformMethod> {
    let raw = adf_test(values)?;
    if raw.is_stationary {
        return Ok(TransformMethod::None);
    }
    let mut best = (TransformMethod::LinearDetrend, f64::INFINITY);
    for method in [
        TransformMethod::Log,
        TransformMethod::Sqrt,
        TransformMethod::LinearDetrend,
    ] {
        let Ok((transformed, _)) = apply_transform(values, method) else {
            continue; // domain excluded
        };
        let p = adf_test(&transformed)?.p_value;
        if p < best.1 {
            best = (method, p);
        }
    }
    Ok(best.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{random_walk, white_noise};

    #[test]
    fn log_on_exponentials() {
        let e = std::f64::consts::E;
        let (out, rec) = apply_transform(&[1.0, e, e * e], TransformMethod::Log).unwrap();
        assert!((out[0]).abs() < 1e-12);
        assert!((out[1] - 1.0).abs() < 1e-12);
        assert!((out[2] - 2.0).abs() < 1e-12);
        assert!(rec.adf_before.is_none()); // too short to test
    }

    #[test]
    fn log_rejects_non_positive() {
        let err = apply_transform(&[-1.0, 2.0], TransformMethod::Log).unwrap_err();
        assert!(matches!(
            err,
            Error::DomainViolation {
                method: "log",
                index: 0,
                ..
            }
        ));
        assert!(apply_transform(&[-1.0, 2.0], TransformMethod::Sqrt).is_err());
    }

    #[test]
    fn detrend_kills_exact_linear_series() {
        let values: Vec<f64> = (0..50).map(|i| 3.0 + 0.5 * i as f64).collect();
        let (out, rec) = apply_transform(&values, TransformMethod::LinearDetrend).unwrap();
        assert!(out.iter().all(|v| v.abs() < 1e-9));
        let (slope, intercept) = rec.trend.unwrap();
        assert!((slope - 0.5).abs() < 1e-9);
        assert!((intercept - 3.0).abs() < 1e-9);
    }

    #[test]
    fn stationary_noise_needs_no_transform() {
        let noise = white_noise(300, 4).unwrap();
        assert_eq!(
            select_transform(&noise.values()).unwrap(),
            TransformMethod::None
        );
    }

    #[test]
    fn trending_series_picks_the_lowest_p_value() {
        // exponential growth plus noise: log or detrend should win over sqrt
        let values: Vec<f64> = white_noise(300, 9)
            .unwrap()
            .values()
            .iter()
            .enumerate()
            .map(|(i, v)| (0.02 * i as f64 + 0.05 * v).exp())
            .collect();
        let chosen = select_transform(&values).unwrap();
        let mut ps = Vec::new();
        for method in [
            TransformMethod::Log,
            TransformMethod::Sqrt,
            TransformMethod::LinearDetrend,
        ] {
            let (t, _) = apply_transform(&values, method).unwrap();
            ps.push((method, adf_test(&t).unwrap().p_value));
        }
        let argmin = ps
            .iter()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap()
            .0;
        assert_eq!(chosen, argmin);
    }

    #[test]
    fn negatives_restrict_choice_to_detrend() {
        let walk = random_walk(300, 2).unwrap();
        // random walks are non-stationary and contain negatives
        let values = walk.values();
        assert!(values.iter().any(|&v| v < 0.0));
        if !adf_test(&values).unwrap().is_stationary {
            assert_eq!(
                select_transform(&values).unwrap(),
                TransformMethod::LinearDetrend
            );
        }
    }
}
