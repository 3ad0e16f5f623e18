//! Statistical measurements: Hurst exponent, unit-root testing, and error
//! metrics.

mod adf;
mod hurst;
mod metrics;

pub use adf::{adf_test, adf_test_with_lag, schwert_lag, AdfResult};
pub use hurst::{hurst_exponent, hurst_exponent_relaxed, HurstEstimate};
pub use metrics::{metrics, Metrics};

/// Slope and intercept of an ordinary least-squares line fit, plus R².
pub(crate) fn ols_line(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    let slope = if denom.abs() < 1e-300 {
        0.0
    } else {
        (n * sxy - sx * sy) / denom
    };
    let intercept = (sy - slope * sx) / n;

    let mean_y = sy / n;
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum();
    let r2 = if ss_tot <= 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    (slope, intercept, r2)
}
