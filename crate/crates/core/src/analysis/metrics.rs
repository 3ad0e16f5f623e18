use crate::error::{Error, Result};

/// Standard error metrics; `rmse = sqrt(mse)` and `mae <= rmse` always hold.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Metrics {
    pub rmse: f64,
    pub mse: f64,
    pub mae: f64,
}

pub fn metrics(predicted: &[f64], actual: &[f64]) -> Result<Metrics> {
    if predicted.is_empty() {
        return Err(Error::EmptyInput);
    }
    if predicted.len() != actual.len() {
        return Err(Error::LengthMismatch {
            left: predicted.len(),
            right: actual.len(),
        });
    }
    let n = predicted.len() as f64;
    let mut se = 0.0;
    let mut ae = 0.0;
    for (&p, &a) in predicted.iter().zip(actual) {
        let d = p - a;
        se += d * d;
        ae += d.abs();
    }
    let mse = se / n;
    Ok(Metrics {
        rmse: mse.sqrt(),
        mse,
        mae: ae / n,
    })
}
