//! Closed-form autoregressive baseline: ridge least squares from window to
//! next value. Deterministic, so it doubles as an independent reference for
//! the recurrent predictor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pipeline::predictor::Forecaster;
use crate::pipeline::window::SupervisedSet;

pub const DEFAULT_RIDGE: f64 = 1e-6;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArPredictor {
    pub coefficients: Vec<f64>,
    pub intercept: f64,
    pub window: usize,
}

impl Forecaster for ArPredictor {
    fn window_len(&self) -> usize {
        self.window
    }

    fn predict_next(&self, window: &[f64]) -> Result<f64> {
        if window.len() != self.window {
            return Err(Error::WindowWidthMismatch {
                expected: self.window,
                got: window.len(),
            });
        }
        Ok(self
            .coefficients
            .iter()
            .zip(window)
            .map(|(c, v)| c * v)
            .sum::<f64>()
            + self.intercept)
    }
}

/// Solves (X'X + λI)β = X'y over windows augmented with an intercept column.
/// The ridge term keeps the system well-posed; the intercept is not
/// regularized.
#[allow(clippy::needless_range_loop)] // symmetric normal-equation accumulation
pub fn fit_ar_baseline(train: &SupervisedSet, ridge: f64) -> Result<ArPredictor> {
    if train.is_empty() {
        return Err(Error::EmptyInput);
    }
    let w = train.window;
    let k = w + 1; // intercept last
    let mut xtx = vec![vec![0.0_f64; k]; k];
    let mut xty = vec![0.0_f64; k];
    for (window, &target) in train.inputs.iter().zip(&train.targets) {
        for a in 0..w {
            for b in a..w {
                xtx[a][b] += window[a] * window[b];
            }
            xtx[a][w] += window[a];
            xty[a] += window[a] * target;
        }
        xtx[w][w] += 1.0;
        xty[w] += target;
    }
    for a in 0..k {
        for b in 0..a {
            xtx[a][b] = xtx[b][a];
        }
    }
    for (a, row) in xtx.iter_mut().enumerate().take(w) {
        row[a] += ridge.max(0.0);
    }

    let beta = gauss_solve(xtx, xty)?;
    Ok(ArPredictor {
        coefficients: beta[..w].to_vec(),
        intercept: beta[w],
        window: w,
    })
}

#[allow(clippy::needless_range_loop)]
fn gauss_solve(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Result<Vec<f64>> {
    let k = rhs.len();
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[pivot][col].abs() < 1e-300 {
            return Err(Error::SingularSystem);
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..k {
            if r == col {
                continue;
            }
            let f = m[r][col] / m[col][col];
            for c in col..k {
                m[r][c] -= f * m[col][c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    Ok((0..k).map(|i| rhs[i] / m[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::window::make_windows;
    use crate::synth::white_noise;

    #[test]
    fn recovers_ar1_coefficient() {
        let noise = white_noise(500, 5).unwrap().values();
        let mut y = vec![0.0_f64; 500];
        for t in 1..500 {
            y[t] = 0.8 * y[t - 1] + noise[t];
        }
        let set = make_windows(&y, 1).unwrap();
        let model = fit_ar_baseline(&set, DEFAULT_RIDGE).unwrap();
        assert!(
            (0.7..=0.9).contains(&model.coefficients[0]),
            "coefficient {}",
            model.coefficients[0]
        );
    }

    #[test]
    fn exact_on_a_linear_recurrence() {
        // y_t = 2 y_{t-1} - y_{t-2} reproduces any arithmetic progression
        let values: Vec<f64> = (0..60).map(|i| 0.3 + 0.01 * i as f64).collect();
        let set = make_windows(&values, 2).unwrap();
        let model = fit_ar_baseline(&set, DEFAULT_RIDGE).unwrap();
        for (window, &target) in set.inputs.iter().zip(&set.targets) {
            let p = model.predict_next(window).unwrap();
            assert!((p - target).abs() < 1e-6, "{p} vs {target}");
        }
    }

    #[test]
    fn deterministic_fit() {
        let values: Vec<f64> = (0..50).map(|i| (i as f64 * 0.7).sin()).collect();
        let set = make_windows(&values, 4).unwrap();
        let a = fit_ar_baseline(&set, DEFAULT_RIDGE).unwrap();
        let b = fit_ar_baseline(&set, DEFAULT_RIDGE).unwrap();
        assert_eq!(a.coefficients, b.coefficients);
        assert_eq!(a.intercept, b.intercept);
    }

    #[test]
    fn empty_set_rejected() {
        let empty = SupervisedSet {
            inputs: vec![],
            targets: vec![],
            window: 3,
        };
        assert!(matches!(
            fit_ar_baseline(&empty, DEFAULT_RIDGE),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn width_mismatch_on_predict() {
        let values: Vec<f64> = (0..30).map(|i| i as f64).collect();
        let set = make_windows(&values, 3).unwrap();
        let model = fit_ar_baseline(&set, DEFAULT_RIDGE).unwrap();
        assert!(matches!(
            model.predict_next(&[1.0]),
            Err(Error::WindowWidthMismatch { .. })
        ));
    }
}
