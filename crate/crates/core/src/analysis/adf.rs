//! Augmented Dickey–Fuller unit-root test, constant-only regression.
//!
//! Δy_t is regressed on [1, y_{t-1}, Δy_{t-1}, …, Δy_{t-L}]; the t-statistic
//! of the y_{t-1} coefficient is mapped to a p-value with the MacKinnon
//! (1994/2010) regression-surface approximation for the single-series
//! constant case. A p-value below 0.05 is read as stationary.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct AdfResult {
    pub statistic: f64,
    pub p_value: f64,
    pub lags: usize,
    pub is_stationary: bool,
}

/// Schwert's rule of thumb for the lag order: ⌊12·(n/100)^{1/4}⌋.
pub fn schwert_lag(n: usize) -> usize {
    (12.0 * (n as f64 / 100.0).powf(0.25)).floor() as usize
}

/// ADF test with the Schwert lag order.
pub fn adf_test(values: &[f64]) -> Result<AdfResult> {
    adf_test_with_lag(values, schwert_lag(values.len()))
}

/// ADF test with an explicit lag order.
#[allow(clippy::needless_range_loop)] // symmetric normal-equation accumulation
pub fn adf_test_with_lag(values: &[f64], lags: usize) -> Result<AdfResult> {
    let n = values.len();
    if n < 20 {
        return Err(Error::SeriesTooShort { len: n, min: 20 });
    }
    // Effective observations must exceed the regressor count (lags + 2).
    let lags = lags.min((n - 4) / 2);
    let k = lags + 2;
    let rows = n - lags - 1;
    if rows <= k {
        return Err(Error::SeriesTooShort { len: n, min: 20 });
    }

    let dy: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();

    // Row t (original index t = lags+1 .. n-1):
    //   target dy[t-1]; regressors [1, y[t-1], dy[t-2], ..., dy[t-1-lags]]
    let mut xtx = vec![vec![0.0_f64; k]; k];
    let mut xty = vec![0.0_f64; k];
    let mut row = vec![0.0_f64; k];
    let mut yty = 0.0;
    for t in (lags + 1)..n {
        row[0] = 1.0;
        row[1] = values[t - 1];
        for j in 1..=lags {
            row[1 + j] = dy[t - 1 - j];
        }
        let target = dy[t - 1];
        for a in 0..k {
            for b in a..k {
                xtx[a][b] += row[a] * row[b];
            }
            xty[a] += row[a] * target;
        }
        yty += target * target;
    }
    for a in 0..k {
        for b in 0..a {
            xtx[a][b] = xtx[b][a];
        }
    }

    let beta = solve(&xtx, &xty)?;
    let explained: f64 = beta.iter().zip(&xty).map(|(b, v)| b * v).sum();
    let rss = (yty - explained).max(0.0);
    let sigma2 = rss / (rows - k) as f64;

    // Var(beta_1) = sigma^2 * (X'X)^{-1}[1][1]: solve X'X z = e_1.
    let mut e1 = vec![0.0; k];
    e1[1] = 1.0;
    let z = solve(&xtx, &e1)?;
    let se = (sigma2 * z[1]).sqrt();
    if !se.is_finite() || se <= 0.0 {
        return Err(Error::SingularRegression);
    }
    let statistic = beta[1] / se;
    let p_value = mackinnon_p(statistic);
    Ok(AdfResult {
        statistic,
        p_value,
        lags,
        is_stationary: p_value < 0.05,
    })
}

/// Gaussian elimination with partial pivoting; dimensions here are tiny.
#[allow(clippy::needless_range_loop)]
fn solve(matrix: &[Vec<f64>], rhs: &[f64]) -> Result<Vec<f64>> {
    let k = rhs.len();
    let mut m: Vec<Vec<f64>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, &v)| {
            let mut row = r.clone();
            row.push(v);
            row
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[pivot][col].abs() < 1e-12 {
            return Err(Error::SingularRegression);
        }
        m.swap(col, pivot);
        for r in 0..k {
            if r == col {
                continue;
            }
            let f = m[r][col] / m[col][col];
            for c in col..=k {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    Ok((0..k).map(|i| m[i][k] / m[i][i]).collect())
}

// MacKinnon (1994, 2010) approximation, constant case, one series.
// Coefficients as tabulated in common statistics packages.
const TAU_STAR: f64 = -1.61;
const TAU_MIN: f64 = -18.83;
const TAU_MAX: f64 = 2.74;
const SMALL_P: [f64; 3] = [2.1659, 1.4412, 0.038269];
const LARGE_P: [f64; 4] = [1.7339, 0.93202, -0.12745, -0.010368];

fn mackinnon_p(stat: f64) -> f64 {
    if stat > TAU_MAX {
        return 1.0;
    }
    if stat < TAU_MIN {
        return 0.0;
    }
    let z = if stat <= TAU_STAR {
        SMALL_P[0] + SMALL_P[1] * stat + SMALL_P[2] * stat * stat
    } else {
        LARGE_P[0] + stat * (LARGE_P[1] + stat * (LARGE_P[2] + stat * LARGE_P[3]))
    };
    normal_cdf(z)
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

/// Complementary error function, Chebyshev fit (fractional error < 1.2e-7).
fn erfc(x: f64) -> f64 {
    let z = x.abs();
    let t = 1.0 / (1.0 + 0.5 * z);
    let ans = t * (-z * z - 1.26551223
        + t * (1.00002368
            + t * (0.37409196
                + t * (0.09678418
                    + t * (-0.18628806
                        + t * (0.27886807
                            + t * (-1.13520398
                                + t * (1.48851587
                                    + t * (-0.82215223 + t * 0.17087277)))))))))
        .exp();
    if x >= 0.0 {
        ans
    } else {
        2.0 - ans
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use rand_distr::{Distribution, Normal};

    fn gaussian(n: usize, seed: u64) -> Vec<f64> {
        let mut rng = rng_from_seed(seed);
        let normal = Normal::new(0.0, 1.0).unwrap();
        (0..n).map(|_| normal.sample(&mut rng)).collect()
    }

    #[test]
    fn schwert_rule_values() {
        assert_eq!(schwert_lag(300), 15);
        assert_eq!(schwert_lag(400), 16);
        assert_eq!(schwert_lag(500), 17);
    }

    #[test]
    fn white_noise_is_stationary() {
        let mut hits = 0;
        for seed in 0..10 {
            let r = adf_test(&gaussian(500, seed)).unwrap();
            if r.p_value < 0.05 {
                hits += 1;
            }
            assert_eq!(r.is_stationary, r.p_value < 0.05);
        }
        assert!(hits >= 9, "only {hits}/10 stationary");
    }

    #[test]
    fn random_walk_has_unit_root() {
        let mut hits = 0;
        for seed in 0..10 {
            let mut acc = 0.0;
            let walk: Vec<f64> = gaussian(500, seed)
                .into_iter()
                .map(|e| {
                    acc += e;
                    acc
                })
                .collect();
            if adf_test(&walk).unwrap().p_value > 0.05 {
                hits += 1;
            }
        }
        assert!(hits >= 9, "only {hits}/10 non-stationary");
    }

    #[test]
    fn short_series_rejected() {
        assert!(matches!(
            adf_test(&[1.0, 2.0, 3.0, 4.0, 5.0]),
            Err(Error::SeriesTooShort { .. })
        ));
    }

    #[test]
    fn p_value_bounds_at_extreme_statistics() {
        // MacKinnon constant-case critical values: far below -3.43 must be
        // significant at 1%, far above -1 must not be at 10%.
        assert!(mackinnon_p(-5.0) < 0.01);
        assert!(mackinnon_p(-0.2) > 0.10);
        assert_eq!(mackinnon_p(3.0), 1.0);
        assert_eq!(mackinnon_p(-20.0), 0.0);
    }

    #[test]
    fn erfc_sane() {
        assert!((erfc(0.0) - 1.0).abs() < 1e-7);
        assert!((erfc(1.0) - 0.15729920705028513).abs() < 1e-7);
        assert!((normal_cdf(1.959963984540054) - 0.975).abs() < 1e-7);
    }
}
