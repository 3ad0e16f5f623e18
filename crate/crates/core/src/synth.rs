//! Synthetic dataset generators.
//!
//! The diurnal series stands in for hourly temperature recordings: a 24-sample
//! sine with a mild trend and Gaussian noise. `gamma` is the fixed 11-point
//! trial set used by the worked examples and tests.

use rand_distr::{Distribution, Normal};

use crate::error::Result;
use crate::rng::rng_from_seed;
use crate::series::TimeSeries;

/// Sine of period 24 samples plus trend and noise, mimicking a week of
/// hourly temperatures when n = 168.
pub fn diurnal(n: usize, seed: u64) -> Result<TimeSeries> {
    diurnal_with_period(n, 24, seed)
}

/// Diurnal series at an arbitrary sampling rate: `period` samples per cycle.
/// Period 144 mimics a 10-minute sensor; downsampling that by 6 recovers the
/// hourly view.
pub fn diurnal_with_period(n: usize, period: usize, seed: u64) -> Result<TimeSeries> {
    let mut rng = rng_from_seed(seed);
    let noise = Normal::new(0.0, 0.35).unwrap();
    let per_day = period as f64;
    let values: Vec<f64> = (0..n)
        .map(|t| {
            let phase = 2.0 * std::f64::consts::PI * (t as f64) / per_day;
            15.0 + 5.0 * (phase - std::f64::consts::FRAC_PI_2).sin()
                + 0.01 * (t as f64) * 24.0 / per_day
                + noise.sample(&mut rng)
        })
        .collect();
    TimeSeries::from_values(&values)
}

/// Standard Gaussian white noise.
pub fn white_noise(n: usize, seed: u64) -> Result<TimeSeries> {
    let mut rng = rng_from_seed(seed);
    let normal = Normal::new(0.0, 1.0).unwrap();
    TimeSeries::from_values(&(0..n).map(|_| normal.sample(&mut rng)).collect::<Vec<_>>())
}

/// Cumulative sum of Gaussian white noise.
pub fn random_walk(n: usize, seed: u64) -> Result<TimeSeries> {
    let mut rng = rng_from_seed(seed);
    let normal = Normal::new(0.0, 1.0).unwrap();
    let mut acc = 0.0;
    TimeSeries::from_values(
        &(0..n)
            .map(|_| {
                acc += normal.sample(&mut rng);
                acc
            })
            .collect::<Vec<_>>(),
    )
}

/// The 11-point symmetric trial set Γ with abscissae 1..=11.
pub fn gamma() -> TimeSeries {
    TimeSeries::from_points(vec![
        (1.0, 10.0),
        (2.0, 14.0),
        (3.0, 19.0),
        (4.0, 26.0),
        (5.0, 35.0),
        (6.0, 46.0),
        (7.0, 35.0),
        (8.0, 26.0),
        (9.0, 19.0),
        (10.0, 14.0),
        (11.0, 10.0),
    ])
    .expect("static data is monotone")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_matches_the_trial_set() {
        let g = gamma();
        assert_eq!(g.len(), 11);
        assert_eq!(g.points()[0], (1.0, 10.0));
        assert_eq!(g.points()[5], (6.0, 46.0));
        assert_eq!(g.points()[10], (11.0, 10.0));
    }

    #[test]
    fn generators_are_seed_deterministic() {
        assert_eq!(diurnal(48, 7).unwrap(), diurnal(48, 7).unwrap());
        assert_ne!(diurnal(48, 7).unwrap(), diurnal(48, 8).unwrap());
        assert_eq!(white_noise(32, 1).unwrap(), white_noise(32, 1).unwrap());
        assert_eq!(random_walk(32, 1).unwrap(), random_walk(32, 1).unwrap());
    }

    #[test]
    fn diurnal_has_period_24_autocorrelation_peak() {
        let series = diurnal(168, 0).unwrap();
        let values = series.values();
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let autocorr = |lag: usize| -> f64 {
            let n = values.len() - lag;
            (0..n)
                .map(|t| (values[t] - mean) * (values[t + lag] - mean))
                .sum::<f64>()
                / n as f64
        };
        let at_period = autocorr(24);
        for lag in [6, 12, 18] {
            assert!(at_period > autocorr(lag), "lag {lag} beats the period");
        }
        assert!(at_period > 0.0);
    }
}
