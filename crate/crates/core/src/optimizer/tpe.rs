//! Tree-structured Parzen Estimator sampling for a single real parameter.
//!
//! History is split at the γ-quantile of objective values into a "good" group
//! and the rest. A Gaussian-kernel density is fitted to each group's
//! parameter values — l(x) over the good group, g(x) over the rest — and the
//! candidate drawn from l that maximizes l(x)/g(x) wins.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};

pub(crate) const GAMMA: f64 = 0.25;
pub(crate) const N_CANDIDATES: usize = 24;
/// Kernel bandwidth floor as a fraction of the search range.
const BANDWIDTH_FLOOR_FRACTION: f64 = 0.01;

/// One Gaussian kernel: (center, bandwidth).
type Kernel = (f64, f64);

/// Proposes the next value for a minimized objective.
///
/// `history` holds `(parameter value, objective)` pairs of completed trials.
pub fn tpe_sample(
    history: &[(f64, f64)],
    low: f64,
    high: f64,
    gamma: f64,
    n_candidates: usize,
    rng: &mut ChaCha8Rng,
) -> Result<f64> {
    if history.len() < 2 {
        return Err(Error::InsufficientHistory {
            len: history.len(),
            min: 2,
        });
    }
    let mut sorted: Vec<(f64, f64)> = history.to_vec();
    sorted.sort_by(|a, b| a.1.total_cmp(&b.1));
    let n_good = ((gamma * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len() - 1);

    let range = high - low;
    let good: Vec<f64> = sorted[..n_good].iter().map(|t| t.0).collect();
    let rest: Vec<f64> = sorted[n_good..].iter().map(|t| t.0).collect();
    let l = parzen_kernels(&good, range);
    let g = parzen_kernels(&rest, range);

    let mut best = f64::NEG_INFINITY;
    let mut best_x = good[0].clamp(low, high);
    for _ in 0..n_candidates.max(1) {
        let x = draw_from(&l, low, high, rng);
        let score = log_density(x, &l) - log_density(x, &g);
        if score > best {
            best = score;
            best_x = x;
        }
    }
    Ok(best_x)
}

/// Bandwidths come from nearest-neighbor spacing with a floor of 1% of the
/// range; a singleton group gets the full range.
fn parzen_kernels(values: &[f64], range: f64) -> Vec<Kernel> {
    let floor = BANDWIDTH_FLOOR_FRACTION * range;
    if values.len() == 1 {
        return vec![(values[0], range.max(floor))];
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    values
        .iter()
        .map(|&v| {
            let k = sorted.partition_point(|&s| s < v);
            let mut nn = f64::INFINITY;
            if k > 0 {
                nn = nn.min((v - sorted[k - 1]).abs());
            }
            // sorted[k] may be v itself; use the next distinct neighbor too.
            for &s in sorted.iter().skip(k) {
                if s != v {
                    nn = nn.min((s - v).abs());
                    break;
                }
            }
            if !nn.is_finite() {
                nn = 0.0; // all values identical
            }
            (v, nn.max(floor))
        })
        .collect()
}

fn log_density(x: f64, kernels: &[Kernel]) -> f64 {
    // log of the kernel mixture via log-sum-exp.
    let logs: Vec<f64> = kernels
        .iter()
        .map(|&(c, b)| {
            let z = (x - c) / b;
            -0.5 * z * z - b.ln() - 0.5 * (2.0 * std::f64::consts::PI).ln()
        })
        .collect();
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return f64::NEG_INFINITY;
    }
    let sum: f64 = logs.iter().map(|l| (l - max).exp()).sum();
    max + sum.ln() - (kernels.len() as f64).ln()
}

fn draw_from(kernels: &[Kernel], low: f64, high: f64, rng: &mut ChaCha8Rng) -> f64 {
    let (c, b) = kernels[rng.random_range(0..kernels.len())];
    let normal = Normal::new(c, b).expect("bandwidth > 0");
    for _ in 0..8 {
        let x = normal.sample(rng);
        if x >= low && x <= high {
            return x;
        }
    }
    normal.sample(rng).clamp(low, high)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    #[test]
    fn ratio_peaks_at_the_good_cluster() {
        // good values cluster at 0.3, rest at -0.8
        let mut history = Vec::new();
        for i in 0..4 {
            history.push((0.3 + 0.01 * i as f64, 0.0 + 0.001 * i as f64));
        }
        for i in 0..12 {
            history.push((-0.8 + 0.01 * i as f64, 1.0 + 0.001 * i as f64));
        }
        let mut rng = rng_from_seed(0);
        for _ in 0..10 {
            let x = tpe_sample(&history, -1.0, 1.0, GAMMA, N_CANDIDATES, &mut rng).unwrap();
            assert!((0.1..=0.5).contains(&x), "sampled {x}");
        }
    }

    #[test]
    fn insufficient_history() {
        let mut rng = rng_from_seed(0);
        assert!(matches!(
            tpe_sample(&[(0.0, 1.0)], -1.0, 1.0, GAMMA, N_CANDIDATES, &mut rng),
            Err(Error::InsufficientHistory { .. })
        ));
    }

    #[test]
    fn degenerate_identical_objectives_stay_in_range() {
        let history: Vec<(f64, f64)> = (0..8).map(|i| (i as f64 / 8.0, 0.5)).collect();
        let mut rng = rng_from_seed(1);
        let x = tpe_sample(&history, 0.0, 1.0, GAMMA, N_CANDIDATES, &mut rng).unwrap();
        assert!((0.0..=1.0).contains(&x));
    }
}
