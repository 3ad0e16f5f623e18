//! Shared helpers for integration and acceptance tests.

/// Portable LCG + Irwin-Hall noise used to freeze cross-implementation
/// reference series: every operation is fixed-order f64 arithmetic, so any
/// language reproduces these sequences bit for bit.
pub struct PortableNoise {
    state: u64,
}

impl PortableNoise {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn uniform(&mut self) -> f64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.state >> 11) as f64 * 2f64.powi(-53)
    }

    /// Sum of 12 uniforms minus 6; close to a standard Gaussian.
    pub fn gaussian(&mut self) -> f64 {
        (0..12).map(|_| self.uniform()).sum::<f64>() - 6.0
    }
}

pub fn portable_white(seed: u64, n: usize) -> Vec<f64> {
    let mut g = PortableNoise::new(seed);
    (0..n).map(|_| g.gaussian()).collect()
}

pub fn portable_walk(seed: u64, n: usize) -> Vec<f64> {
    let mut g = PortableNoise::new(seed);
    let mut acc = 0.0;
    (0..n)
        .map(|_| {
            acc += g.gaussian();
            acc
        })
        .collect()
}

pub fn portable_ar(seed: u64, n: usize, phi: f64) -> Vec<f64> {
    let mut g = PortableNoise::new(seed);
    let mut y = 0.0;
    (0..n)
        .map(|_| {
            y = phi * y + g.gaussian();
            y
        })
        .collect()
}

pub fn portable_trend(seed: u64, n: usize, slope: f64) -> Vec<f64> {
    let mut g = PortableNoise::new(seed);
    (0..n).map(|t| slope * t as f64 + g.gaussian()).collect()
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}
