//! Chronological train/test splitting and supervised windowing.

use crate::error::{Error, Result};

/// First ⌈ratio·n⌉ values become the training set, order preserved.
pub fn chronological_split(values: &[f64], ratio: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if values.len() < 10 {
        return Err(Error::SeriesTooShort {
            len: values.len(),
            min: 10,
        });
    }
    if ratio.is_nan() || ratio <= 0.0 || ratio >= 1.0 {
        return Err(Error::InvalidSplitRatio { ratio });
    }
    let cut = (ratio * values.len() as f64).ceil() as usize;
    Ok((values[..cut].to_vec(), values[cut..].to_vec()))
}

/// Sliding-window supervised framing: window i is `values[i .. i+w]`, its
/// target `values[i+w]`.
#[derive(Debug, Clone)]
pub struct SupervisedSet {
    pub inputs: Vec<Vec<f64>>,
    pub targets: Vec<f64>,
    pub window: usize,
}

impl SupervisedSet {
    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }
}

pub fn make_windows(values: &[f64], input_data_points: usize) -> Result<SupervisedSet> {
    let w = input_data_points;
    if w == 0 || w >= values.len() {
        return Err(Error::WindowTooLarge {
            window: w,
            len: values.len(),
        });
    }
    let count = values.len() - w;
    let mut inputs = Vec::with_capacity(count);
    let mut targets = Vec::with_capacity(count);
    for i in 0..count {
        inputs.push(values[i..i + w].to_vec());
        targets.push(values[i + w]);
    }
    Ok(SupervisedSet {
        inputs,
        targets,
        window: w,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_ceil_rule() {
        let values: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let (train, test) = chronological_split(&values, 0.7).unwrap();
        assert_eq!(train.len(), 7);
        assert_eq!(test, vec![7.0, 8.0, 9.0]);
    }

    #[test]
    fn split_rejects_degenerate_ratios() {
        let values: Vec<f64> = (0..10).map(|i| i as f64).collect();
        assert!(matches!(
            chronological_split(&values, 1.0),
            Err(Error::InvalidSplitRatio { .. })
        ));
        assert!(matches!(
            chronological_split(&values[..5], 0.7),
            Err(Error::SeriesTooShort { .. })
        ));
    }

    #[test]
    fn window_framing() {
        let set = make_windows(&[1.0, 2.0, 3.0, 4.0, 5.0], 2).unwrap();
        assert_eq!(
            set.inputs,
            vec![vec![1.0, 2.0], vec![2.0, 3.0], vec![3.0, 4.0]]
        );
        assert_eq!(set.targets, vec![3.0, 4.0, 5.0]);
    }

    #[test]
    fn window_edge_cases() {
        let v = [1.0, 2.0, 3.0, 4.0];
        let set = make_windows(&v, 3).unwrap();
        assert_eq!(set.len(), 1);
        assert!(matches!(
            make_windows(&v, 4),
            Err(Error::WindowTooLarge { .. })
        ));
        // count identity: pairs = n - w for every legal w
        for w in 1..v.len() {
            assert_eq!(make_windows(&v, w).unwrap().len(), v.len() - w);
        }
    }
}
