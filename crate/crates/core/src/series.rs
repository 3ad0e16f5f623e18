use crate::error::{Error, Result};

/// An ordered univariate series of `(x, y)` samples with strictly increasing
/// abscissae. Every operation in this crate consumes and produces these.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    points: Vec<(f64, f64)>,
}

impl TimeSeries {
    /// Builds a series from explicit points, validating monotonicity.
    pub fn from_points(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::SeriesTooShort {
                len: points.len(),
                min: 2,
            });
        }
        for (i, pair) in points.windows(2).enumerate() {
            if !pair[0].0.is_finite() || !pair[1].0.is_finite() || pair[1].0 <= pair[0].0 {
                return Err(Error::NonMonotonicAbscissa { index: i + 1 });
            }
        }
        Ok(Self { points })
    }

    /// Builds a series from values alone, assigning index abscissae 0, 1, 2, …
    pub fn from_values(values: &[f64]) -> Result<Self> {
        Self::from_points(
            values
                .iter()
                .enumerate()
                .map(|(i, &y)| (i as f64, y))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.0)
    }

    pub fn values(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.1).collect()
    }

    pub fn first(&self) -> (f64, f64) {
        self.points[0]
    }

    pub fn last(&self) -> (f64, f64) {
        self.points[self.points.len() - 1]
    }

    /// Contiguous sub-series over `[start, end]` inclusive.
    pub fn slice(&self, start: usize, end: usize) -> Result<Self> {
        if start >= end || end >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                index: end,
                intervals: self.points.len(),
            });
        }
        Ok(Self {
            points: self.points[start..=end].to_vec(),
        })
    }

    /// Keeps every `factor`-th point starting at index 0. The tail is trimmed
    /// so that the last kept point is an original sample.
    pub fn downsample(&self, factor: usize) -> Result<Self> {
        if factor == 0 || self.points.len() < factor + 1 {
            return Err(Error::FactorMismatch {
                factor,
                fine: self.points.len(),
                coarse: 0,
            });
        }
        Self::from_points(self.points.iter().copied().step_by(factor).collect())
    }

    pub(crate) fn from_points_unchecked(points: Vec<(f64, f64)>) -> Self {
        debug_assert!(points.windows(2).all(|p| p[1].0 > p[0].0));
        Self { points }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_abscissae() {
        let err = TimeSeries::from_points(vec![(0.0, 1.0), (1.0, 2.0), (1.0, 3.0)]).unwrap_err();
        assert!(matches!(err, Error::NonMonotonicAbscissa { index: 2 }));
    }

    #[test]
    fn index_abscissae_are_assigned_in_order() {
        let s = TimeSeries::from_values(&[5.0, 6.0, 7.0]).unwrap();
        assert_eq!(s.points(), &[(0.0, 5.0), (1.0, 6.0), (2.0, 7.0)]);
    }

    #[test]
    fn downsample_keeps_every_factor_th_point() {
        let s = TimeSeries::from_values(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]).unwrap();
        let d = s.downsample(3).unwrap();
        assert_eq!(d.points(), &[(0.0, 0.0), (3.0, 3.0), (6.0, 6.0)]);
    }

    #[test]
    fn downsample_rejects_zero_factor() {
        let s = TimeSeries::from_values(&[0.0, 1.0, 2.0]).unwrap();
        assert!(matches!(
            s.downsample(0),
            Err(Error::FactorMismatch { .. })
        ));
    }
}
