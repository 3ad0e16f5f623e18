//! Splitting a series into overlapping segments and reuniting interpolated
//! segments back into one chronological series.
//!
//! Consecutive segments share exactly one boundary point: the last point of
//! segment k is the first point of segment k+1.

use crate::error::{Error, Result};
use crate::fif::InterpolatedSeries;
use crate::series::TimeSeries;

/// Boundary points of neighboring interpolated segments may differ by float
/// noise; anything past this is a caller error.
const BOUNDARY_TOL: f64 = 1e-9;

/// A contiguous slice of a parent series. `start_index..=end_index` are
/// positions in the parent.
#[derive(Debug, Clone)]
pub struct Segment {
    pub series: TimeSeries,
    pub start_index: usize,
    pub end_index: usize,
}

/// Splits a series into overlapping segments of `sequence_size` points.
///
/// Strict mode requires `(len - 1)` divisible by `(sequence_size - 1)` so all
/// segments come out equal. Non-strict mode lets the final segment carry
/// between 3 and `sequence_size - 1` points; a leftover shorter than 3 points
/// is absorbed into the previous segment instead of being dropped.
pub fn split(series: &TimeSeries, sequence_size: usize, strict: bool) -> Result<Vec<Segment>> {
    if sequence_size < 3 {
        return Err(Error::SequenceSizeTooSmall { got: sequence_size });
    }
    let n = series.len();
    let min_len = if strict { sequence_size } else { 4 };
    if n < min_len {
        return Err(Error::SeriesTooShort { len: n, min: min_len });
    }
    let step = sequence_size - 1;
    if strict && !(n - 1).is_multiple_of(step) {
        return Err(Error::StrictModeIndivisible {
            len: n,
            sequence_size,
        });
    }

    let mut segments = Vec::new();
    let mut start = 0usize;
    loop {
        let end = (start + step).min(n - 1);
        if n - 1 - end > 0 && n - end <= 2 {
            // Leftover after this segment would have < 3 points: absorb it.
            segments.push(make_segment(series, start, n - 1)?);
            break;
        }
        segments.push(make_segment(series, start, end)?);
        if end == n - 1 {
            break;
        }
        start = end;
    }
    Ok(segments)
}

fn make_segment(series: &TimeSeries, start: usize, end: usize) -> Result<Segment> {
    if end - start < 2 {
        return Err(Error::SegmentTooShort {
            len: end - start + 1,
            min: 3,
        });
    }
    Ok(Segment {
        series: series.slice(start, end)?,
        start_index: start,
        end_index: end,
    })
}

/// Merges interpolated segments chronologically, keeping each shared boundary
/// node exactly once.
pub fn reunite(segments: &[InterpolatedSeries]) -> Result<TimeSeries> {
    if segments.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut out: Vec<(f64, f64)> = segments[0].points.points().to_vec();
    for seg in &segments[1..] {
        let pts = seg.points.points();
        let prev = *out.last().unwrap();
        let first = pts[0];
        if (prev.0 - first.0).abs() > BOUNDARY_TOL || (prev.1 - first.1).abs() > BOUNDARY_TOL {
            return Err(Error::BoundaryMismatch {
                ax: prev.0,
                ay: prev.1,
                bx: first.0,
                by: first.1,
            });
        }
        out.extend_from_slice(&pts[1..]);
    }
    TimeSeries::from_points(out)
}
