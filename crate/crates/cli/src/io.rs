//! CSV dataset reading and writing.
//!
//! Accepted layouts (header required, case-insensitive):
//!   value                  — index abscissae 0, 1, 2, …
//!   x,value                — explicit numeric abscissae
//!   timestamp,value        — ISO-8601 timestamps; abscissae are indices and
//!                            timestamps ride along for output
//!
//! Values are written with two decimals; explicit abscissae with six.

use std::path::Path;

use chrono::NaiveDateTime;
use fractal_ts::TimeSeries;

use crate::CliError;

const TS_FORMATS: [&str; 3] = ["%Y-%m-%dT%H:%M:%S", "%Y-%m-%d %H:%M:%S", "%Y-%m-%d %H:%M"];

#[derive(Debug, Clone)]
pub struct Dataset {
    pub series: TimeSeries,
    /// Present when the input carried a timestamp column; aligned with
    /// `series` points (whose x are then 0, 1, 2, …).
    pub timestamps: Option<Vec<NaiveDateTime>>,
}

pub fn read_csv(path: &Path) -> Result<Dataset, CliError> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?
        .iter()
        .map(|h| h.trim().to_ascii_lowercase())
        .collect();

    let layout = match headers.as_slice() {
        [v] if v == "value" => Layout::ValueOnly,
        [x, v] if x == "x" && v == "value" => Layout::XValue,
        [t, v] if t == "timestamp" && v == "value" => Layout::TimestampValue,
        other => {
            return Err(CliError::io(format!(
                "{}: unsupported header {:?}; expected value | x,value | timestamp,value",
                path.display(),
                other.join(",")
            )))
        }
    };

    let mut points = Vec::new();
    let mut timestamps = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
        let row = i + 2; // 1-based, after header
        match layout {
            Layout::ValueOnly => {
                points.push((i as f64, parse_num(&record[0], path, row)?));
            }
            Layout::XValue => {
                points.push((
                    parse_num(&record[0], path, row)?,
                    parse_num(&record[1], path, row)?,
                ));
            }
            Layout::TimestampValue => {
                timestamps.push(parse_timestamp(&record[0], path, row)?);
                points.push((i as f64, parse_num(&record[1], path, row)?));
            }
        }
    }

    let series = TimeSeries::from_points(points).map_err(CliError::Domain)?;
    Ok(Dataset {
        series,
        timestamps: (!timestamps.is_empty()).then_some(timestamps),
    })
}

enum Layout {
    ValueOnly,
    XValue,
    TimestampValue,
}

fn parse_num(field: &str, path: &Path, row: usize) -> Result<f64, CliError> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|_| CliError::io(format!("{} row {row}: bad number {field:?}", path.display())))
}

fn parse_timestamp(field: &str, path: &Path, row: usize) -> Result<NaiveDateTime, CliError> {
    let field = field.trim();
    for fmt in TS_FORMATS {
        if let Ok(ts) = NaiveDateTime::parse_from_str(field, fmt) {
            return Ok(ts);
        }
    }
    Err(CliError::io(format!(
        "{} row {row}: bad timestamp {field:?}",
        path.display()
    )))
}

/// Writes a series. Pass the input's timestamps to keep a timestamp column:
/// fractional positions interpolate linearly between the surrounding input
/// timestamps.
pub fn write_csv(
    path: &Path,
    series: &TimeSeries,
    timestamps: Option<&[NaiveDateTime]>,
) -> Result<(), CliError> {
    let mut out = String::new();
    match timestamps {
        Some(ts) => {
            out.push_str("timestamp,value\n");
            for &(x, y) in series.points() {
                out.push_str(&format!("{},{y:.2}\n", timestamp_at(ts, x)));
            }
        }
        None if is_index_abscissae(series) => {
            out.push_str("value\n");
            for &(_, y) in series.points() {
                out.push_str(&format!("{y:.2}\n"));
            }
        }
        None => {
            out.push_str("x,value\n");
            for &(x, y) in series.points() {
                out.push_str(&format!("{x:.6},{y:.2}\n"));
            }
        }
    }
    std::fs::write(path, out)
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))
}

fn is_index_abscissae(series: &TimeSeries) -> bool {
    series
        .points()
        .iter()
        .enumerate()
        .all(|(i, p)| p.0 == i as f64)
}

/// Linear interpolation of timestamps at a fractional index.
fn timestamp_at(ts: &[NaiveDateTime], x: f64) -> String {
    let n = ts.len();
    let clamped = x.clamp(0.0, (n - 1) as f64);
    let lo = (clamped.floor() as usize).min(n - 2);
    let frac = clamped - lo as f64;
    let step = (ts[lo + 1] - ts[lo]).num_seconds() as f64;
    let t = ts[lo] + chrono::Duration::seconds((frac * step).round() as i64);
    t.format("%Y-%m-%dT%H:%M:%S").to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_value_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v.csv");
        let series = TimeSeries::from_values(&[1.204, 2.5, 3.666]).unwrap();
        write_csv(&path, &series, None).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "value\n1.20\n2.50\n3.67\n");
        let back = read_csv(&path).unwrap();
        assert!(back.timestamps.is_none());
        assert_eq!(back.series.values(), vec![1.20, 2.50, 3.67]);
    }

    #[test]
    fn round_trip_x_value() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("xv.csv");
        let series =
            TimeSeries::from_points(vec![(0.5, 1.0), (1.25, 2.0), (9.0, 3.0)]).unwrap();
        write_csv(&path, &series, None).unwrap();
        let back = read_csv(&path).unwrap();
        assert_eq!(back.series.points()[1], (1.25, 2.0));
    }

    #[test]
    fn timestamps_interpolate_linearly() {
        let ts: Vec<NaiveDateTime> = ["2021-09-01T00:00:00", "2021-09-01T01:00:00"]
            .iter()
            .map(|s| NaiveDateTime::parse_from_str(s, "%Y-%m-%dT%H:%M:%S").unwrap())
            .collect();
        assert_eq!(timestamp_at(&ts, 0.5), "2021-09-01T00:30:00");
        assert_eq!(timestamp_at(&ts, 1.0), "2021-09-01T01:00:00");
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = read_csv(Path::new("/nonexistent/file.csv")).unwrap_err();
        assert!(matches!(err, CliError::Io(_)));
    }
}
