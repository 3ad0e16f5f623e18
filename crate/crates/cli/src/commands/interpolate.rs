use std::path::Path;

use fractal_ts::fif::evaluate_linear;
use fractal_ts::segment::split;
use fractal_ts::strategies::augment;
use fractal_ts::TimeSeries;

use crate::io::{read_csv, write_csv};
use crate::manifest::{manifest_path, sha256_file, RunManifest};
use crate::{CliError, StrategyArgs};

pub fn run(input: &Path, args: &StrategyArgs, out: &Path) -> Result<(), CliError> {
    let dataset = read_csv(input)?;
    let config = super::strategy_config(args)?;
    let result = augment(&dataset.series, &config)?;
    write_csv(out, &result.series, dataset.timestamps.as_deref())?;

    let max_dev = max_deviation_from_linear(
        &dataset.series,
        &result.series,
        result.sequence_size,
        config.strict,
    )?;
    let manifest = RunManifest {
        command: "interpolate".into(),
        config: serde_json::to_value(&config).expect("config serializes"),
        seed: config.seed,
        input: input.display().to_string(),
        input_sha256: sha256_file(input)?,
        outputs: vec![out.display().to_string()],
        metrics: serde_json::json!({
            "points_in": dataset.series.len(),
            "points_out": result.series.len(),
            "sequence_size": result.sequence_size,
            "max_dev_from_linear": max_dev,
        }),
    };
    manifest.write(&manifest_path(out))?;
    println!(
        "{} -> {} points ({} strategy, sequence_size {}, max dev from linear {:.4})",
        dataset.series.len(),
        result.series.len(),
        config.kind.name(),
        result.sequence_size,
        max_dev
    );
    Ok(())
}

/// Largest vertical distance between the augmented points and the
/// segment-wise linear interpolant of the original nodes.
fn max_deviation_from_linear(
    original: &TimeSeries,
    augmented: &TimeSeries,
    sequence_size: usize,
    strict: bool,
) -> Result<f64, CliError> {
    let mut max = 0.0_f64;
    for segment in split(original, sequence_size, strict)? {
        let (lo, hi) = (segment.series.first().0, segment.series.last().0);
        let inside: Vec<(f64, f64)> = augmented
            .points()
            .iter()
            .copied()
            .filter(|p| p.0 >= lo && p.0 <= hi)
            .collect();
        let xs: Vec<f64> = inside.iter().map(|p| p.0).collect();
        let lin = evaluate_linear(&segment.series, &xs)?;
        for (p, l) in inside.iter().zip(lin) {
            max = max.max((p.1 - l).abs());
        }
    }
    Ok(max)
}
