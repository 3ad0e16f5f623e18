use std::path::Path;

use fractal_ts::densify::{densify_against, simulate_densify, DensifyReport};

use crate::io::read_csv;
use crate::manifest::{sha256_file, RunManifest};
use crate::{CliError, StrategyArgs};

pub fn run(
    input: &Path,
    factor: usize,
    args: &StrategyArgs,
    ground_truth: Option<&Path>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let dataset = read_csv(input)?;
    let config = super::strategy_config(args)?;
    let report: DensifyReport = match ground_truth {
        Some(truth_path) => {
            let truth = read_csv(truth_path)?;
            densify_against(&dataset.series, &truth.series, factor, &config)?
        }
        None => simulate_densify(&dataset.series, factor, &config)?,
    };
    println!(
        "{} strategy, factor {}: MAE {:.4} (RMSE {:.4}) over {} points",
        config.kind.name(),
        factor,
        report.metrics.mae,
        report.metrics.rmse,
        report.compared_points
    );
    if let Some(out) = out {
        let manifest = RunManifest {
            command: "simulate-densify".into(),
            config: serde_json::to_value(&config).expect("config serializes"),
            seed: args.seed,
            input: input.display().to_string(),
            input_sha256: sha256_file(input)?,
            outputs: vec![out.display().to_string()],
            metrics: serde_json::json!({
                "factor": factor,
                "mae": report.metrics.mae,
                "rmse": report.metrics.rmse,
                "mse": report.metrics.mse,
                "compared_points": report.compared_points,
            }),
        };
        manifest.write(out)?;
    }
    Ok(())
}
