use std::path::{Path, PathBuf};

use serde::Serialize;

use fractal_ts::analysis::Metrics;
use fractal_ts::pipeline::{
    apply_transform, chronological_split, evaluate, fit_ar_baseline, make_windows, normalize,
    select_transform, train_predictor, tune_hyperparameters_detailed, window_ceiling,
    PredictorConfig, TuneOptions, DEFAULT_RIDGE,
};
use fractal_ts::strategies::{augment, StrategyConfig};

use crate::io::read_csv;
use crate::manifest::{sha256_file, RunManifest};
use crate::{ArgStrategy, CliError};

pub struct ForecastArgs {
    pub input: PathBuf,
    pub strategy: Option<ArgStrategy>,
    pub n_interpolation: usize,
    pub sequence_size: Option<usize>,
    pub tune: bool,
    pub trials: usize,
    pub repeats: usize,
    pub config: Option<PathBuf>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub emit_config: Option<PathBuf>,
    pub save_model: Option<PathBuf>,
    pub study_log: Option<PathBuf>,
}

#[derive(Serialize)]
struct SplitMetrics {
    train: Metrics,
    test: Metrics,
}

#[derive(Serialize)]
struct Report {
    strategy: String,
    sequence_size: Option<usize>,
    points: usize,
    transform: &'static str,
    config: PredictorConfig,
    recurrent: SplitMetrics,
    ar_baseline: SplitMetrics,
}

pub fn run(args: ForecastArgs) -> Result<(), CliError> {
    let dataset = read_csv(&args.input)?;
    let mut values = dataset.series.values();
    let mut sequence_size = None;
    let interpolated = args.strategy.is_some();
    let strategy_name = args
        .strategy
        .map(|s| s.kind().name().to_string())
        .unwrap_or_else(|| "none".into());

    if let Some(strategy) = args.strategy {
        let mut cfg = StrategyConfig::new(strategy.kind()).with_seed(args.seed);
        cfg.n_interpolation = args.n_interpolation;
        cfg.sequence_size = args.sequence_size;
        let result = augment(&dataset.series, &cfg)?;
        sequence_size = Some(result.sequence_size);
        values = result.series.values();
    }

    let method = select_transform(&values)?;
    let (transformed, _record) = apply_transform(&values, method)?;
    let (normalized, _norm) = normalize(&transformed, 0.0, 1.0)?;

    let (config, study_history) = resolve_config(&args, &normalized, interpolated)?;
    config.validate(normalized.len())?;
    if let Some(path) = &args.study_log {
        match &study_history {
            Some(json) => std::fs::write(path, json)
                .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?,
            None => {
                return Err(CliError::Usage(
                    "--study-log needs --tune (no study ran)".into(),
                ))
            }
        }
    }

    let (train_vals, test_vals) = chronological_split(&normalized, 0.7)?;
    let train_set = make_windows(&train_vals, config.input_data_points)?;
    let test_set = make_windows(&test_vals, config.input_data_points)?;

    let model = train_predictor(&train_set, &config)?;
    let recurrent = SplitMetrics {
        train: evaluate(&model, &train_set)?,
        test: evaluate(&model, &test_set)?,
    };
    let ar = fit_ar_baseline(&train_set, DEFAULT_RIDGE)?;
    let ar_baseline = SplitMetrics {
        train: evaluate(&ar, &train_set)?,
        test: evaluate(&ar, &test_set)?,
    };

    println!(
        "strategy {strategy_name}, {} points, transform {}",
        normalized.len(),
        method.name()
    );
    println!(
        "config: units={} window={} lr={} epochs={} seed={}",
        config.units, config.input_data_points, config.learning_rate, config.epochs, config.seed
    );
    println!(
        "recurrent  train RMSE {:.4}  test RMSE {:.4}",
        recurrent.train.rmse, recurrent.test.rmse
    );
    println!(
        "ar-baseline train RMSE {:.4}  test RMSE {:.4}",
        ar_baseline.train.rmse, ar_baseline.test.rmse
    );

    if let Some(path) = &args.emit_config {
        write_json(path, &config)?;
    }
    if let Some(path) = &args.save_model {
        write_json(path, &model)?;
    }
    if let Some(path) = &args.out {
        let report = Report {
            strategy: strategy_name,
            sequence_size,
            points: normalized.len(),
            transform: method.name(),
            config,
            recurrent,
            ar_baseline,
        };
        let manifest = RunManifest {
            command: "forecast".into(),
            config: serde_json::to_value(report.config).expect("config serializes"),
            seed: args.seed,
            input: args.input.display().to_string(),
            input_sha256: sha256_file(&args.input)?,
            outputs: vec![path.display().to_string()],
            metrics: serde_json::to_value(&report).expect("report serializes"),
        };
        manifest.write(path)?;
    }
    Ok(())
}

fn resolve_config(
    args: &ForecastArgs,
    normalized: &[f64],
    interpolated: bool,
) -> Result<(PredictorConfig, Option<String>), CliError> {
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
        let config: PredictorConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        return Ok((config, None));
    }
    if args.tune {
        let mut opts = if interpolated {
            TuneOptions::default_interpolated(args.seed)
        } else {
            TuneOptions::default_raw(args.seed)
        };
        opts.trials = args.trials;
        opts.repeats = args.repeats;
        let (config, history) = tune_hyperparameters_detailed(normalized, interpolated, &opts)?;
        return Ok((config, Some(history)));
    }
    // untuned default: modest width, short window, epochs per dataset kind
    let cap = window_ceiling(normalized.len(), if interpolated { 100 } else { 15 });
    Ok((
        PredictorConfig {
            units: 16,
            input_data_points: cap.min(8),
            learning_rate: 0.01,
            epochs: if interpolated { 25 } else { 150 },
            seed: args.seed,
        },
        None,
    ))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(value).expect("value serializes");
    std::fs::write(path, json)
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))
}
