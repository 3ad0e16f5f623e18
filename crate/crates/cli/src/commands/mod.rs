pub mod analyze;
pub mod densify;
pub mod forecast;
pub mod generate;
pub mod interpolate;
pub mod plot;

use fractal_ts::strategies::StrategyConfig;

use crate::{CliError, StrategyArgs};

/// Builds the strategy configuration from the flags, or loads the full JSON
/// document when `--strategy-config` is given.
pub fn strategy_config(args: &StrategyArgs) -> Result<StrategyConfig, CliError> {
    if let Some(path) = &args.strategy_config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
        return serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())));
    }
    let strategy = args
        .strategy
        .expect("clap requires --strategy without --strategy-config");
    let mut config = StrategyConfig::new(strategy.kind()).with_seed(args.seed);
    config.n_interpolation = args.n_interpolation;
    config.sequence_size = args.sequence_size;
    config.strict = args.strict;
    Ok(config)
}
