use std::path::Path;

use fractal_ts::analysis::{adf_test, hurst_exponent};

use crate::io::read_csv;
use crate::CliError;

pub fn run(input: &Path, hurst: bool, adf: bool) -> Result<(), CliError> {
    let dataset = read_csv(input)?;
    let values = dataset.series.values();
    // with no flags, print both
    let all = !hurst && !adf;
    if hurst || all {
        let est = hurst_exponent(&values)?;
        println!(
            "hurst: h={:.4} windows={} r2={:.4}",
            est.h,
            est.window_sizes.len(),
            est.regression_r2
        );
    }
    if adf || all {
        let r = adf_test(&values)?;
        println!(
            "adf: statistic={:.4} p={:.4} lags={} stationary={}",
            r.statistic, r.p_value, r.lags, r.is_stationary
        );
    }
    Ok(())
}
