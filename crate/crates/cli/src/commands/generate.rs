use std::path::Path;

use fractal_ts::synth;
use fractal_ts::TimeSeries;

use crate::io::write_csv;
use crate::{CliError, GenerateKind};

pub fn run(kind: GenerateKind, n: usize, seed: u64, out: &Path) -> Result<(), CliError> {
    if n < 4 {
        return Err(CliError::Usage(format!("--n must be at least 4, got {n}")));
    }
    let series: TimeSeries = match kind {
        GenerateKind::Diurnal => synth::diurnal(n, seed)?,
        GenerateKind::Noise => synth::white_noise(n, seed)?,
        GenerateKind::Randomwalk => synth::random_walk(n, seed)?,
        GenerateKind::Gamma => synth::gamma(),
    };
    write_csv(out, &series, None)?;
    println!("wrote {} points to {}", series.len(), out.display());
    Ok(())
}
