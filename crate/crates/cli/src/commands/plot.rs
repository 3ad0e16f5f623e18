use std::path::Path;

use crate::io::read_csv;
use crate::svg::line_chart;
use crate::CliError;

pub fn run(inputs: &[std::path::PathBuf], out: &Path) -> Result<(), CliError> {
    if inputs.is_empty() {
        return Err(CliError::Usage("plot needs at least one input".into()));
    }
    let mut datasets = Vec::with_capacity(inputs.len());
    for path in inputs {
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        datasets.push((label, read_csv(path)?.series));
    }
    let series: Vec<(String, &fractal_ts::TimeSeries)> = datasets
        .iter()
        .map(|(label, s)| (label.clone(), s))
        .collect();
    std::fs::write(out, line_chart(&series))
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", out.display())))?;
    println!("wrote {}", out.display());
    Ok(())
}
