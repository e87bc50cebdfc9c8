//! Command-line front end for `ab-realism`: TOML-driven sweeps, named
//! figure datasets and seeded verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error,
//! 3 I/O error.

pub mod config;
pub mod error;
pub mod figure;
pub mod format;
pub mod measure;
pub mod svg;
pub mod sweep;
pub mod verify;

use std::fs;
use std::path::Path;

pub use config::RunConfig;
pub use error::CliError;

/// Runs the sweep described by the file at `config`, writing the CSV to `out`.
///
/// A plot path in the config's `[output]` table also gets an SVG.
pub fn cmd_sweep(config: &Path, out: &Path) -> Result<usize, CliError> {
    let text = fs::read_to_string(config).map_err(|e| CliError::io("read", config, e))?;
    let run = RunConfig::from_toml(&text)?;
    let records = sweep::run_sweep(&run)?;
    format::write_csv(out, &records)?;
    if let Some(plot) = &run.output.plot {
        svg::write_svg(plot, &records, "sweep", "theta")?;
    }
    Ok(records.len())
}

/// Runs a verification suite and returns its report lines.
///
/// Fails with [`CliError::Verification`] if any check exceeds its tolerance;
/// the error carries the full report.
pub fn cmd_verify(suite: &str, seed: u64) -> Result<String, CliError> {
    let checks = verify::run(suite, seed)?;
    let mut report = format!("verify {suite} (seed {seed})\n");
    for c in &checks {
        report.push_str(&c.to_string());
        report.push('\n');
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    if failed > 0 {
        report.push_str(&format!("{failed} of {} checks failed", checks.len()));
        return Err(CliError::Verification(report));
    }
    report.push_str(&format!("all {} checks passed", checks.len()));
    Ok(report)
}

/// Writes one named figure dataset into `outdir` and returns the written paths.
pub fn cmd_figure(name: &str, outdir: &Path, plot: bool) -> Result<Vec<std::path::PathBuf>, CliError> {
    figure::write(name, outdir, plot)
}
