//! CSV output with `%.12g`-style numbers.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::CliError;
use crate::sweep::SweepRecord;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros
/// dropped, scientific notation outside `[1e-4, 1e12)`.
pub fn format_g12(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_csv(path: &Path, records: &[SweepRecord]) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io("create directory", dir, e))?;
    }
    let file = fs::File::create(path).map_err(|e| CliError::io("write", path, e))?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(std::io::BufWriter::new(file));
    let io_err = |e: csv::Error| CliError::io("write", path, e.into());
    w.write_record(["theta", "measure", "value", "branch"])
        .map_err(io_err)?;
    for r in records {
        w.write_record([
            format_g12(r.theta).as_str(),
            r.measure.as_str(),
            format_g12(r.value).as_str(),
            r.branch.as_str(),
        ])
        .map_err(io_err)?;
    }
    let mut inner = w
        .into_inner()
        .map_err(|e| CliError::io("write", path, e.into_error()))?;
    inner.flush().map_err(|e| CliError::io("write", path, e))
}
