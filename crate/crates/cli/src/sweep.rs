//! θ sweeps driven by a [`RunConfig`].

use std::collections::HashSet;

use crate::config::{RunConfig, ScenarioKind};
use crate::error::CliError;
use crate::measure::{branch_label, ResolvedMeasure};

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub theta: f64,
    pub measure: String,
    pub value: f64,
    /// `pre`, `post` or `n/a`.
    pub branch: String,
}

/// Sorts by θ, then measure name.
pub fn sort_records(records: &mut [SweepRecord]) {
    records.sort_by(|a, b| a.theta.total_cmp(&b.theta).then_with(|| a.measure.cmp(&b.measure)));
}

/// Evaluates every measure on every grid point.
pub fn run_sweep(config: &RunConfig) -> Result<Vec<SweepRecord>, CliError> {
    let kind: ScenarioKind = config.scenario.kind;
    let scenario = config.build_scenario()?;
    let thetas = config.grid.points()?;
    let mut seen = HashSet::new();
    let measures = config
        .measures
        .iter()
        .map(|m| {
            if !seen.insert(m.name.as_str()) {
                return Err(CliError::Config(format!("duplicate measure name {:?}", m.name)));
            }
            ResolvedMeasure::resolve(m, &scenario, kind)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut records = Vec::with_capacity(thetas.len() * measures.len());
    for &theta in &thetas {
        for m in &measures {
            records.push(SweepRecord {
                theta,
                measure: m.name.clone(),
                value: m.evaluate(&scenario, theta)?,
                branch: branch_label(kind, theta).to_string(),
            });
        }
    }
    sort_records(&mut records);
    Ok(records)
}
