//! TOML run configuration.
//!
//! ```toml
//! [scenario]
//! kind = "classical-ab"      # standard | classical-ab | quantized-ab
//! f_slope = "1/3"            # or f_table = [[0.0, 0.0], [3.141592653589793, 1.0]]
//! phi_ab = "pi/5"
//! gauge_cos = [0.1, -0.2]    # optional single-valued gauge, radians of phase
//! gauge_sin = []
//!
//! [grid]
//! start = 0.0
//! end = "pi"
//! count = 1001
//! exclusion = 1e-9
//!
//! [[measure]]
//! name = "sigma_xA"
//! observable = "sigma_xA"
//!
//! [output]
//! csv = "fig2b.csv"
//! ```
//!
//! Angles are either numbers or strings such as `"pi/5"`, `"2pi/25"`,
//! `"-3*pi/4"` or `"0.25"`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::path::PathBuf;

use ab_realism::classical::{ClassicalScenario, GaugeChoice, PhaseProfile};
use ab_realism::quantized::{CylinderState, GlobalPhase, QuantizedScenario};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// An angle written as a number or as a multiple of π.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Angle {
    Value(f64),
    Expr(String),
}

impl Angle {
    pub fn value(&self) -> Result<f64, CliError> {
        match self {
            Self::Value(v) => Ok(*v),
            Self::Expr(s) => parse_angle(s)
                .ok_or_else(|| CliError::Config(format!("cannot parse angle {s:?}"))),
        }
    }
}

impl From<f64> for Angle {
    fn from(v: f64) -> Self {
        Self::Value(v)
    }
}

impl From<&str> for Angle {
    fn from(s: &str) -> Self {
        Self::Expr(s.to_string())
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Value(v) => write!(f, "{v}"),
            Self::Expr(s) => f.write_str(s),
        }
    }
}

/// Parses `[±][coeff][*]pi[/denom]` or a plain (possibly fractional) number.
pub fn parse_angle(text: &str) -> Option<f64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.to_ascii_lowercase();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d.parse::<f64>().ok()?)),
        None => (s.as_str(), None),
    };
    let value = if let Some(coeff) = num.strip_suffix("pi").or_else(|| num.strip_suffix('π')) {
        let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
        let c = match coeff {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse::<f64>().ok()?,
        };
        c * PI
    } else {
        num.parse::<f64>().ok()?
    };
    let value = match den {
        Some(d) if d != 0.0 => value / d,
        Some(_) => return None,
        None => value,
    };
    value.is_finite().then_some(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    Standard,
    ClassicalAb,
    QuantizedAb,
}

impl ScenarioKind {
    /// Whether the θ grid has a crossing to label.
    pub fn has_crossing(self) -> bool {
        !matches!(self, Self::Standard)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub kind: ScenarioKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_slope: Option<Angle>,
    /// `(θ, f(θ))` pairs covering `[0, π]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_table: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_ab: Option<Angle>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub gauge_cos: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub gauge_sin: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CylinderConfig {
    pub ell: usize,
    /// Even superposition over these `m` values.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<i64>>,
    /// Explicit `(re, im)` amplitudes for `m = -ℓ, …, ℓ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<[f64; 2]>>,
    pub qk: Angle,
    /// Optional `(offset, slope)` of `g_m(θ)` for `m = -ℓ, …, ℓ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub global_phases: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default = "GridConfig::default_start")]
    pub start: Angle,
    #[serde(default = "GridConfig::default_end")]
    pub end: Angle,
    #[serde(default = "GridConfig::default_count")]
    pub count: usize,
    /// Half-width of the window around π/2 whose points are pushed to its edges.
    #[serde(default = "GridConfig::default_exclusion")]
    pub exclusion: f64,
}

impl GridConfig {
    fn default_start() -> Angle {
        Angle::Value(0.0)
    }
    fn default_end() -> Angle {
        Angle::Expr("pi".into())
    }
    fn default_count() -> usize {
        1001
    }
    fn default_exclusion() -> f64 {
        1e-9
    }

    /// Grid points, with every point inside the exclusion window moved to
    /// the nearer edge (the centre goes to the post-crossing edge).
    pub fn points(&self) -> Result<Vec<f64>, CliError> {
        let start = self.start.value()?;
        let end = self.end.value()?;
        if self.count < 2 {
            return Err(CliError::Config(format!(
                "grid count must be at least 2, got {}",
                self.count
            )));
        }
        if !(0.0..=PI).contains(&start) || !(0.0..=PI).contains(&end) || start >= end {
            return Err(CliError::Config(format!(
                "grid must satisfy 0 <= start < end <= pi, got [{start}, {end}]"
            )));
        }
        if !(self.exclusion >= 0.0 && self.exclusion < 0.1) {
            return Err(CliError::Config(format!(
                "exclusion half-width must lie in [0, 0.1), got {}",
                self.exclusion
            )));
        }
        let n = self.count - 1;
        Ok((0..=n)
            .map(|k| {
                let t = if k == n {
                    end
                } else {
                    start + (end - start) * k as f64 / n as f64
                };
                let offset = t - FRAC_PI_2;
                if offset.abs() < self.exclusion {
                    if offset < 0.0 {
                        FRAC_PI_2 - self.exclusion
                    } else {
                        FRAC_PI_2 + self.exclusion
                    }
                } else {
                    t
                }
            })
            .collect())
    }
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            start: Self::default_start(),
            end: Self::default_end(),
            count: Self::default_count(),
            exclusion: Self::default_exclusion(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    #[default]
    Realism,
    Irrealism,
    Coherence,
    Discord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureConfig {
    pub name: String,
    pub observable: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub quantity: Quantity,
}

fn is_default<T: Default + PartialEq>(v: &T) -> bool {
    *v == T::default()
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub scenario: ScenarioConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cylinder: Option<CylinderConfig>,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(rename = "measure")]
    pub measures: Vec<MeasureConfig>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub output: OutputConfig,
}

/// A scenario ready to evaluate.
#[derive(Debug, Clone)]
pub enum Scenario {
    Classical(ClassicalScenario),
    Quantized(QuantizedScenario),
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let config: Self = toml::from_str(text).map_err(|e| {
            let msg = e.message().to_string();
            CliError::Config(msg.lines().next().unwrap_or("invalid config").to_string())
        })?;
        if config.measures.is_empty() {
            return Err(CliError::Config("at least one [[measure]] is required".into()));
        }
        Ok(config)
    }

    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn phase_profile(&self) -> Result<PhaseProfile, CliError> {
        let s = &self.scenario;
        match (&s.f_slope, &s.f_table) {
            (Some(_), Some(_)) => Err(CliError::Config(
                "set at most one of f_slope and f_table".into(),
            )),
            (Some(slope), None) => Ok(PhaseProfile::linear(slope.value()?)),
            (None, Some(table)) => {
                let (t, v) = table.iter().map(|[a, b]| (*a, *b)).unzip();
                PhaseProfile::tabulated(t, v).map_err(|e| CliError::Config(e.to_string()))
            }
            (None, None) => Ok(PhaseProfile::Zero),
        }
    }

    pub fn build_scenario(&self) -> Result<Scenario, CliError> {
        let f = self.phase_profile()?;
        let s = &self.scenario;
        let gauge = GaugeChoice::new(s.gauge_cos.clone(), s.gauge_sin.clone());
        match s.kind {
            ScenarioKind::Standard => {
                if s.phi_ab.is_some() || !gauge.is_zero() || self.cylinder.is_some() {
                    return Err(CliError::Config(
                        "standard scenario takes no phi_ab, gauge or cylinder".into(),
                    ));
                }
                Ok(Scenario::Classical(ClassicalScenario::standard(f)))
            }
            ScenarioKind::ClassicalAb => {
                let phi = s
                    .phi_ab
                    .as_ref()
                    .ok_or_else(|| CliError::Config("classical-ab requires phi_ab".into()))?
                    .value()?;
                if self.cylinder.is_some() {
                    return Err(CliError::Config("classical-ab takes no [cylinder]".into()));
                }
                Ok(Scenario::Classical(
                    ClassicalScenario::aharonov_bohm(f, phi).with_gauge(gauge),
                ))
            }
            ScenarioKind::QuantizedAb => {
                if s.phi_ab.is_some() || !gauge.is_zero() {
                    return Err(CliError::Config(
                        "quantized-ab takes its flux from [cylinder], not phi_ab or a gauge".into(),
                    ));
                }
                let c = self
                    .cylinder
                    .as_ref()
                    .ok_or_else(|| CliError::Config("quantized-ab requires [cylinder]".into()))?;
                Ok(Scenario::Quantized(c.build(f)?))
            }
        }
    }
}

impl CylinderConfig {
    pub fn build(&self, f: PhaseProfile) -> Result<QuantizedScenario, CliError> {
        let bad = |e: ab_realism::Error| CliError::Config(e.to_string());
        let cylinder = match (&self.support, &self.coeffs) {
            (Some(support), None) => CylinderState::even_superposition(self.ell, support),
            (None, Some(coeffs)) => CylinderState::new(
                self.ell,
                coeffs.iter().map(|[re, im]| Complex64::new(*re, *im)).collect(),
            ),
            _ => {
                return Err(CliError::Config(
                    "[cylinder] needs exactly one of support and coeffs".into(),
                ))
            }
        }
        .map_err(bad)?;
        let phases = self
            .global_phases
            .as_ref()
            .map(|g| {
                g.iter()
                    .map(|[offset, slope]| GlobalPhase {
                        offset: *offset,
                        slope: *slope,
                    })
                    .collect()
            })
            .unwrap_or_default();
        QuantizedScenario::new(cylinder, self.qk.value()?, f)
            .with_global_phases(phases)
            .map_err(bad)
    }
}
