//! Named datasets for the published realism curves.
//!
//! Each figure is a set of sweeps with pinned parameters: `f(θ) = θ/3` and
//! `φ_AB = π/5` for the single-charge curves; a cylinder with `ℓ = 6`,
//! `qK = 2π/25` and mean `m` of `5/2` for the quantized ones, prepared as
//! even superpositions over `{2, 3}`, `{1, 4}`, `{0, 5}` and `{-1, 6}`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fs;
use std::path::{Path, PathBuf};

use ab_realism::classical::{ClassicalScenario, OperatorPhase, PhaseProfile};
use ab_realism::measures::MeasureContext;

use crate::config::{
    Angle, CylinderConfig, GridConfig, MeasureConfig, Quantity, RunConfig, ScenarioConfig,
    ScenarioKind,
};
use crate::error::CliError;
use crate::format::write_csv;
use crate::svg::{meta_number, write_metadata, write_svg};
use crate::sweep::{run_sweep, sort_records, SweepRecord};

pub const FIGURES: [&str; 9] = [
    "fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b",
];

pub const CYLINDER_SETS: [&[i64]; 4] = [&[2, 3], &[1, 4], &[0, 5], &[-1, 6]];
pub const ELL: usize = 6;

/// Number of δ samples in the jump dataset.
const JUMP_POINTS: usize = 201;
/// One-sided offset from the crossing for the jump dataset.
const JUMP_OFFSET: f64 = 1e-9;

/// Output of a figure before it is written.
#[derive(Debug, Clone)]
pub struct FigureData {
    pub records: Vec<SweepRecord>,
    pub title: &'static str,
    pub x_label: &'static str,
    pub metadata: Vec<(&'static str, String)>,
}

fn measure(name: &str, observable: &str) -> MeasureConfig {
    MeasureConfig {
        name: name.into(),
        observable: observable.into(),
        base: None,
        normalization_dim: None,
        quantity: Quantity::Realism,
    }
}

fn classical_config(kind: ScenarioKind, f_slope: &str, phi_ab: Option<&str>) -> ScenarioConfig {
    ScenarioConfig {
        kind,
        f_slope: Some(Angle::from(f_slope)),
        f_table: None,
        phi_ab: phi_ab.map(Angle::from),
        gauge_cos: Vec::new(),
        gauge_sin: Vec::new(),
    }
}

pub fn set_label(support: &[i64]) -> String {
    let parts: Vec<String> = support.iter().map(i64::to_string).collect();
    format!("m{}", parts.join("_"))
}

/// Config of the quantized sweep for one coefficient set.
pub fn quantized_config(support: &[i64], measures: Vec<MeasureConfig>) -> RunConfig {
    RunConfig {
        scenario: ScenarioConfig {
            kind: ScenarioKind::QuantizedAb,
            f_slope: None,
            f_table: None,
            phi_ab: None,
            gauge_cos: Vec::new(),
            gauge_sin: Vec::new(),
        },
        cylinder: Some(CylinderConfig {
            ell: ELL,
            support: Some(support.to_vec()),
            coeffs: None,
            qk: Angle::from("2pi/25"),
            global_phases: None,
        }),
        grid: GridConfig::default(),
        measures,
        output: Default::default(),
    }
}

/// Config of the flux-threaded sweep with `f = 0` that the quantized curves
/// are compared against.
fn classical_baseline(observable: &str) -> RunConfig {
    RunConfig {
        scenario: ScenarioConfig {
            f_slope: None,
            ..classical_config(ScenarioKind::ClassicalAb, "0", Some("pi/5"))
        },
        cylinder: None,
        grid: GridConfig::default(),
        measures: vec![measure("classical", observable)],
        output: Default::default(),
    }
}

fn single(config: RunConfig) -> Result<Vec<SweepRecord>, CliError> {
    run_sweep(&config)
}

fn fig3(observable: &str, classical_observable: &str, prefix: &str) -> Result<Vec<SweepRecord>, CliError> {
    let mut records = single(classical_baseline(classical_observable))?;
    for r in &mut records {
        r.measure = format!("{prefix}_classical");
    }
    for support in CYLINDER_SETS {
        let name = format!("{prefix}_{}", set_label(support));
        records.extend(single(quantized_config(support, vec![measure(&name, observable)]))?);
    }
    sort_records(&mut records);
    Ok(records)
}

fn fig4(observable: &str, prefix: &str) -> Result<Vec<SweepRecord>, CliError> {
    let mut records = Vec::new();
    for (i, support) in CYLINDER_SETS.iter().enumerate() {
        let mut measures = vec![measure(&format!("{prefix}_{}", set_label(support)), observable)];
        if i == 0 {
            measures.push(measure("sigma_z_joint", "joint:sigma_z"));
        }
        records.extend(single(quantized_config(support, measures))?);
    }
    sort_records(&mut records);
    Ok(records)
}

/// Realism change of `σ^A_{f+δ}` across the crossing, from one-sided
/// evaluations of the dephasing path.
fn jump_records() -> Result<Vec<SweepRecord>, CliError> {
    let s = ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), PI / 5.0);
    let before = FRAC_PI_2 - JUMP_OFFSET;
    let after = FRAC_PI_2 + JUMP_OFFSET;
    (0..JUMP_POINTS)
        .map(|k| {
            let delta = FRAC_PI_2 * k as f64 / (JUMP_POINTS - 1) as f64;
            let g = OperatorPhase::tracking(&s.f, delta);
            let pre = s.realism_of(before, &s.sigma_ga(before, &g)?)?;
            let post = s.realism_of(after, &s.sigma_ga(after, &g)?)?;
            Ok(SweepRecord {
                theta: delta,
                measure: "jump".into(),
                value: post - pre,
                branch: "n/a".into(),
            })
        })
        .collect()
}

pub fn build(name: &str) -> Result<FigureData, CliError> {
    let caption_ab = vec![("f", "theta/3".to_string()), ("phi_ab", "pi/5".to_string())];
    let quantized_meta = || {
        vec![
            ("ell", ELL.to_string()),
            ("qk", "2pi/25".to_string()),
            ("mean_m", "5/2".to_string()),
            ("f", "0".to_string()),
            ("classical_phi_ab", "pi/5".to_string()),
            (
                "sets",
                CYLINDER_SETS.iter().map(|s| set_label(s)).collect::<Vec<_>>().join(" "),
            ),
        ]
    };
    let data = match name {
        "fig2a" => FigureData {
            records: single(RunConfig {
                scenario: classical_config(ScenarioKind::Standard, "1/3", None),
                cylinder: None,
                grid: GridConfig::default(),
                measures: vec![
                    measure("sigma_f", "sigma_f"),
                    measure("sigma_x", "sigma_x"),
                    measure("sigma_y", "sigma_y"),
                    measure("sigma_z", "sigma_z"),
                ],
                output: Default::default(),
            })?,
            title: "Standard interferometer, f = theta/3",
            x_label: "theta",
            metadata: vec![("f", "theta/3".to_string())],
        },
        "fig2b" => FigureData {
            records: single(RunConfig {
                scenario: classical_config(ScenarioKind::ClassicalAb, "1/3", Some("pi/5")),
                cylinder: None,
                grid: GridConfig::default(),
                measures: vec![
                    measure("sigma_xA", "sigma_xA"),
                    measure("sigma_yA", "sigma_yA"),
                    measure("sigma_z", "sigma_z"),
                ],
                output: Default::default(),
            })?,
            title: "Classical flux, phi_AB = pi/5",
            x_label: "theta",
            metadata: caption_ab,
        },
        "fig2c" => FigureData {
            records: jump_records()?,
            title: "Realism jump across the crossing",
            x_label: "delta",
            metadata: {
                let mut m = caption_ab;
                m.push(("theta_column", "delta".to_string()));
                m.push(("one_sided_offset", meta_number(JUMP_OFFSET)));
                m.push(("zero_at_delta", meta_number(PI / 10.0)));
                m
            },
        },
        "fig3a" => FigureData {
            records: fig3("sigma_z", "sigma_z", "sigma_z")?,
            title: "Charge realism of sigma_z",
            x_label: "theta",
            metadata: quantized_meta(),
        },
        "fig3b" => FigureData {
            records: fig3("sigma_x", "sigma_x", "sigma_x")?,
            title: "Charge realism of sigma_x",
            x_label: "theta",
            metadata: quantized_meta(),
        },
        "fig3c" => FigureData {
            records: fig3("sigma_y", "sigma_y", "sigma_y")?,
            title: "Charge realism of sigma_y",
            x_label: "theta",
            metadata: quantized_meta(),
        },
        "fig3d" => FigureData {
            records: fig3("branch:-1", "sigma_xA", "branch_m-1")?,
            title: "Charge realism of the m = -1 branch operator",
            x_label: "theta",
            metadata: quantized_meta(),
        },
        "fig4a" | "fig4b" => {
            let (observable, prefix) = if name == "fig4a" {
                ("Sigma_x", "Sigma_x")
            } else {
                ("Sigma_y", "Sigma_y")
            };
            let ctx = MeasureContext::unit_scale(4 * ELL + 2)?;
            let floor = ctx.max_value() - ctx.base.log(2.0);
            let mut metadata = quantized_meta();
            metadata.retain(|(k, _)| *k != "classical_phi_ab");
            metadata.push(("log_base", (4 * ELL + 2).to_string()));
            metadata.push(("sigma_z_joint_floor", meta_number(floor)));
            metadata.push(("sigma_z_joint_floor_expr", "log_26(13)".to_string()));
            FigureData {
                records: fig4(observable, prefix)?,
                title: if name == "fig4a" {
                    "Joint realism of Sigma_x (base 26)"
                } else {
                    "Joint realism of Sigma_y (base 26)"
                },
                x_label: "theta",
                metadata,
            }
        }
        other => {
            return Err(CliError::Config(format!(
                "unknown figure {other:?}; expected one of {}",
                FIGURES.join(", ")
            )))
        }
    };
    Ok(data)
}

/// Writes `<name>.csv`, `<name>.meta.txt` and optionally `<name>.svg`.
pub fn write(name: &str, outdir: &Path, plot: bool) -> Result<Vec<PathBuf>, CliError> {
    let data = build(name)?;
    fs::create_dir_all(outdir).map_err(|e| CliError::io("create directory", outdir, e))?;
    let csv = outdir.join(format!("{name}.csv"));
    write_csv(&csv, &data.records)?;
    let meta = outdir.join(format!("{name}.meta.txt"));
    let mut entries = vec![("figure", name.to_string())];
    entries.extend(data.metadata.iter().cloned());
    write_metadata(&meta, &entries)?;
    let mut written = vec![csv, meta];
    if plot {
        let svg = outdir.join(format!("{name}.svg"));
        write_svg(&svg, &data.records, data.title, data.x_label)?;
        written.push(svg);
    }
    Ok(written)
}
