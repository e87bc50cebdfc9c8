//! Resolution of observable spec strings against a scenario.
//!
//! | spec | acts on | scenarios |
//! |---|---|---|
//! | `sigma_z` | charge | all |
//! | `sigma_x`, `sigma_y`, `sigma_g:<δ>` | charge, fixed phase `0`, `π/2`, `δ` | all |
//! | `sigma_f`, `sigma_f:<δ>` | charge, phase `f(θ) + δ` | all |
//! | `sigma_xA`, `sigma_yA`, `sigma_A:<δ>` | charge, phase `f + δ` minus the chord phase | standard, classical-ab |
//! | `branch:<m>` | charge, operator adapted to cylinder branch `m` | quantized-ab |
//! | `joint:sigma_z` | `σ_z ⊗ 𝟙` on charge and cylinder | quantized-ab |
//! | `Sigma_x`, `Sigma_y` | block operator on charge and cylinder | quantized-ab |
//!
//! In the quantized scenario, charge observables are evaluated on the
//! reduced charge state. Joint observables default to base and
//! normalization `4ℓ+2`; everything else defaults to bits on a qubit.

use std::f64::consts::FRAC_PI_2;

use ab_realism::classical::{self, Branch, OperatorPhase, PhaseProfile};
use ab_realism::measures::{
    coherence, discord_nonminimized, irrealism, realism, MeasureContext, Observable, Scope,
};
use ab_realism::quantized::JointAxis;
use ab_realism::state::{partial_trace, DensityMatrix, Subsystem};

use crate::config::{parse_angle, MeasureConfig, Quantity, Scenario, ScenarioKind};
use crate::error::CliError;

#[derive(Debug, Clone)]
enum Operator {
    SigmaZ,
    /// `σ_g` with `g = profile + offset`.
    Phase(OperatorPhase),
    /// `σ^A_g`.
    Chord(OperatorPhase),
    BranchOp(i64),
    JointZ,
    Joint(JointAxis),
}

impl Operator {
    fn is_joint(&self) -> bool {
        matches!(self, Self::JointZ | Self::Joint(_))
    }
}

/// A measure ready to evaluate on a scenario.
#[derive(Debug, Clone)]
pub struct ResolvedMeasure {
    pub name: String,
    operator: Operator,
    ctx: MeasureContext,
    quantity: Quantity,
}

fn unresolvable(spec: &str, why: &str) -> CliError {
    CliError::Config(format!("unresolvable measure spec {spec:?}: {why}"))
}

fn parse_operator(spec: &str, f: &PhaseProfile, kind: ScenarioKind) -> Result<Operator, CliError> {
    let quantized = kind == ScenarioKind::QuantizedAb;
    let angle = |text: &str| {
        parse_angle(text).ok_or_else(|| unresolvable(spec, "cannot parse the phase offset"))
    };
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    let op = match (head, arg) {
        ("sigma_z", None) => Operator::SigmaZ,
        ("sigma_x", None) => Operator::Phase(OperatorPhase::constant(0.0)),
        ("sigma_y", None) => Operator::Phase(OperatorPhase::constant(FRAC_PI_2)),
        ("sigma_g", Some(d)) => Operator::Phase(OperatorPhase::constant(angle(d)?)),
        ("sigma_f", None) => Operator::Phase(OperatorPhase::tracking(f, 0.0)),
        ("sigma_f", Some(d)) => Operator::Phase(OperatorPhase::tracking(f, angle(d)?)),
        ("sigma_xA", None) if !quantized => Operator::Chord(OperatorPhase::tracking(f, 0.0)),
        ("sigma_yA", None) if !quantized => {
            Operator::Chord(OperatorPhase::tracking(f, FRAC_PI_2))
        }
        ("sigma_A", Some(d)) if !quantized => {
            Operator::Chord(OperatorPhase::tracking(f, angle(d)?))
        }
        ("sigma_xA" | "sigma_yA" | "sigma_A", _) if quantized => {
            return Err(unresolvable(spec, "use branch:<m> in a quantized scenario"))
        }
        ("branch", Some(m)) if quantized => Operator::BranchOp(
            m.trim()
                .parse()
                .map_err(|_| unresolvable(spec, "branch index must be an integer"))?,
        ),
        ("joint", Some("sigma_z")) if quantized => Operator::JointZ,
        ("Sigma_x", None) if quantized => Operator::Joint(JointAxis::X),
        ("Sigma_y", None) if quantized => Operator::Joint(JointAxis::Y),
        ("branch" | "joint" | "Sigma_x" | "Sigma_y", _) if !quantized => {
            return Err(unresolvable(spec, "only defined for quantized-ab"))
        }
        _ => return Err(unresolvable(spec, "unknown observable")),
    };
    Ok(op)
}

impl ResolvedMeasure {
    pub fn resolve(
        m: &MeasureConfig,
        scenario: &Scenario,
        kind: ScenarioKind,
    ) -> Result<Self, CliError> {
        let f = match scenario {
            Scenario::Classical(s) => &s.f,
            Scenario::Quantized(q) => &q.f,
        };
        let operator = parse_operator(m.observable.trim(), f, kind)?;
        if let (Operator::BranchOp(b), Scenario::Quantized(q)) = (&operator, scenario) {
            if b.unsigned_abs() as usize > q.cylinder.ell() {
                return Err(unresolvable(&m.observable, "branch outside the cutoff"));
            }
        }
        let default_dim = match scenario {
            Scenario::Quantized(q) if operator.is_joint() => q.joint_dim(),
            _ => 2,
        };
        let dim = m.normalization_dim.unwrap_or(default_dim);
        let base = m.base.unwrap_or(default_dim as f64);
        let ctx = MeasureContext::new(base, dim)
            .map_err(|e| CliError::Config(format!("measure {:?}: {e}", m.name)))?;
        let allowed = match m.quantity {
            Quantity::Realism | Quantity::Irrealism => true,
            Quantity::Coherence => !matches!(operator, Operator::Joint(_)),
            Quantity::Discord => {
                matches!(scenario, Scenario::Quantized(_)) && !matches!(operator, Operator::Joint(_))
            }
        };
        if !allowed {
            return Err(CliError::Config(format!(
                "measure {:?}: {:?} is not defined for {}",
                m.name, m.quantity, m.observable
            )));
        }
        if m.name.is_empty() || m.name.contains([',', '"', '\n', '\r']) {
            return Err(CliError::Config(format!(
                "measure name {:?} must be non-empty and free of commas, quotes and newlines",
                m.name
            )));
        }
        Ok(Self {
            name: m.name.clone(),
            operator,
            ctx,
            quantity: m.quantity,
        })
    }

    /// Charge-space operator at `θ` (for joint specs, the charge factor).
    fn charge_operator(&self, scenario: &Scenario, theta: f64) -> Result<Observable, CliError> {
        Ok(match (&self.operator, scenario) {
            (Operator::SigmaZ | Operator::JointZ, _) => classical::sigma_z(),
            (Operator::Phase(g), _) => classical::sigma_g(theta, g)?,
            (Operator::Chord(g), Scenario::Classical(s)) => s.sigma_ga(theta, g)?,
            (Operator::BranchOp(m), Scenario::Quantized(q)) => q.sigma_xa_branch(theta, *m)?,
            _ => unreachable!("resolution rejects this combination"),
        })
    }

    pub fn evaluate(&self, scenario: &Scenario, theta: f64) -> Result<f64, CliError> {
        let ctx = &self.ctx;
        let value = match scenario {
            Scenario::Classical(s) => {
                let rho = s.charge_state(theta)?.density();
                let op = self.charge_operator(scenario, theta)?;
                match self.quantity {
                    Quantity::Realism => realism(&rho, &op, Scope::Whole, ctx)?,
                    Quantity::Irrealism | Quantity::Coherence => {
                        irrealism(&rho, &op, Scope::Whole, ctx)?
                    }
                    Quantity::Discord => unreachable!("rejected at resolution"),
                }
            }
            Scenario::Quantized(q) => {
                let joint = q.joint_state(theta)?.density();
                match &self.operator {
                    Operator::Joint(axis) => {
                        let op = q.sigma_joint(theta, *axis)?;
                        joint_quantity(&joint, &op, Scope::Whole, self.quantity, ctx)?
                    }
                    Operator::JointZ => {
                        let op = classical::sigma_z();
                        match self.quantity {
                            Quantity::Coherence => {
                                coherence(&partial_trace(&joint, Subsystem::S)?, &op, ctx)?
                            }
                            Quantity::Discord => discord_nonminimized(&joint, &op, ctx)?,
                            other => joint_quantity(&joint, &op, Scope::Subsystem, other, ctx)?,
                        }
                    }
                    _ => {
                        let op = self.charge_operator(scenario, theta)?;
                        let rho_s = partial_trace(&joint, Subsystem::S)?;
                        match self.quantity {
                            Quantity::Realism => realism(&rho_s, &op, Scope::Whole, ctx)?,
                            Quantity::Irrealism | Quantity::Coherence => {
                                irrealism(&rho_s, &op, Scope::Whole, ctx)?
                            }
                            Quantity::Discord => discord_nonminimized(&joint, &op, ctx)?,
                        }
                    }
                }
            }
        };
        if !value.is_finite() {
            return Err(CliError::Config(format!(
                "measure {:?} is not finite at theta = {theta}",
                self.name
            )));
        }
        Ok(value)
    }
}

fn joint_quantity(
    rho: &DensityMatrix,
    op: &Observable,
    scope: Scope,
    quantity: Quantity,
    ctx: &MeasureContext,
) -> Result<f64, CliError> {
    Ok(match quantity {
        Quantity::Realism => realism(rho, op, scope, ctx)?,
        _ => irrealism(rho, op, scope, ctx)?,
    })
}

/// Side of the crossing, or `n/a` for a scenario without one.
pub fn branch_label(kind: ScenarioKind, theta: f64) -> &'static str {
    if kind.has_crossing() {
        Branch::at(theta).as_str()
    } else {
        "n/a"
    }
}
