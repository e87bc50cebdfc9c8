//! Seeded property checks behind `verify`.
//!
//! Every check reports the worst deviation it saw against its tolerance.
//! Inequalities are reported as the worst violation (0 when every sample
//! satisfies them).

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use ab_realism::classical::{
    self, packet_angles, Branch, ClassicalScenario, OperatorPhase, PhaseProfile,
};
use ab_realism::entropy::{binary_entropy, relative_entropy, LogBase};
use ab_realism::linalg::{hermitian_eigendecompose, ComplexMatrix};
use ab_realism::measures::{
    complementarity_check, decompose_irrealism, dephase, entanglement_entropy,
    involutory_uncertainty, irrealism, realism, MeasureContext, Observable, Scope,
};
use ab_realism::quantized::{CylinderState, GlobalPhase, JointAxis, QuantizedScenario};
use ab_realism::sample;
use ab_realism::state::{partial_trace, DensityMatrix, Subsystem};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::figure::{CYLINDER_SETS, ELL};

pub const DEFAULT_SEED: u64 = 20240601;

pub const SUITES: [&str; 13] = [
    "eigen",
    "minimizer",
    "decomposition",
    "bounds",
    "complementarity",
    "uncertainty",
    "gauge",
    "jump",
    "chord",
    "closed-form",
    "quantized",
    "joint",
    "classical-limit",
];

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub samples: usize,
    pub tolerance: f64,
    pub worst: f64,
}

impl Check {
    fn new(name: impl Into<String>, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            samples: 0,
            tolerance,
            worst: 0.0,
        }
    }

    /// Records a deviation that must stay within the tolerance.
    fn record(&mut self, deviation: f64) {
        self.samples += 1;
        if deviation.is_nan() || deviation > self.worst {
            self.worst = if deviation.is_nan() { f64::INFINITY } else { deviation };
        }
    }

    fn diff(&mut self, got: f64, want: f64) {
        self.record((got - want).abs());
    }

    /// Records the violation of `lhs <= rhs`.
    fn at_most(&mut self, lhs: f64, rhs: f64) {
        self.record((lhs - rhs).max(0.0));
    }

    pub fn passed(&self) -> bool {
        self.samples > 0 && self.worst <= self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<44} samples {:>6}  worst {:.3e}  tol {:.0e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.samples,
            self.worst,
            self.tolerance
        )
    }
}

/// Runs one suite, or all of them for `"all"`.
pub fn run(suite: &str, seed: u64) -> Result<Vec<Check>, CliError> {
    if suite == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run_one(s, seed)?);
        }
        return Ok(out);
    }
    run_one(suite, seed)
}

fn run_one(suite: &str, seed: u64) -> Result<Vec<Check>, CliError> {
    // each suite draws from its own stream so subsets reproduce `all`
    let index = SUITES.iter().position(|s| *s == suite).ok_or_else(|| {
        CliError::Config(format!(
            "unknown suite {suite:?}; expected all or one of {}",
            SUITES.join(", ")
        ))
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let checks = match suite {
        "eigen" => eigen(&mut rng),
        "minimizer" => minimizer(&mut rng),
        "decomposition" => decomposition(&mut rng),
        "bounds" => bounds(&mut rng),
        "complementarity" => qubit_complementarity(&mut rng),
        "uncertainty" => uncertainty(&mut rng),
        "gauge" => gauge(&mut rng),
        "jump" => jump(),
        "chord" => chord(&mut rng),
        "closed-form" => closed_form(&mut rng),
        "quantized" => quantized(&mut rng),
        "joint" => joint(),
        "classical-limit" => classical_limit(),
        _ => unreachable!(),
    };
    checks.map_err(|e| CliError::Verification(format!("suite {suite}: {e}")))
}

type Checks = Result<Vec<Check>, ab_realism::Error>;

fn fig2b() -> ClassicalScenario {
    ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), PI / 5.0)
}

fn theta_off_crossing(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let t = rng.random_range(0.0..=PI);
        if (t - FRAC_PI_2).abs() > 1e-6 {
            return t;
        }
    }
}

fn eigen(rng: &mut ChaCha8Rng) -> Checks {
    let mut rec = Check::new("eigen/reconstruction (relative)", 1e-10);
    let mut orth = Check::new("eigen/orthonormality", 1e-10);
    for _ in 0..200 {
        let d = rng.random_range(2..=26);
        let a = sample::random_hermitian(rng, d);
        let e = hermitian_eigendecompose(&a)?;
        rec.record(e.reconstruct().max_abs_diff(&a) / a.frobenius_norm().max(1.0));
        let v = &e.eigenvectors;
        orth.record((&v.adjoint() * v).max_abs_diff(&ComplexMatrix::identity(d)));
    }
    Ok(vec![rec, orth])
}

fn minimizer(rng: &mut ChaCha8Rng) -> Checks {
    let mut min = Check::new("minimizer/relative-entropy", 1e-9);
    let mut same = Check::new("minimizer/irrealism-identity", 1e-9);
    for _ in 0..100 {
        let d = rng.random_range(2..=4);
        let rank = rng.random_range(1..=d);
        let rho = sample::random_density(rng, d, rank);
        let obs = sample::random_rank1_observable(rng, d);
        let ctx = MeasureContext::new(2.0, d)?;
        let own = relative_entropy(&rho, &dephase(&rho, &obs, Scope::Whole)?, LogBase::TWO)?;
        same.diff(own, irrealism(&rho, &obs, Scope::Whole, &ctx)?);
        for _ in 0..20 {
            let other = sample::random_density(rng, d, d);
            let rel = relative_entropy(&rho, &dephase(&other, &obs, Scope::Whole)?, LogBase::TWO)?;
            min.at_most(own, rel);
        }
    }
    Ok(vec![min, same])
}

fn decomposition(rng: &mut ChaCha8Rng) -> Checks {
    let mut c = Check::new("decomposition/irrealism=coherence+discord", 1e-9);
    let mut nonneg = Check::new("decomposition/irrealism>=0", 1e-12);
    for _ in 0..500 {
        let r = rng.random_range(2..=13);
        let rank = rng.random_range(1..=2 * r);
        let rho = sample::random_bipartite_density(rng, 2, r, rank);
        let obs = sample::random_rank1_observable(rng, 2);
        let d = decompose_irrealism(&rho, &obs, &MeasureContext::qubit())?;
        c.record(d.defect());
        nonneg.at_most(0.0, d.irrealism);
    }
    Ok(vec![c, nonneg])
}

/// Eigenbasis `u` and its Fourier-rotated partner, which are mutually unbiased.
fn mub_pair(rng: &mut ChaCha8Rng, d: usize) -> Result<(Observable, Observable), ab_realism::Error> {
    let u = sample::random_basis(rng, d);
    let scale = 1.0 / (d as f64).sqrt();
    let rotated: Vec<Vec<Complex64>> = (0..d)
        .map(|j| {
            (0..d)
                .map(|i| {
                    u.iter()
                        .enumerate()
                        .map(|(n, col)| {
                            Complex64::from_polar(scale, 2.0 * PI * (j * n) as f64 / d as f64)
                                * col[i]
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    let eig: Vec<f64> = (0..d).map(|k| k as f64).collect();
    Ok((
        Observable::from_basis(&eig, &u)?,
        Observable::from_basis(&eig, &rotated)?,
    ))
}

fn bounds(rng: &mut ChaCha8Rng) -> Checks {
    let mut mub = Check::new("bounds/mub", 1e-9);
    let mut general = Check::new("bounds/general", 1e-9);
    let mut looser = Check::new("bounds/general-looser-than-mub", 1e-9);
    let mut pure = Check::new("bounds/pure-state-rhs", 1e-9);
    for k in 0..500 {
        let ds = 2 + k % 2;
        let dr = rng.random_range(1..=4);
        let rank = rng.random_range(1..=ds * dr);
        let rho = sample::random_bipartite_density(rng, ds, dr, rank);
        let ctx = MeasureContext::new(2.0, ds)?;
        let (a, b) = mub_pair(rng, ds)?;
        let rep = complementarity_check(&rho, &a, &b, &ctx)?;
        let Some(rhs_mub) = rep.rhs_mub else {
            mub.record(f64::INFINITY);
            continue;
        };
        mub.at_most(rep.lhs, rhs_mub);
        general.at_most(rep.lhs, rep.rhs_general);
        looser.at_most(rhs_mub, rep.rhs_general);
        let c = sample::random_rank1_observable(rng, ds);
        let rep = complementarity_check(&rho, &a, &c, &ctx)?;
        general.at_most(rep.lhs, rep.rhs_general);

        let psi = sample::random_pure_bipartite(rng, ds, dr).density();
        let rep = complementarity_check(&psi, &a, &b, &ctx)?;
        let ent = entanglement_entropy(&psi, LogBase::TWO)?;
        pure.diff(rep.rhs_mub.unwrap_or(f64::NAN), ctx.max_value() - ent);
        mub.at_most(rep.lhs, rep.rhs_mub.unwrap_or(f64::NEG_INFINITY));
    }
    Ok(vec![mub, general, looser, pure])
}

fn qubit_complementarity(rng: &mut ChaCha8Rng) -> Checks {
    let mut c = Check::new("complementarity/qubit", 1e-9);
    let s = fig2b();
    let z = classical::sigma_z();
    let ctx = MeasureContext::qubit();
    for _ in 0..500 {
        let rho = sample::random_pure_state(rng, 2).density();
        let theta = rng.random_range(0.0..=PI);
        let g = OperatorPhase::constant(rng.random_range(0.0..2.0 * PI));
        let op = s.sigma_ga(theta, &g)?;
        let lhs = realism(&rho, &z, Scope::Whole, &ctx)? + realism(&rho, &op, Scope::Whole, &ctx)?;
        c.at_most(lhs, 1.0);
    }
    Ok(vec![c])
}

fn uncertainty(rng: &mut ChaCha8Rng) -> Checks {
    let mut ident = Check::new("uncertainty/delta^2+mean^2=1", 1e-10);
    let mut incoherent = Check::new("uncertainty/incoherent-maximal", 1e-10);
    let s = fig2b();
    for _ in 0..500 {
        let rank = rng.random_range(1..=2);
        let rho = sample::random_density(rng, 2, rank);
        let theta = rng.random_range(0.0..=PI);
        let op = s.sigma_ga(theta, &OperatorPhase::constant(rng.random_range(0.0..2.0 * PI)))?;
        let u = involutory_uncertainty(&rho, &op)?;
        ident.diff(u.delta * u.delta + u.expectation * u.expectation, 1.0);
        let p: f64 = rng.random_range(0.0..=1.0);
        let diag = DensityMatrix::new(ComplexMatrix::from_diagonal(&[p, 1.0 - p]))?;
        let u = involutory_uncertainty(&diag, &op)?;
        incoherent.diff(u.delta, 1.0);
    }
    Ok(vec![ident, incoherent])
}

fn gauge(rng: &mut ChaCha8Rng) -> Checks {
    let mut invariant = Check::new("gauge/sigma_gA-realism-invariant", 1e-10);
    let mut enclosed = Check::new("gauge/enclosed-phase-invariant", 1e-12);
    let mut endpoint = Check::new("gauge/arm-phase-endpoint-shift", 1e-12);
    let mut moved = 0usize;
    let base = fig2b();
    let thetas: Vec<f64> = (0..41)
        .map(|k| {
            let t = PI * k as f64 / 40.0;
            if k == 20 {
                t + 1e-9
            } else {
                t
            }
        })
        .collect();
    let ga = OperatorPhase::tracking(&base.f, 0.0);
    let x = Observable::two_level_phase(0.0);
    for _ in 0..100 {
        let terms = rng.random_range(1..=4);
        let s = base.clone().with_gauge(sample::random_gauge(rng, terms));
        let mut plain_change = 0.0_f64;
        for &t in &thetas {
            let a = s.realism_of(t, &s.sigma_ga(t, &ga)?)?;
            let a0 = base.realism_of(t, &base.sigma_ga(t, &ga)?)?;
            invariant.diff(a, a0);
            enclosed.diff(s.enclosed_phase(t)?, base.enclosed_phase(t)?);
            let (a0, a1) = packet_angles(t);
            endpoint.diff(
                s.arm_phase(t)? - base.arm_phase(t)?,
                s.gauge.on_ring(a1) - s.gauge.on_ring(a0),
            );
            plain_change = plain_change.max((s.realism_of(t, &x)? - base.realism_of(t, &x)?).abs());
        }
        if plain_change > 1e-3 {
            moved += 1;
        }
    }
    // at least 95 of 100 gauges must change the plain σ_x realism
    let mut sensitive = Check::new("gauge/plain-sigma_x-sensitive(>=95/100)", 0.0);
    sensitive.record(95usize.saturating_sub(moved) as f64);
    Ok(vec![invariant, enclosed, endpoint, sensitive])
}

fn jump() -> Checks {
    let mut formula = Check::new("jump/one-sided-vs-formula", 1e-10);
    let mut zero = Check::new("jump/zero-at-half-phase", 1e-12);
    let s = fig2b();
    let phi = s.phi_ab;
    let (before, after) = (FRAC_PI_2 - 1e-9, FRAC_PI_2 + 1e-9);
    let one_sided = |delta: f64| -> Result<f64, ab_realism::Error> {
        let g = OperatorPhase::tracking(&s.f, delta);
        Ok(s.realism_of(after, &s.sigma_ga(after, &g)?)?
            - s.realism_of(before, &s.sigma_ga(before, &g)?)?)
    };
    for k in 0..=200 {
        let delta = FRAC_PI_2 * k as f64 / 200.0;
        formula.diff(one_sided(delta)?, classical::realism_jump(delta, phi));
    }
    zero.diff(one_sided(phi / 2.0)?, 0.0);
    zero.diff(classical::realism_jump(phi / 2.0, phi), 0.0);
    Ok(vec![formula, zero])
}

fn chord(rng: &mut ChaCha8Rng) -> Checks {
    let mut c = Check::new("chord/adaptive-quadrature", 1e-8);
    let mut trap = Check::new("chord/trapezoid-1e5", 1e-8);
    let plain = ClassicalScenario::aharonov_bohm(PhaseProfile::Zero, PI / 5.0);
    let gauged = plain.clone().with_gauge(sample::random_gauge(rng, 3));
    for s in [&plain, &gauged] {
        let mut n = 0;
        while n < 50 {
            let t: f64 = rng.random_range(0.0..PI);
            if (t - FRAC_PI_2).abs() < 1e-3 {
                continue;
            }
            n += 1;
            c.diff(s.chord_phase_adaptive(t, 1e-12)?, s.chord_phase(t)?);
        }
    }
    for t in [PI / 4.0, 3.0 * PI / 4.0] {
        trap.diff(plain.chord_phase_numeric(t, 100_000)?, plain.chord_phase(t)?);
    }
    Ok(vec![c, trap])
}

fn closed_form(rng: &mut ChaCha8Rng) -> Checks {
    let mut ga = Check::new("closed-form/sigma_gA", 1e-10);
    let mut g = Check::new("closed-form/sigma_g", 1e-10);
    let mut z = Check::new("closed-form/sigma_z-null", 1e-12);
    for _ in 0..200 {
        let terms = rng.random_range(0..=3);
        let s = ClassicalScenario::aharonov_bohm(
            PhaseProfile::linear(rng.random_range(-1.0..1.0)),
            rng.random_range(-PI..PI),
        )
        .with_gauge(sample::random_gauge(rng, terms));
        let theta = theta_off_crossing(rng);
        let phase = OperatorPhase::tracking(&s.f, rng.random_range(0.0..2.0 * PI));
        ga.diff(
            s.realism_of(theta, &s.sigma_ga(theta, &phase)?)?,
            s.realism_sigma_ga_closed_form(theta, &phase)?,
        );
        let constant = OperatorPhase::constant(rng.random_range(0.0..2.0 * PI));
        g.diff(
            s.realism_of(theta, &classical::sigma_g(theta, &constant)?)?,
            s.realism_sigma_g_closed_form(theta, &constant)?,
        );
        z.diff(s.realism_of(theta, &classical::sigma_z())?, 0.0);
    }
    Ok(vec![ga, g, z])
}

fn fig_scenario(support: &[i64]) -> Result<QuantizedScenario, ab_realism::Error> {
    Ok(QuantizedScenario::new(
        CylinderState::even_superposition(ELL, support)?,
        2.0 * PI / 25.0,
        PhaseProfile::Zero,
    ))
}

fn quantized(rng: &mut ChaCha8Rng) -> Checks {
    let mut trace = Check::new("quantized/partial-trace-closed-form", 1e-12);
    let mut ent = Check::new("quantized/R_z=h(lambda0)=E", 1e-10);
    let mut xy = Check::new("quantized/sigma_x,y-closed-forms", 1e-10);
    let mut dec = Check::new("quantized/decomposition", 1e-9);
    let mut phases = Check::new("quantized/global-phase-invariance", 1e-12);
    let mut weak = Check::new("quantized/weak-residual-order", 0.0);
    let qubit = MeasureContext::qubit();
    let x = Observable::two_level_phase(0.0);
    let y = Observable::two_level_phase(FRAC_PI_2);
    for support in CYLINDER_SETS {
        let s = fig_scenario(support)?;
        let random_phases: Vec<GlobalPhase> = (0..s.cylinder.dim())
            .map(|_| GlobalPhase {
                offset: rng.random_range(-PI..PI),
                slope: rng.random_range(-2.0..2.0),
            })
            .collect();
        let shifted = s.clone().with_global_phases(random_phases)?;
        for k in 0..=100 {
            let theta = PI * k as f64 / 100.0;
            let joint = s.joint_state(theta)?.density();
            let rho_s = partial_trace(&joint, Subsystem::S)?;
            trace.record(rho_s.matrix().max_abs_diff(s.reduced_charge_state(theta)?.matrix()));
            let h0 = binary_entropy(s.lambda0(theta)?)?;
            ent.diff(realism(&rho_s, &classical::sigma_z(), Scope::Whole, &qubit)?, h0);
            ent.diff(entanglement_entropy(&joint, LogBase::TWO)?, h0);
            xy.diff(realism(&rho_s, &x, Scope::Whole, &qubit)?, s.realism_sigma_x_reduced(theta)?);
            xy.diff(realism(&rho_s, &y, Scope::Whole, &qubit)?, s.realism_sigma_y_reduced(theta)?);
            dec.record(decompose_irrealism(&joint, &classical::sigma_z(), &qubit)?.defect());

            let other = shifted.joint_state(theta)?.density();
            let other_s = partial_trace(&other, Subsystem::S)?;
            phases.record(other_s.matrix().max_abs_diff(rho_s.matrix()));
            let ctx = MeasureContext::unit_scale(s.joint_dim())?;
            let z_joint = realism(&joint, &classical::sigma_z(), Scope::Subsystem, &ctx)?;
            let z_other = realism(&other, &classical::sigma_z(), Scope::Subsystem, &ctx)?;
            phases.diff(z_joint, z_other);
        }
    }
    // residual of the mean-flux replacement shrinks like qK² for adjacent m
    for theta in [0.4, 1.0, 2.5] {
        let at = |qk: f64| -> Result<f64, ab_realism::Error> {
            QuantizedScenario::new(
                CylinderState::even_superposition(ELL, &[2, 3])?,
                qk,
                PhaseProfile::Zero,
            )
            .weak_interaction_residual(theta)
        };
        let ratio = at(0.02)? / at(0.01)?;
        weak.record(if (3.8..4.2).contains(&ratio) { 0.0 } else { (ratio - 4.0).abs() });
    }
    Ok(vec![trace, ent, xy, dec, phases, weak])
}

fn joint() -> Checks {
    let mut closed = Check::new("joint/Sigma-closed-form-vs-dephasing", 1e-10);
    let mut z = Check::new("joint/sigma_z-floor", 1e-10);
    let ctx = MeasureContext::unit_scale(4 * ELL + 2)?;
    let floor = ((2 * ELL + 1) as f64).ln() / ((4 * ELL + 2) as f64).ln();
    for support in CYLINDER_SETS {
        let s = fig_scenario(support)?;
        for k in 0..=60 {
            let mut theta = PI * k as f64 / 60.0;
            if k == 30 {
                theta += 1e-9;
            }
            let rho = s.joint_state(theta)?.density();
            for axis in [JointAxis::X, JointAxis::Y] {
                let op = s.sigma_joint(theta, axis)?;
                closed.diff(
                    realism(&rho, &op, Scope::Whole, &ctx)?,
                    s.realism_sigma_joint_closed_form(theta, axis)?,
                );
            }
            z.diff(realism(&rho, &classical::sigma_z(), Scope::Subsystem, &ctx)?, floor);
        }
        z.diff(s.realism_sigma_z_joint(&ctx), floor);
        z.diff(s.realism_sigma_z_joint(&MeasureContext::qubit()), 0.0);
        for axis in [JointAxis::X, JointAxis::Y] {
            for branch in [Branch::Pre, Branch::Post] {
                let theta = if branch == Branch::Pre { 1.0 } else { 2.0 };
                let rho = s.joint_state(theta)?.density();
                let op = s.sigma_joint_on(theta, axis, branch)?;
                closed.diff(
                    realism(&rho, &op, Scope::Whole, &ctx)?,
                    s.realism_sigma_joint_closed_form_on(axis, branch)?,
                );
            }
        }
    }
    Ok(vec![closed, z])
}

fn classical_limit() -> Checks {
    let mut c = Check::new("classical-limit/eigenstate-cylinders", 1e-10);
    let f = PhaseProfile::linear(1.0 / 3.0);
    let qk = 2.0 * PI / 25.0;
    let qubit = MeasureContext::qubit();
    let x = Observable::two_level_phase(0.0);
    let y = Observable::two_level_phase(FRAC_PI_2);
    for m in -3..=3 {
        let q = QuantizedScenario::new(CylinderState::eigenstate(ELL, m)?, qk, f.clone());
        let Some(cl) = q.classical_equivalent() else {
            c.record(f64::INFINITY);
            continue;
        };
        let ga = OperatorPhase::tracking(&f, 0.0);
        for k in 0..=100 {
            let mut theta = PI * k as f64 / 100.0;
            if k == 50 {
                theta += 1e-9;
            }
            let rho_q = q.reduced_charge_state(theta)?;
            let rho_c = cl.charge_state(theta)?.density();
            c.record(rho_q.matrix().max_abs_diff(rho_c.matrix()));
            c.diff(q.lambda0(theta)?, 0.0);
            c.diff(q.realism_sigma_x_reduced(theta)?, cl.realism_of(theta, &x)?);
            c.diff(q.realism_sigma_y_reduced(theta)?, cl.realism_of(theta, &y)?);
            c.diff(
                realism(&rho_q, &q.sigma_xa_branch(theta, m)?, Scope::Whole, &qubit)?,
                cl.realism_sigma_ga_closed_form(theta, &ga)?,
            );
            c.diff(q.weak_interaction_residual(theta)?, 0.0);
        }
    }
    Ok(vec![c])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_a_config_error() {
        assert!(matches!(run("nope", 1), Err(CliError::Config(_))));
    }

    #[test]
    fn jump_suite_passes() {
        let a = run("jump", 7).unwrap();
        assert!(a.iter().all(Check::passed));
    }
}
