//! Two-arm interferometer with an optional classical flux line at its centre.
//!
//! Geometry: the packets travel on the unit ring, entering at angle `-π/2`.
//! After each has moved through `θ`, the left packet (`|0⟩`) sits at
//! `α₀ = -π/2 - θ` and the right packet (`|1⟩`) at `α₁ = -π/2 + θ`; they
//! recombine at `θ = π`. The baseline vector potential is `A = Φ_B/(2πr) θ̂`,
//! and other gauges are reached by adding the gradient of a
//! [`GaugeChoice`].
//!
//! The chord `τ(θ)` joining packet 1 to packet 0 passes below the flux line
//! for `θ < π/2` and above it for `θ > π/2`. The flux enclosed by
//! `τ + γ₁ - γ₀` therefore jumps from 0 to `Φ_B` at `θ = π/2`; the crossing
//! point itself is counted as post-crossing (`Θ(0) = 1`).

mod gauge;
mod profile;

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

pub use gauge::GaugeChoice;
pub use profile::{OperatorPhase, PhaseProfile, TabulatedProfile};

use crate::entropy::binary_entropy;
use crate::error::{Error, Result};
use crate::measures::{realism, MeasureContext, Observable, Scope};
use crate::state::PureState;

/// Half-width of the window around `π/2` in which the numeric chord
/// integral refuses to run.
pub const CHORD_EXCLUSION: f64 = 1e-6;

/// Side of the chord crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Pre,
    Post,
}

impl Branch {
    /// `Pre` for `θ < π/2`, `Post` otherwise.
    pub fn at(theta: f64) -> Self {
        if theta < FRAC_PI_2 {
            Self::Pre
        } else {
            Self::Post
        }
    }

    /// `Θ(θ - π/2)` on this side.
    pub fn step(self) -> f64 {
        match self {
            Self::Pre => 0.0,
            Self::Post => 1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pre => "pre",
            Self::Post => "post",
        }
    }
}

pub fn check_theta(theta: f64) -> Result<()> {
    if (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(Error::ThetaOutOfRange(theta))
    }
}

/// Ring angles `(α₀, α₁)` of the two packets.
pub fn packet_angles(theta: f64) -> (f64, f64) {
    (-FRAC_PI_2 - theta, -FRAC_PI_2 + theta)
}

/// `(πΘ(θ - π/2) - θ)/π`: the chord integral of the baseline potential per
/// unit of AB phase.
pub fn chord_fraction(theta: f64, branch: Branch) -> f64 {
    (PI * branch.step() - theta) / PI
}

/// Pauli z, whose eigenstates are the which-arm states.
pub fn sigma_z() -> Observable {
    Observable::pauli_z()
}

/// `σ_g(θ) = e^{-ig(θ)}|0⟩⟨1| + e^{ig(θ)}|1⟩⟨0|`.
pub fn sigma_g(theta: f64, g: &OperatorPhase) -> Result<Observable> {
    check_theta(theta)?;
    Ok(Observable::two_level_phase(g.eval(theta)))
}

/// `1 - h((1 + cos φ)/2)`: realism of a two-level phase operator on an
/// equal-weight superposition whose relative phase differs from the
/// operator's by `φ`.
pub fn phase_mismatch_realism(mismatch: f64) -> f64 {
    1.0 - binary_entropy((1.0 + mismatch.cos()) / 2.0).expect("cosine keeps lambda in [0, 1]")
}

/// Change of realism of `σ^A_{f+δ}` across the crossing:
/// `h((1 + cos δ)/2) - h((1 + cos(φ_AB - δ))/2)`.
pub fn realism_jump(delta: f64, phi_ab: f64) -> f64 {
    let h = |x: f64| binary_entropy((1.0 + x.cos()) / 2.0).expect("lambda in [0, 1]");
    h(delta) - h(phi_ab - delta)
}

/// Configuration of the (possibly flux-threaded) interferometer.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ClassicalScenario {
    pub f: PhaseProfile,
    /// `φ_AB = qΦ_B/ħ` in radians.
    pub phi_ab: f64,
    pub gauge: GaugeChoice,
}

impl ClassicalScenario {
    /// Interferometer without flux.
    pub fn standard(f: PhaseProfile) -> Self {
        Self {
            f,
            phi_ab: 0.0,
            gauge: GaugeChoice::zero(),
        }
    }

    /// Flux-threaded interferometer in the baseline gauge.
    pub fn aharonov_bohm(f: PhaseProfile, phi_ab: f64) -> Self {
        Self {
            f,
            phi_ab,
            gauge: GaugeChoice::zero(),
        }
    }

    pub fn with_gauge(mut self, gauge: GaugeChoice) -> Self {
        self.gauge = gauge;
        self
    }

    /// `χ(α₁) - χ(α₀)`.
    fn gauge_endpoint_difference(&self, theta: f64) -> f64 {
        let (a0, a1) = packet_angles(theta);
        self.gauge.on_ring(a1) - self.gauge.on_ring(a0)
    }

    /// AB phase difference `w(θ)` picked up along the arms (gauge dependent).
    pub fn arm_phase(&self, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        Ok(self.phi_ab * theta / PI + self.gauge_endpoint_difference(theta))
    }

    /// Phase `(q/ħ)∫_τ A·ds` along the chord from packet 1 to packet 0.
    pub fn chord_phase(&self, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        Ok(self.chord_phase_on(theta, Branch::at(theta)))
    }

    /// Chord phase evaluated as the one-sided limit on `branch`.
    pub fn chord_phase_on(&self, theta: f64, branch: Branch) -> f64 {
        self.phi_ab * chord_fraction(theta, branch) - self.gauge_endpoint_difference(theta)
    }

    /// Integrand of the chord integral in the parameter `t ∈ [0, 1]`
    /// running from packet 1 to packet 0.
    fn chord_integrand(&self, theta: f64) -> Result<impl Fn(f64) -> f64 + '_> {
        check_theta(theta)?;
        if (theta - FRAC_PI_2).abs() < CHORD_EXCLUSION {
            return Err(Error::ChordThroughSingularity(theta));
        }
        let (a0, a1) = packet_angles(theta);
        let (x1, y1) = (a1.cos(), a1.sin());
        let (dx, dy) = (a0.cos() - x1, a0.sin() - y1);
        Ok(move |t: f64| {
            let (x, y) = (x1 + t * dx, y1 + t * dy);
            let r2 = x * x + y * y;
            // A·v with A = φ/(2π) (-y, x)/r²
            let vortex = self.phi_ab / (2.0 * PI) * (x * dy - y * dx) / r2;
            let (gx, gy) = self.gauge.gradient(x, y);
            vortex + gx * dx + gy * dy
        })
    }

    /// Trapezoidal quadrature of `(q/ħ)(A + ∇χ)·ds` along the straight chord
    /// with `n_points` panels.
    pub fn chord_phase_numeric(&self, theta: f64, n_points: usize) -> Result<f64> {
        let integrand = self.chord_integrand(theta)?;
        let n = n_points.max(1);
        let h = 1.0 / n as f64;
        let inner: f64 = (1..n).map(|k| integrand(k as f64 * h)).sum();
        Ok(h * (0.5 * integrand(0.0) + inner + 0.5 * integrand(1.0)))
    }

    /// Adaptive Simpson quadrature of the same integral to absolute
    /// tolerance `tol`.
    pub fn chord_phase_adaptive(&self, theta: f64, tol: f64) -> Result<f64> {
        let integrand = self.chord_integrand(theta)?;
        Ok(adaptive_simpson(&integrand, 0.0, 1.0, tol))
    }

    /// `q Φ_enc/ħ`, the AB phase enclosed by `τ + γ₁ - γ₀`.
    pub fn enclosed_phase(&self, theta: f64) -> Result<f64> {
        Ok(self.arm_phase(theta)? + self.chord_phase(theta)?)
    }

    /// `(|0⟩ + e^{i[f(θ) + w(θ)]}|1⟩)/√2`.
    pub fn charge_state(&self, theta: f64) -> Result<PureState> {
        let phase = self.f.eval(theta) + self.arm_phase(theta)?;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        PureState::new(vec![
            Complex64::new(h, 0.0),
            Complex64::from_polar(h, phase),
        ])
    }

    /// `σ^A_g(θ)`: the two-level operator with phase `g(θ) - (q/ħ)∫_τ A·ds`.
    pub fn sigma_ga(&self, theta: f64, g: &OperatorPhase) -> Result<Observable> {
        Ok(Observable::two_level_phase(
            g.eval(theta) - self.chord_phase(theta)?,
        ))
    }

    /// `σ^A_g` using the one-sided chord phase on `branch`.
    pub fn sigma_ga_on(&self, theta: f64, g: &OperatorPhase, branch: Branch) -> Result<Observable> {
        check_theta(theta)?;
        Ok(Observable::two_level_phase(
            g.eval(theta) - self.chord_phase_on(theta, branch),
        ))
    }

    /// Realism (bits, qubit normalization) of any qubit observable on the
    /// charge state, through the dephasing map.
    pub fn realism_of(&self, theta: f64, obs: &Observable) -> Result<f64> {
        let rho = self.charge_state(theta)?.density();
        realism(&rho, obs, Scope::Whole, &MeasureContext::qubit())
    }

    /// Closed form `1 - h(λ)`, `λ = {1 + cos[f - g + φ_AB Θ(θ - π/2)]}/2`, for
    /// `σ^A_g`. Gauge independent.
    pub fn realism_sigma_ga_closed_form(&self, theta: f64, g: &OperatorPhase) -> Result<f64> {
        check_theta(theta)?;
        Ok(self.realism_sigma_ga_closed_form_on(theta, g, Branch::at(theta)))
    }

    /// One-sided closed form on `branch`.
    pub fn realism_sigma_ga_closed_form_on(
        &self,
        theta: f64,
        g: &OperatorPhase,
        branch: Branch,
    ) -> f64 {
        phase_mismatch_realism(self.f.eval(theta) - g.eval(theta) + self.phi_ab * branch.step())
    }

    /// Closed form `1 - h(λ)`, `λ = {1 + cos[f + w - g]}/2`, for the plain
    /// `σ_g`. Depends on the gauge through `w`.
    pub fn realism_sigma_g_closed_form(&self, theta: f64, g: &OperatorPhase) -> Result<f64> {
        Ok(phase_mismatch_realism(
            self.f.eval(theta) + self.arm_phase(theta)? - g.eval(theta),
        ))
    }
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }

    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(phi: f64) -> ClassicalScenario {
        ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), phi)
    }

    #[test]
    fn arm_phase_endpoints() {
        let s = ab(PI / 5.0).with_gauge(GaugeChoice::new(vec![0.4, 0.2], vec![-0.3]));
        assert!(s.arm_phase(0.0).unwrap().abs() < 1e-15);
        let plain = ab(PI / 5.0);
        assert!((plain.arm_phase(PI).unwrap() - PI / 5.0).abs() < 1e-15);
        assert!(s.arm_phase(-0.1).is_err());
        assert!(s.arm_phase(PI + 1e-9).is_err());
    }

    #[test]
    fn chord_phase_values() {
        let s = ab(PI / 5.0);
        assert_eq!(s.chord_phase(0.0).unwrap(), 0.0);
        assert!(s.chord_phase(PI).unwrap().abs() < 1e-15);
        assert!((s.chord_phase(PI / 4.0).unwrap() + PI / 20.0).abs() < 1e-15);
        assert!((s.chord_phase(3.0 * PI / 4.0).unwrap() - PI / 20.0).abs() < 1e-15);
        // Θ(0) = 1
        assert!((s.chord_phase(FRAC_PI_2).unwrap() - PI / 10.0).abs() < 1e-15);
    }

    #[test]
    fn numeric_chord_rejects_crossing() {
        let s = ab(1.0);
        assert!(matches!(
            s.chord_phase_numeric(FRAC_PI_2, 1000),
            Err(Error::ChordThroughSingularity(_))
        ));
    }

    #[test]
    fn charge_state_phases() {
        let s0 = ClassicalScenario::standard(PhaseProfile::Zero);
        let plus = s0.charge_state(2.0).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((plus.amplitudes()[1] - Complex64::new(h, 0.0)).norm() < 1e-15);

        let s = ab(PI / 5.0);
        let psi = s.charge_state(PI).unwrap();
        let rel = (psi.amplitudes()[1] / psi.amplitudes()[0]).arg();
        assert!((rel - (PI / 3.0 + PI / 5.0)).abs() < 1e-14);
    }

    #[test]
    fn sigma_g_special_cases() {
        let x = sigma_g(0.7, &OperatorPhase::constant(0.0)).unwrap();
        let expected =
            crate::linalg::ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert!(x.matrix().max_abs_diff(&expected) < 1e-15);
        let y = sigma_g(0.7, &OperatorPhase::constant(FRAC_PI_2)).unwrap();
        assert!((y.matrix()[(0, 1)] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn sigma_ga_pre_crossing_phase() {
        let s = ab(PI / 5.0);
        let theta = 0.6;
        let g = OperatorPhase::tracking(&s.f, 0.0);
        let op = s.sigma_ga(theta, &g).unwrap();
        let phase = op.matrix()[(1, 0)].arg();
        assert!((phase - (theta / 3.0 + PI / 5.0 * theta / PI)).abs() < 1e-14);
    }

    #[test]
    fn closed_form_values() {
        let s = ab(PI / 5.0);
        let gx = OperatorPhase::tracking(&s.f, 0.0);
        let gy = OperatorPhase::tracking(&s.f, FRAC_PI_2);
        assert!((s.realism_sigma_ga_closed_form(1.0, &gx).unwrap() - 1.0).abs() < 1e-15);
        assert!((s.realism_sigma_ga_closed_form(2.0, &gx).unwrap() - 0.5454).abs() < 1e-3);
        assert!(s.realism_sigma_ga_closed_form(1.0, &gy).unwrap().abs() < 1e-15);
        assert!((s.realism_sigma_ga_closed_form(2.0, &gy).unwrap() - 0.2661).abs() < 1e-3);
    }

    #[test]
    fn jump_formula() {
        let phi = PI / 5.0;
        assert!(realism_jump(phi / 2.0, phi).abs() < 1e-12);
        assert!((realism_jump(0.0, phi) + 0.4546).abs() < 1e-3);
        for d in [0.0, 0.3, 1.0, FRAC_PI_2] {
            assert_eq!(realism_jump(d, 0.0), 0.0);
        }
        for x in [0.01, 0.1, 0.25] {
            let a = realism_jump(phi / 2.0 + x, phi);
            let b = realism_jump(phi / 2.0 - x, phi);
            assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn numeric_chord_matches_heaviside_form() {
        let s = ab(PI / 5.0).with_gauge(GaugeChoice::new(vec![0.2, -0.1], vec![0.3]));
        for theta in [0.2, PI / 4.0, 1.2, 1.9, 3.0 * PI / 4.0, 3.0] {
            let exact = s.chord_phase(theta).unwrap();
            assert!((s.chord_phase_adaptive(theta, 1e-12).unwrap() - exact).abs() < 1e-10);
            assert!((s.chord_phase_numeric(theta, 100_000).unwrap() - exact).abs() < 1e-8);
        }
    }

    #[test]
    fn trapezoid_is_second_order() {
        let s = ab(1.0);
        let theta = PI / 3.0;
        let exact = s.chord_phase(theta).unwrap();
        let e1 = (s.chord_phase_numeric(theta, 200).unwrap() - exact).abs();
        let e2 = (s.chord_phase_numeric(theta, 400).unwrap() - exact).abs();
        let ratio = e1 / e2;
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn branch_convention() {
        assert_eq!(Branch::at(FRAC_PI_2 - 1e-12), Branch::Pre);
        assert_eq!(Branch::at(FRAC_PI_2), Branch::Post);
    }
}
