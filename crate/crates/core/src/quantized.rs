//! Interferometer whose flux line is the angular momentum of a quantized
//! cylinder, `Φ_B = K L_z`.
//!
//! The cylinder lives in the truncated space spanned by `|m⟩`,
//! `m ∈ {-ℓ, …, ℓ}`. The charge picks up the AB phase `qK·m·θ/π` on the
//! branch `|m⟩`, so charge and cylinder become entangled unless the
//! cylinder is in an `L_z` eigenstate. Joint states use the split
//! `(2, 2ℓ+1)` with basis index `s·(2ℓ+1) + (m + ℓ)`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::classical::{
    check_theta, chord_fraction, Branch, ClassicalScenario, PhaseProfile,
};
use crate::entropy::{binary_entropy, binary_entropy_base, shannon_entropy, LogBase};
use crate::error::{Error, Result};
use crate::measures::{MeasureContext, Observable};
use crate::state::{DensityMatrix, ProbVector, PureState, Split};

const NORM_TOL: f64 = 1e-10;

/// Normalized cylinder state `Σ c_m |m⟩` over `m ∈ {-ℓ, …, ℓ}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CylinderState {
    ell: usize,
    coeffs: Vec<Complex64>,
}

impl CylinderState {
    /// `coeffs[k]` is the amplitude of `m = k - ℓ`.
    pub fn new(ell: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != 2 * ell + 1 {
            return Err(Error::InvalidCylinder(format!(
                "expected {} coefficients for cutoff {ell}, got {}",
                2 * ell + 1,
                coeffs.len()
            )));
        }
        let norm: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidCylinder(format!(
                "squared norm {norm} differs from 1"
            )));
        }
        Ok(Self { ell, coeffs })
    }

    /// Equal real amplitudes on the listed `m` values.
    pub fn even_superposition(ell: usize, support: &[i64]) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::InvalidCylinder("empty support".into()));
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * ell + 1];
        let amp = 1.0 / (support.len() as f64).sqrt();
        for &m in support {
            let k = index_of(ell, m)?;
            if coeffs[k].norm_sqr() > 0.0 {
                return Err(Error::InvalidCylinder(format!("m = {m} listed twice")));
            }
            coeffs[k] = Complex64::new(amp, 0.0);
        }
        Self::new(ell, coeffs)
    }

    /// `|m⟩`.
    pub fn eigenstate(ell: usize, m: i64) -> Result<Self> {
        Self::even_superposition(ell, &[m])
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `c_m`, zero outside the cutoff.
    pub fn coeff(&self, m: i64) -> Complex64 {
        index_of(self.ell, m)
            .map(|k| self.coeffs[k])
            .unwrap_or_default()
    }

    /// All `m` values in ascending order.
    pub fn ms(&self) -> impl Iterator<Item = i64> + Clone {
        let l = self.ell as i64;
        -l..=l
    }

    /// `(m, |c_m|²)` for every `m` with nonzero weight.
    pub fn weights(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.ms()
            .zip(&self.coeffs)
            .map(|(m, c)| (m, c.norm_sqr()))
            .filter(|&(_, p)| p > 0.0)
    }

    /// `⟨L_z⟩/ħ`.
    pub fn mean_m(&self) -> f64 {
        self.weights().map(|(m, p)| m as f64 * p).sum()
    }

    /// The `m` of an `L_z` eigenstate, if this is one.
    pub fn as_eigenstate(&self) -> Option<i64> {
        let mut w = self.weights();
        match (w.next(), w.next()) {
            (Some((m, _)), None) => Some(m),
            _ => None,
        }
    }

    /// `(|c_m|²)` over all `m`.
    pub fn probabilities(&self) -> ProbVector {
        ProbVector::new(self.coeffs.iter().map(|c| c.norm_sqr()).collect())
            .expect("coefficients are normalized")
    }
}

fn index_of(ell: usize, m: i64) -> Result<usize> {
    let l = ell as i64;
    if m < -l || m > l {
        return Err(Error::InvalidCylinder(format!(
            "m = {m} outside the cutoff {ell}"
        )));
    }
    Ok((m + l) as usize)
}

/// Branch-dependent global phase `g_m(θ) = offset + slope·θ`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GlobalPhase {
    pub offset: f64,
    pub slope: f64,
}

impl GlobalPhase {
    pub fn eval(&self, theta: f64) -> f64 {
        self.offset + self.slope * theta
    }
}

/// Which transverse axis a joint observable measures on each branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointAxis {
    X,
    Y,
}

impl JointAxis {
    fn offset(self) -> f64 {
        match self {
            Self::X => 0.0,
            Self::Y => FRAC_PI_2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantizedScenario {
    pub cylinder: CylinderState,
    /// AB phase per unit of `m`.
    pub qk: f64,
    pub f: PhaseProfile,
    /// One entry per `m` (ascending), or empty for `g_m ≡ 0`.
    pub global_phases: Vec<GlobalPhase>,
}

impl QuantizedScenario {
    pub fn new(cylinder: CylinderState, qk: f64, f: PhaseProfile) -> Self {
        Self {
            cylinder,
            qk,
            f,
            global_phases: Vec::new(),
        }
    }

    pub fn with_global_phases(mut self, phases: Vec<GlobalPhase>) -> Result<Self> {
        if !phases.is_empty() && phases.len() != self.cylinder.dim() {
            return Err(Error::InvalidCylinder(format!(
                "{} global phases for {} branches",
                phases.len(),
                self.cylinder.dim()
            )));
        }
        self.global_phases = phases;
        Ok(self)
    }

    pub fn split(&self) -> Split {
        Split {
            s: 2,
            r: self.cylinder.dim(),
        }
    }

    /// `4ℓ + 2`, the joint dimension.
    pub fn joint_dim(&self) -> usize {
        2 * self.cylinder.dim()
    }

    fn global_phase(&self, k: usize, theta: f64) -> f64 {
        self.global_phases
            .get(k)
            .map(|g| g.eval(theta))
            .unwrap_or(0.0)
    }

    /// Relative phase of the charge on branch `m`: `f(θ) + qK·m·θ/π`.
    pub fn branch_phase(&self, theta: f64, m: i64) -> f64 {
        self.f.eval(theta) + self.qk * m as f64 * theta / PI
    }

    /// `Σ_m c_m e^{ig_m}/√2 (|0⟩ + e^{i(f + qK m θ/π)}|1⟩) ⊗ |m⟩`.
    pub fn joint_state(&self, theta: f64) -> Result<PureState> {
        check_theta(theta)?;
        let r = self.cylinder.dim();
        let mut amps = vec![Complex64::new(0.0, 0.0); 2 * r];
        for (k, m) in self.cylinder.ms().enumerate() {
            let c = self.cylinder.coeffs[k]
                * Complex64::from_polar(FRAC_1_SQRT_2, self.global_phase(k, theta));
            amps[k] = c;
            amps[r + k] = c * Complex64::from_polar(1.0, self.branch_phase(theta, m));
        }
        PureState::new(amps)?.with_split(self.split())
    }

    /// `Σ |c_m|² e^{i(f + qK m θ/π)}`.
    fn coherent_sum(&self, theta: f64) -> Complex64 {
        self.cylinder
            .weights()
            .map(|(m, p)| Complex64::from_polar(p, self.branch_phase(theta, m)))
            .sum()
    }

    /// Charge state after tracing out the cylinder, built from its closed form.
    pub fn reduced_charge_state(&self, theta: f64) -> Result<DensityMatrix> {
        check_theta(theta)?;
        let z = self.coherent_sum(theta) * 0.5;
        let half = Complex64::new(0.5, 0.0);
        DensityMatrix::new(crate::linalg::ComplexMatrix::from_row_major(vec![
            half,
            z.conj(),
            z,
            half,
        ])?)
    }

    /// Smaller eigenvalue `½(1 - |Σ |c_m|² e^{-i(f + qK m θ/π)}|)` of the
    /// reduced charge state.
    pub fn lambda0(&self, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        Ok(0.5 * (1.0 - self.coherent_sum(theta).norm().min(1.0)))
    }

    /// `ℜ_{σx}(ρ_S) = 1 + h(λ₀) - h(λ)` in bits, with
    /// `λ = ½(1 - Σ |c_m|² cos(f + qK m θ/π))`.
    pub fn realism_sigma_x_reduced(&self, theta: f64) -> Result<f64> {
        let l0 = self.lambda0(theta)?;
        let l = 0.5 * (1.0 - self.coherent_sum(theta).re);
        Ok(1.0 + binary_entropy(l0)? - binary_entropy(l.clamp(0.0, 1.0))?)
    }

    /// Same as [`Self::realism_sigma_x_reduced`] with sines in place of cosines.
    pub fn realism_sigma_y_reduced(&self, theta: f64) -> Result<f64> {
        let l0 = self.lambda0(theta)?;
        let l = 0.5 * (1.0 - self.coherent_sum(theta).im);
        Ok(1.0 + binary_entropy(l0)? - binary_entropy(l.clamp(0.0, 1.0))?)
    }

    /// Phase of `σ_x^{A_m}`: `f(θ) - qK m (πΘ(θ - π/2) - θ)/π`.
    fn branch_operator_phase(&self, theta: f64, m: i64, branch: Branch) -> f64 {
        self.f.eval(theta) - self.qk * m as f64 * chord_fraction(theta, branch)
    }

    /// Two-level operator adapted to the vector potential of branch `m`.
    pub fn sigma_xa_branch(&self, theta: f64, m: i64) -> Result<Observable> {
        check_theta(theta)?;
        Ok(Observable::two_level_phase(self.branch_operator_phase(
            theta,
            m,
            Branch::at(theta),
        )))
    }

    /// `Σ_m σ^{A_m} ⊗ |m⟩⟨m|` with the side of the crossing chosen by `θ`.
    pub fn sigma_joint(&self, theta: f64, axis: JointAxis) -> Result<Observable> {
        check_theta(theta)?;
        self.sigma_joint_on(theta, axis, Branch::at(theta))
    }

    /// Joint operator on an explicit side of the crossing.
    ///
    /// The projectors are kept rank one per branch even though `±1` is
    /// degenerate across branches, so dephasing acts block by block.
    pub fn sigma_joint_on(&self, theta: f64, axis: JointAxis, branch: Branch) -> Result<Observable> {
        check_theta(theta)?;
        let r = self.cylinder.dim();
        let n = 2 * r;
        let mut eigenvalues = Vec::with_capacity(n);
        let mut basis = Vec::with_capacity(n);
        for (k, m) in self.cylinder.ms().enumerate() {
            let phase = self.branch_operator_phase(theta, m, branch) + axis.offset();
            let e = Complex64::from_polar(FRAC_1_SQRT_2, phase);
            for sign in [1.0, -1.0] {
                let mut v = vec![Complex64::new(0.0, 0.0); n];
                v[k] = Complex64::new(FRAC_1_SQRT_2, 0.0);
                v[r + k] = e * sign;
                eigenvalues.push(sign);
                basis.push(v);
            }
        }
        Observable::from_basis(&eigenvalues, &basis)
    }

    /// `1 - h(C) - Σ |c_m|² h(λ_m)` in base and normalization `4ℓ+2`, with
    /// `λ_m = (1 + cos(qK m Θ(θ - π/2) - δ))/2`, `δ = 0` for x and `π/2` for y.
    pub fn realism_sigma_joint_closed_form(&self, theta: f64, axis: JointAxis) -> Result<f64> {
        check_theta(theta)?;
        self.realism_sigma_joint_closed_form_on(axis, Branch::at(theta))
    }

    /// One-sided closed form. The value is constant on each side.
    pub fn realism_sigma_joint_closed_form_on(&self, axis: JointAxis, branch: Branch) -> Result<f64> {
        let n = self.joint_dim();
        let base = LogBase::new(n as f64)?;
        let h_c = shannon_entropy(&self.cylinder.probabilities(), base);
        let mut branch_sum = 0.0;
        for (m, p) in self.cylinder.weights() {
            let mismatch = self.qk * m as f64 * branch.step() - axis.offset();
            branch_sum += p * binary_entropy_base((1.0 + mismatch.cos()) / 2.0, base)?;
        }
        Ok(1.0 - h_c - branch_sum)
    }

    /// `ℜ_{σz ⊗ 𝟙}` of the joint state: `log(N) - log 2` for every `θ`.
    pub fn realism_sigma_z_joint(&self, ctx: &MeasureContext) -> f64 {
        ctx.max_value() - ctx.base.log(2.0)
    }

    /// `|Σ |c_m|² e^{iqK m X} - e^{iqK⟨m⟩X}|` with `X = (πΘ(θ - π/2) - θ)/π`,
    /// the error of replacing the cylinder by its mean flux.
    pub fn weak_interaction_residual(&self, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        let x = chord_fraction(theta, Branch::at(theta));
        let exact: Complex64 = self
            .cylinder
            .weights()
            .map(|(m, p)| Complex64::from_polar(p, self.qk * m as f64 * x))
            .sum();
        let mean = Complex64::from_polar(1.0, self.qk * self.cylinder.mean_m() * x);
        Ok((exact - mean).norm())
    }

    /// For an eigenstate cylinder, the classical scenario with
    /// `φ_AB = qK·m`.
    pub fn classical_equivalent(&self) -> Option<ClassicalScenario> {
        self.cylinder
            .as_eigenstate()
            .map(|m| ClassicalScenario::aharonov_bohm(self.f.clone(), self.qk * m as f64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{realism, Scope};
    use crate::state::{partial_trace, Subsystem};

    fn fig3(support: &[i64]) -> QuantizedScenario {
        QuantizedScenario::new(
            CylinderState::even_superposition(6, support).unwrap(),
            2.0 * PI / 25.0,
            PhaseProfile::Zero,
        )
    }

    #[test]
    fn cylinder_validation() {
        assert!(CylinderState::new(1, vec![Complex64::new(1.0, 0.0); 2]).is_err());
        assert!(CylinderState::new(0, vec![Complex64::new(0.5, 0.0)]).is_err());
        assert!(CylinderState::eigenstate(2, 3).is_err());
        assert!(CylinderState::even_superposition(2, &[1, 1]).is_err());
        let c = CylinderState::even_superposition(6, &[2, 3]).unwrap();
        assert!((c.mean_m() - 2.5).abs() < 1e-15);
        assert_eq!(c.as_eigenstate(), None);
        assert_eq!(CylinderState::eigenstate(3, -2).unwrap().as_eigenstate(), Some(-2));
    }

    #[test]
    fn joint_state_at_zero_is_product() {
        let s = fig3(&[2, 3]);
        let psi = s.joint_state(0.0).unwrap();
        let rho_s = partial_trace(&psi.density(), Subsystem::S).unwrap();
        assert!((rho_s.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn branch_phases_at_pi() {
        let s = fig3(&[2, 3]);
        let psi = s.joint_state(PI).unwrap();
        let a = psi.amplitudes();
        let r = 13;
        let k2 = 8;
        let k3 = 9;
        let p2 = (a[r + k2] / a[k2]).arg();
        let p3 = (a[r + k3] / a[k3]).arg();
        assert!((p2 - 4.0 * PI / 25.0).abs() < 1e-14);
        assert!((p3 - 6.0 * PI / 25.0).abs() < 1e-14);
    }

    #[test]
    fn reduced_state_matches_partial_trace() {
        let s = fig3(&[0, 5]).with_global_phases(vec![
            GlobalPhase { offset: 0.3, slope: -1.1 };
            13
        ]);
        let s = s.unwrap();
        for theta in [0.0, 0.4, 1.7, PI] {
            let traced = partial_trace(&s.joint_state(theta).unwrap().density(), Subsystem::S).unwrap();
            let closed = s.reduced_charge_state(theta).unwrap();
            assert!(traced.matrix().max_abs_diff(closed.matrix()) < 1e-12);
        }
    }

    #[test]
    fn lambda0_two_term_value() {
        let s = fig3(&[2, 3]);
        let expected = (1.0 - (PI / 25.0).cos()) / 2.0;
        assert!((s.lambda0(PI).unwrap() - expected).abs() < 1e-15);
        let e = fig3(&[4]);
        assert!(e.lambda0(2.2).unwrap().abs() < 1e-15);
    }

    #[test]
    fn reduced_closed_forms_match_dephasing() {
        let s = fig3(&[-1, 6]);
        let ctx = MeasureContext::qubit();
        for theta in [0.0, 0.9, 2.3, PI] {
            let rho = s.reduced_charge_state(theta).unwrap();
            let x = realism(&rho, &Observable::two_level_phase(0.0), Scope::Whole, &ctx).unwrap();
            let y = realism(&rho, &Observable::two_level_phase(FRAC_PI_2), Scope::Whole, &ctx).unwrap();
            assert!((x - s.realism_sigma_x_reduced(theta).unwrap()).abs() < 1e-10);
            assert!((y - s.realism_sigma_y_reduced(theta).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn branch_zero_operator_tracks_f() {
        let s = QuantizedScenario::new(
            CylinderState::eigenstate(2, 1).unwrap(),
            0.7,
            PhaseProfile::linear(0.4),
        );
        let op = s.sigma_xa_branch(1.1, 0).unwrap();
        let g = Observable::two_level_phase(0.44);
        assert!(op.matrix().max_abs_diff(g.matrix()) < 1e-15);
    }

    #[test]
    fn joint_operator_is_involutory() {
        let s = fig3(&[2, 3]);
        for axis in [JointAxis::X, JointAxis::Y] {
            let o = s.sigma_joint(2.0, axis).unwrap();
            let sq = o.matrix() * o.matrix();
            assert!(sq.max_abs_diff(&crate::linalg::ComplexMatrix::identity(26)) < 1e-12);
            assert_eq!(o.spectrum().len(), 26);
        }
    }

    #[test]
    fn joint_closed_form_matches_dephasing() {
        let ctx = MeasureContext::unit_scale(26).unwrap();
        for support in [&[2, 3][..], &[1, 4], &[0, 5], &[-1, 6], &[3]] {
            let s = fig3(support);
            for theta in [0.3, 1.2, 2.0, 3.0] {
                let rho = s.joint_state(theta).unwrap().density();
                for axis in [JointAxis::X, JointAxis::Y] {
                    let o = s.sigma_joint(theta, axis).unwrap();
                    let direct = realism(&rho, &o, Scope::Whole, &ctx).unwrap();
                    let closed = s.realism_sigma_joint_closed_form(theta, axis).unwrap();
                    assert!((direct - closed).abs() < 1e-10, "{support:?} {theta} {axis:?}");
                }
            }
        }
    }

    #[test]
    fn sigma_z_joint_values() {
        let s = fig3(&[2, 3]);
        let v = s.realism_sigma_z_joint(&MeasureContext::unit_scale(26).unwrap());
        assert!((v - 13f64.ln() / 26f64.ln()).abs() < 1e-15);
        assert_eq!(s.realism_sigma_z_joint(&MeasureContext::qubit()), 0.0);
    }

    #[test]
    fn weak_residual_vanishes_for_eigenstates() {
        let s = fig3(&[3]);
        for theta in [0.2, 1.5, 2.9] {
            assert!(s.weak_interaction_residual(theta).unwrap() < 1e-15);
        }
        assert!(s.classical_equivalent().is_some());
        assert!(fig3(&[2, 3]).classical_equivalent().is_none());
    }
}
