//! Complementarity bounds on pairs of realisms and the uncertainty of
//! involutory observables.

use num_complex::Complex64;

use crate::entropy::von_neumann_entropy;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::{partial_trace, DensityMatrix, Subsystem};

use super::observable::Observable;
use super::realism::{realism, MeasureContext, Scope};

/// Tolerance on `|⟨o_j|o'_k⟩|² = 1/d` for recognizing unbiased bases.
pub const MUB_TOL: f64 = 1e-8;
/// Tolerance on `O² = 𝟙`.
pub const INVOLUTION_TOL: f64 = 1e-10;

/// Both sides of the complementarity relations for an observable pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementarityReport {
    /// `ℜ_O(ρ) + ℜ_O'(ρ)`.
    pub lhs: f64,
    /// `log d + S(ρ_S) - I_{S:R}(ρ)`, present only for mutually unbiased pairs.
    pub rhs_mub: Option<f64>,
    /// `log(d² c) + S(ρ) + S(ρ_R)`.
    pub rhs_general: f64,
    /// `c = max_{j,k} |⟨o_j|o'_k⟩|²`.
    pub overlap: f64,
}

impl ComplementarityReport {
    pub fn mub_slack(&self) -> Option<f64> {
        self.rhs_mub.map(|r| r - self.lhs)
    }

    pub fn general_slack(&self) -> f64 {
        self.rhs_general - self.lhs
    }

    /// Every applicable bound holds within `tol`.
    pub fn holds(&self, tol: f64) -> bool {
        self.general_slack() >= -tol && self.mub_slack().is_none_or(|s| s >= -tol)
    }
}

/// Evaluates the realism complementarity bounds.
///
/// With a split, the observables act on the first factor; without one, the
/// whole state is the system and the reference is trivial. The context's
/// `normalization_dim` must equal the system dimension.
pub fn complementarity_check(
    rho: &DensityMatrix,
    obs: &Observable,
    other: &Observable,
    ctx: &MeasureContext,
) -> Result<ComplementarityReport> {
    let (scope, d_s, s_sys, s_ref) = match rho.split() {
        Some(split) => {
            let rs = partial_trace(rho, Subsystem::S)?;
            let rr = partial_trace(rho, Subsystem::R)?;
            (
                Scope::Subsystem,
                split.s,
                von_neumann_entropy(&rs, ctx.base),
                von_neumann_entropy(&rr, ctx.base),
            )
        }
        None => (
            Scope::Whole,
            rho.dim(),
            von_neumann_entropy(rho, ctx.base),
            0.0,
        ),
    };
    if ctx.normalization_dim != d_s {
        return Err(Error::DimensionMismatch {
            expected: d_s,
            found: ctx.normalization_dim,
        });
    }
    let s_joint = von_neumann_entropy(rho, ctx.base);
    let lhs = realism(rho, obs, scope, ctx)? + realism(rho, other, scope, ctx)?;
    let overlap = obs.max_overlap(other)?;
    let log_d = ctx.max_value();
    let mutual = s_sys + s_ref - s_joint;
    let rhs_mub = obs
        .is_mutually_unbiased(other, MUB_TOL)
        .then_some(log_d + s_sys - mutual);
    let rhs_general = ctx.base.log((d_s * d_s) as f64 * overlap) + s_joint + s_ref;
    Ok(ComplementarityReport {
        lhs,
        rhs_mub,
        rhs_general,
        overlap,
    })
}

/// Mean and standard deviation of an observable with `O² = 𝟙`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvolutoryUncertainty {
    pub expectation: f64,
    pub delta: f64,
}

/// `⟨O⟩` and `ΔO = √(⟨O²⟩ - ⟨O⟩²)` for an involutory observable.
///
/// An observable whose dimension matches the first factor of a split state
/// is applied as `O ⊗ 𝟙`.
pub fn involutory_uncertainty(rho: &DensityMatrix, obs: &Observable) -> Result<InvolutoryUncertainty> {
    let m = obs.matrix();
    let defect = (m * m).max_abs_diff(&ComplexMatrix::identity(m.dim()));
    if defect > INVOLUTION_TOL {
        return Err(Error::NotInvolutory(defect));
    }
    let op = if m.dim() == rho.dim() {
        m.clone()
    } else {
        match rho.split() {
            Some(split) if split.s == m.dim() => m.tensor(&ComplexMatrix::identity(split.r)),
            _ => {
                return Err(Error::DimensionMismatch {
                    expected: rho.dim(),
                    found: m.dim(),
                })
            }
        }
    };
    let mean: Complex64 = rho.expectation(&op)?;
    let second = rho.expectation(&(&op * &op))?;
    let variance = (second.re - mean.re * mean.re).max(0.0);
    Ok(InvolutoryUncertainty {
        expectation: mean.re,
        delta: variance.sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::PureState;

    #[test]
    fn identical_observables_give_trivial_general_bound() {
        let rho = DensityMatrix::new(ComplexMatrix::from_diagonal(&[0.25, 0.75])).unwrap();
        let z = Observable::pauli_z();
        let rep = complementarity_check(&rho, &z, &z, &MeasureContext::qubit()).unwrap();
        assert_eq!(rep.rhs_mub, None);
        assert!((rep.overlap - 1.0).abs() < 1e-12);
        let s = von_neumann_entropy(&rho, crate::entropy::LogBase::TWO);
        assert!((rep.rhs_general - (2.0 + s)).abs() < 1e-12);
        assert!(rep.holds(1e-9));
    }

    #[test]
    fn eigenstate_has_no_spread() {
        let z = Observable::pauli_z();
        let up = PureState::new(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)])
            .unwrap()
            .density();
        let u = involutory_uncertainty(&up, &z).unwrap();
        assert!((u.expectation - 1.0).abs() < 1e-15);
        assert!(u.delta.abs() < 1e-7);
    }

    #[test]
    fn non_involutory_rejected() {
        let o = Observable::from_hermitian(ComplexMatrix::from_diagonal(&[2.0, -1.0])).unwrap();
        let rho = DensityMatrix::maximally_mixed(2);
        assert!(matches!(
            involutory_uncertainty(&rho, &o),
            Err(Error::NotInvolutory(_))
        ));
    }

    #[test]
    fn normalization_must_match_system() {
        let rho = DensityMatrix::maximally_mixed(2);
        let z = Observable::pauli_z();
        let ctx = MeasureContext::new(2.0, 3).unwrap();
        assert!(complementarity_check(&rho, &z, &z, &ctx).is_err());
    }
}
