//! Von Neumann, Shannon, binary and relative entropies.
//!
//! All functions use the convention `0 log 0 = 0`.

use crate::error::{Error, Result};
use crate::linalg::hermitian_eigendecompose;
use crate::state::{DensityMatrix, ProbVector};

/// σ-eigenvalues below this are treated as outside the support.
pub const SUPPORT_EIGENVALUE_TOL: f64 = 1e-12;
/// ρ-weight on the σ-kernel above this makes the relative entropy infinite.
pub const SUPPORT_WEIGHT_TOL: f64 = 1e-10;

/// A validated logarithm base (`> 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBase(f64);

impl LogBase {
    pub const TWO: LogBase = LogBase(2.0);
    pub const E: LogBase = LogBase(std::f64::consts::E);

    pub fn new(base: f64) -> Result<Self> {
        if !(base > 1.0) || !base.is_finite() {
            return Err(Error::InvalidBase(base));
        }
        Ok(Self(base))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `log_base(x)`.
    pub fn log(self, x: f64) -> f64 {
        if self.0 == 2.0 {
            x.log2()
        } else {
            x.ln() / self.0.ln()
        }
    }
}

fn plogp_sum(probs: impl IntoIterator<Item = f64>, base: LogBase) -> f64 {
    let s: f64 = probs
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * base.log(p))
        .sum();
    s.max(0.0)
}

/// `-Σ p log p` of a probability vector.
pub fn shannon_entropy(p: &ProbVector, base: LogBase) -> f64 {
    plogp_sum(p.as_slice().iter().copied(), base)
}

/// `h(λ) = -λ log₂ λ - (1-λ) log₂(1-λ)`.
///
/// Arguments within `1e-10` outside `[0, 1]` are clamped; anything further
/// out is rejected.
pub fn binary_entropy(lambda: f64) -> Result<f64> {
    binary_entropy_base(lambda, LogBase::TWO)
}

/// Binary entropy in an arbitrary base.
pub fn binary_entropy_base(lambda: f64, base: LogBase) -> Result<f64> {
    let p = ProbVector::new(vec![lambda, 1.0 - lambda])?;
    Ok(shannon_entropy(&p, base))
}

/// `-tr(ρ log ρ)` from the clamped spectrum.
pub fn von_neumann_entropy(rho: &DensityMatrix, base: LogBase) -> f64 {
    plogp_sum(rho.spectrum().iter().copied(), base)
}

/// `tr[ρ (log ρ - log σ)]`, or `+∞` when the support of ρ is not
/// contained in the support of σ.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix, base: LogBase) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    let sig = hermitian_eigendecompose(&sigma.matrix().hermitian_part())?;
    let rho_m = rho.matrix();
    // -tr(ρ log σ) = -Σ_k <s_k|ρ|s_k> log σ_k
    let mut cross = 0.0;
    for (k, &s) in sig.eigenvalues.iter().enumerate() {
        let weight = rho_m.expectation(&sig.eigenvector(k)).re;
        if s < SUPPORT_EIGENVALUE_TOL {
            if weight > SUPPORT_WEIGHT_TOL {
                return Ok(f64::INFINITY);
            }
            continue;
        }
        cross -= weight * base.log(s.min(1.0));
    }
    let value = cross - von_neumann_entropy(rho, base);
    Ok(value.max(0.0))
}
