use crate::entropy::{von_neumann_entropy, LogBase};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::state::{partial_trace, DensityMatrix, Subsystem};

use super::information::mutual_information;
use super::observable::Observable;

/// Where a dephasing map acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// `Π_j ⊗ 𝟙_R` on the first factor of a bipartite state.
    Subsystem,
    /// `Π_j` on the full Hilbert space.
    Whole,
}

/// Logarithm base and the dimension `d` entering `log d` in the realism.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureContext {
    pub base: LogBase,
    pub normalization_dim: usize,
}

impl MeasureContext {
    pub fn new(base: f64, normalization_dim: usize) -> Result<Self> {
        if normalization_dim < 2 {
            return Err(Error::InvalidNormalization(normalization_dim));
        }
        Ok(Self {
            base: LogBase::new(base)?,
            normalization_dim,
        })
    }

    /// Bits, normalized to a qubit.
    pub fn qubit() -> Self {
        Self {
            base: LogBase::TWO,
            normalization_dim: 2,
        }
    }

    /// Base-`d` logarithms normalized to dimension `d`, so realism lies in `[0, 1]`.
    pub fn unit_scale(dim: usize) -> Result<Self> {
        Self::new(dim as f64, dim)
    }

    /// `log_base(normalization_dim)`.
    pub fn max_value(&self) -> f64 {
        self.base.log(self.normalization_dim as f64)
    }
}

fn lift(projector: &ComplexMatrix, rho: &DensityMatrix, scope: Scope) -> Result<ComplexMatrix> {
    match scope {
        Scope::Whole => {
            if projector.dim() != rho.dim() {
                return Err(Error::DimensionMismatch {
                    expected: rho.dim(),
                    found: projector.dim(),
                });
            }
            Ok(projector.clone())
        }
        Scope::Subsystem => {
            let split = rho.require_split()?;
            if projector.dim() != split.s {
                return Err(Error::DimensionMismatch {
                    expected: split.s,
                    found: projector.dim(),
                });
            }
            Ok(projector.tensor(&ComplexMatrix::identity(split.r)))
        }
    }
}

/// `Φ_O(ρ) = Σ_j (Π_j ⊗ 𝟙) ρ (Π_j ⊗ 𝟙)`; the split of `ρ` is preserved.
pub fn dephase(rho: &DensityMatrix, obs: &Observable, scope: Scope) -> Result<DensityMatrix> {
    let mut out = ComplexMatrix::zeros(rho.dim());
    for p in obs.projectors() {
        let lifted = lift(p, rho, scope)?;
        out = &out + &(&(&lifted * rho.matrix()) * &lifted);
    }
    Ok(DensityMatrix::from_valid(out.hermitian_part(), rho.split()))
}

/// `𝕴_O(ρ) = S(Φ_O(ρ)) - S(ρ)`.
pub fn irrealism(
    rho: &DensityMatrix,
    obs: &Observable,
    scope: Scope,
    ctx: &MeasureContext,
) -> Result<f64> {
    let dephased = dephase(rho, obs, scope)?;
    Ok(von_neumann_entropy(&dephased, ctx.base) - von_neumann_entropy(rho, ctx.base))
}

/// `ℜ_O(ρ) = log d - 𝕴_O(ρ)`.
pub fn realism(
    rho: &DensityMatrix,
    obs: &Observable,
    scope: Scope,
    ctx: &MeasureContext,
) -> Result<f64> {
    Ok(ctx.max_value() - irrealism(rho, obs, scope, ctx)?)
}

/// Relative entropy of coherence of a single-system state in the eigenbasis of `obs`.
pub fn coherence(rho_s: &DensityMatrix, obs: &Observable, ctx: &MeasureContext) -> Result<f64> {
    let rho_s = rho_s.clone().without_split();
    irrealism(&rho_s, obs, Scope::Whole, ctx)
}

/// Non-minimized discord `I_{S:R}(ρ) - I_{S:R}(Φ_O(ρ))` with `O` measured on S.
pub fn discord_nonminimized(
    rho: &DensityMatrix,
    obs: &Observable,
    ctx: &MeasureContext,
) -> Result<f64> {
    let dephased = dephase(rho, obs, Scope::Subsystem)?;
    Ok(mutual_information(rho, ctx.base)? - mutual_information(&dephased, ctx.base)?)
}

/// Irrealism split into local coherence and discord.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrrealismDecomposition {
    pub irrealism: f64,
    pub coherence: f64,
    pub discord: f64,
}

impl IrrealismDecomposition {
    pub fn defect(&self) -> f64 {
        (self.irrealism - (self.coherence + self.discord)).abs()
    }
}

/// Computes `𝕴`, `ℭ(ρ_S)` and `𝕯` independently for a bipartite state.
pub fn decompose_irrealism(
    rho: &DensityMatrix,
    obs: &Observable,
    ctx: &MeasureContext,
) -> Result<IrrealismDecomposition> {
    let rho_s = partial_trace(rho, Subsystem::S)?;
    Ok(IrrealismDecomposition {
        irrealism: irrealism(rho, obs, Scope::Subsystem, ctx)?,
        coherence: coherence(&rho_s, obs, ctx)?,
        discord: discord_nonminimized(rho, obs, ctx)?,
    })
}
