use crate::entropy::{von_neumann_entropy, LogBase};
use crate::error::{Error, Result};
use crate::state::{partial_trace, DensityMatrix, Subsystem};

/// Purity tolerance for [`entanglement_entropy`].
pub const PURITY_TOL: f64 = 1e-10;

/// `I_{S:R}(ρ) = S(ρ_S) + S(ρ_R) - S(ρ)`.
pub fn mutual_information(rho: &DensityMatrix, base: LogBase) -> Result<f64> {
    let s = partial_trace(rho, Subsystem::S)?;
    let r = partial_trace(rho, Subsystem::R)?;
    Ok(von_neumann_entropy(&s, base) + von_neumann_entropy(&r, base)
        - von_neumann_entropy(rho, base))
}

/// `S_{S:R}(ρ) = S(ρ) - S(ρ_R)`.
pub fn conditional_entropy(rho: &DensityMatrix, base: LogBase) -> Result<f64> {
    let r = partial_trace(rho, Subsystem::R)?;
    Ok(von_neumann_entropy(rho, base) - von_neumann_entropy(&r, base))
}

/// `𝔈(ρ) = S(ρ_S)` for a pure bipartite state.
pub fn entanglement_entropy(rho: &DensityMatrix, base: LogBase) -> Result<f64> {
    rho.require_split()?;
    let purity = rho.purity();
    if (purity - 1.0).abs() > PURITY_TOL {
        return Err(Error::NotPure(purity));
    }
    let s = partial_trace(rho, Subsystem::S)?;
    Ok(von_neumann_entropy(&s, base))
}
