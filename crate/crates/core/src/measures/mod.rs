//! Dephasing maps and the entropic measures built on them: irrealism,
//! realism, coherence, non-minimized discord, the bipartite information
//! quantities, and the complementarity bounds.

mod bounds;
mod information;
mod observable;
mod realism;

pub use bounds::{
    complementarity_check, involutory_uncertainty, ComplementarityReport, InvolutoryUncertainty,
    INVOLUTION_TOL, MUB_TOL,
};
pub use information::{conditional_entropy, entanglement_entropy, mutual_information, PURITY_TOL};
pub use observable::{Observable, SpectralProjector, DEGENERACY_TOL, PROJECTOR_TOL};
pub use realism::{
    coherence, decompose_irrealism, dephase, discord_nonminimized, irrealism, realism,
    IrrealismDecomposition, MeasureContext, Scope,
};
