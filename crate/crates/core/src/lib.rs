//! Entropic realism for two-arm interferometers.
//!
//! The crate models the which-arm degree of freedom of a charge as a qubit
//! and evaluates how "real" an observable is on it: the entropy a
//! projective measurement would add, subtracted from its maximum. Three
//! scenarios are provided:
//!
//! - a plain interferometer with an accumulated relative phase `f(θ)`;
//! - the same interferometer enclosing a classical flux line
//!   ([`classical::ClassicalScenario`]), where operators built from the
//!   vector potential along the chord between the packets have a realism
//!   that jumps when the chord crosses the flux line;
//! - a flux line sourced by a quantized cylinder
//!   ([`quantized::QuantizedScenario`]), which entangles the charge with
//!   the source.
//!
//! ```
//! use ab_realism::classical::{ClassicalScenario, OperatorPhase, PhaseProfile};
//! use std::f64::consts::PI;
//!
//! let scenario = ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), PI / 5.0);
//! let g = OperatorPhase::tracking(&scenario.f, 0.0);
//! let before = scenario.realism_sigma_ga_closed_form(1.0, &g)?;
//! let after = scenario.realism_sigma_ga_closed_form(2.0, &g)?;
//! assert!((before - 1.0).abs() < 1e-12);
//! assert!((after - 0.5454).abs() < 1e-3);
//! # Ok::<(), ab_realism::Error>(())
//! ```

pub mod classical;
pub mod entropy;
mod error;
pub mod linalg;
pub mod measures;
pub mod quantized;
pub mod sample;
pub mod state;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use measures::{MeasureContext, Observable, Scope};
pub use state::{DensityMatrix, PureState, Split};

// Keep the guide's snippets compiling.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/density-matrices.md")]
mod book_density_matrices {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/realism.md")]
mod book_realism {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/standard-interferometer.md")]
mod book_standard_interferometer {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/classical-flux.md")]
mod book_classical_flux {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/quantized-flux.md")]
mod book_quantized_flux {}
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
