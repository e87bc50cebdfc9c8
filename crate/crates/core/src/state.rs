//! Density matrices, pure states, probability vectors and partial traces.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, tensor_vec, ComplexMatrix, HERMITIAN_TOL};

/// Trace tolerance for density matrices.
pub const TRACE_TOL: f64 = 1e-12;
/// Most negative eigenvalue accepted (and clamped) in a density matrix.
pub const EIGENVALUE_FLOOR: f64 = -1e-9;
/// Normalization tolerance for kets and probability vectors.
pub const NORM_TOL: f64 = 1e-10;

/// Bipartite factorization `d_S x d_R` of a Hilbert space, system first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub s: usize,
    pub r: usize,
}

impl Split {
    pub fn new(s: usize, r: usize) -> Result<Self> {
        if s == 0 || r == 0 {
            return Err(Error::InvalidSplit { s, r, dim: s * r });
        }
        Ok(Self { s, r })
    }

    pub fn dim(&self) -> usize {
        self.s * self.r
    }
}

/// Which factor of a bipartite state to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    S,
    R,
}

/// Normalized state vector with an optional bipartite split.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    split: Option<Split>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if amplitudes.is_empty() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "state vector has squared norm {norm}"
            )));
        }
        Ok(Self {
            amplitudes,
            split: None,
        })
    }

    /// Product state `a ⊗ b` carrying the corresponding split.
    pub fn product(a: &PureState, b: &PureState) -> Result<Self> {
        Self::new(tensor_vec(&a.amplitudes, &b.amplitudes))?
            .with_split(Split::new(a.dim(), b.dim())?)
    }

    pub fn with_split(mut self, split: Split) -> Result<Self> {
        if split.dim() != self.amplitudes.len() {
            return Err(Error::InvalidSplit {
                s: split.s,
                r: split.r,
                dim: self.amplitudes.len(),
            });
        }
        self.split = Some(split);
        Ok(self)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn split(&self) -> Option<Split> {
        self.split
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::from_valid(ComplexMatrix::projector(&self.amplitudes), self.split)
    }
}

/// Hermitian, positive-semidefinite, unit-trace matrix.
///
/// The spectrum is computed lazily and cached; eigenvalues in `[-1e-9, 0)`
/// are clamped to 0 and those in `(1, 1 + 1e-9]` to 1.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    split: Option<Split>,
    spectrum: OnceLock<Vec<f64>>,
}

impl PartialEq for DensityMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.split == other.split
    }
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        matrix.check_hermitian(HERMITIAN_TOL)?;
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace is {tr}")));
        }
        let eigenvalues = hermitian_eigenvalues(&matrix)?;
        let min = eigenvalues.last().copied().unwrap_or(0.0);
        if min < EIGENVALUE_FLOOR {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        let spectrum = OnceLock::new();
        let _ = spectrum.set(clamp_spectrum(eigenvalues));
        Ok(Self {
            matrix,
            split: None,
            spectrum,
        })
    }

    /// Wraps a matrix that is a density matrix by construction.
    pub(crate) fn from_valid(matrix: ComplexMatrix, split: Option<Split>) -> Self {
        debug_assert!(matrix.is_hermitian(1e-9));
        debug_assert!((matrix.trace().re - 1.0).abs() < 1e-9);
        Self {
            matrix,
            split,
            spectrum: OnceLock::new(),
        }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::from_valid(ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64), None)
    }

    pub fn with_split(mut self, split: Split) -> Result<Self> {
        if split.dim() != self.dim() {
            return Err(Error::InvalidSplit {
                s: split.s,
                r: split.r,
                dim: self.dim(),
            });
        }
        self.split = Some(split);
        Ok(self)
    }

    pub fn without_split(mut self) -> Self {
        self.split = None;
        self
    }

    /// `a ⊗ b` with split `(dim a, dim b)`.
    pub fn product(a: &DensityMatrix, b: &DensityMatrix) -> Self {
        let split = Split {
            s: a.dim(),
            r: b.dim(),
        };
        Self::from_valid(a.matrix.tensor(&b.matrix), Some(split))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn split(&self) -> Option<Split> {
        self.split
    }

    pub fn require_split(&self) -> Result<Split> {
        self.split.ok_or(Error::MissingSplit)
    }

    /// Eigenvalues, descending, clamped to `[0, 1]`.
    pub fn spectrum(&self) -> &[f64] {
        self.spectrum.get_or_init(|| {
            let raw = hermitian_eigenvalues(&self.matrix.hermitian_part())
                .expect("density matrix spectrum");
            clamp_spectrum(raw)
        })
    }

    /// Smallest eigenvalue before clamping.
    pub fn min_raw_eigenvalue(&self) -> f64 {
        hermitian_eigenvalues(&self.matrix.hermitian_part())
            .expect("density matrix spectrum")
            .last()
            .copied()
            .unwrap_or(0.0)
    }

    /// `tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        (self.purity() - 1.0).abs() <= tol
    }

    /// `tr(ρ O)` for an operator of matching dimension.
    pub fn expectation(&self, op: &ComplexMatrix) -> Result<Complex64> {
        if op.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: op.dim(),
            });
        }
        Ok((&self.matrix * op).trace())
    }
}

fn clamp_spectrum(raw: Vec<f64>) -> Vec<f64> {
    raw.into_iter().map(|x| x.clamp(0.0, 1.0)).collect()
}

/// Traces out one factor of a bipartite state.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    let Split { s, r } = rho.require_split()?;
    let m = rho.matrix();
    let out = match keep {
        Subsystem::S => ComplexMatrix::from_fn(s, |i, j| {
            (0..r).map(|k| m[(i * r + k, j * r + k)]).sum()
        }),
        Subsystem::R => ComplexMatrix::from_fn(r, |i, j| {
            (0..s).map(|k| m[(k * r + i, k * r + j)]).sum()
        }),
    };
    Ok(DensityMatrix::from_valid(out.hermitian_part(), None))
}

/// Probability distribution with entries in `[0, 1]` summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector(Vec<f64>);

impl ProbVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if let Some(bad) = entries
            .iter()
            .find(|&&p| !(-NORM_TOL..=1.0 + NORM_TOL).contains(&p) || p.is_nan())
        {
            return Err(Error::InvalidProbabilities(format!(
                "entry {bad} outside [0, 1]"
            )));
        }
        let sum: f64 = entries.iter().sum();
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidProbabilities(format!("entries sum to {sum}")));
        }
        Ok(Self(entries.into_iter().map(|p| p.clamp(0.0, 1.0)).collect()))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}
