use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigendecompose, hermitian_eigenvalues, ComplexMatrix};

/// Tolerance for projector idempotence, orthogonality and completeness.
pub const PROJECTOR_TOL: f64 = 1e-10;
/// Eigenvalues closer than this (relative to the spectral radius, at least 1)
/// are merged into one eigenspace by [`Observable::from_hermitian`].
pub const DEGENERACY_TOL: f64 = 1e-9;

/// One term `o_j Π_j` of a spectral decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProjector {
    pub eigenvalue: f64,
    pub projector: ComplexMatrix,
}

/// Hermitian operator together with a projection-valued measure.
///
/// [`Observable::from_hermitian`] merges degenerate eigenvalues into
/// full-eigenspace projectors, which makes the associated dephasing map
/// independent of any basis choice inside an eigenspace. The other
/// constructors keep the projectors exactly as supplied, so an explicitly
/// refined measurement (rank-1 projectors sharing an eigenvalue) can be
/// expressed when a construction calls for it.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    matrix: ComplexMatrix,
    spectrum: Vec<SpectralProjector>,
}

impl Observable {
    pub fn from_hermitian(matrix: ComplexMatrix) -> Result<Self> {
        let eig = hermitian_eigendecompose(&matrix)?;
        let scale = eig
            .eigenvalues
            .iter()
            .fold(1.0_f64, |acc, x| acc.max(x.abs()));
        let n = matrix.dim();
        let mut spectrum: Vec<SpectralProjector> = Vec::new();
        let mut group: Vec<usize> = Vec::new();
        let flush = |group: &mut Vec<usize>, spectrum: &mut Vec<SpectralProjector>| {
            if group.is_empty() {
                return;
            }
            let mut proj = ComplexMatrix::zeros(n);
            let mut mean = 0.0;
            for &k in group.iter() {
                proj = &proj + &ComplexMatrix::projector(&eig.eigenvector(k));
                mean += eig.eigenvalues[k];
            }
            spectrum.push(SpectralProjector {
                eigenvalue: mean / group.len() as f64,
                projector: proj,
            });
            group.clear();
        };
        for k in 0..n {
            if let Some(&first) = group.first() {
                if (eig.eigenvalues[first] - eig.eigenvalues[k]).abs() > DEGENERACY_TOL * scale {
                    flush(&mut group, &mut spectrum);
                }
            }
            group.push(k);
        }
        flush(&mut group, &mut spectrum);
        Ok(Self { matrix, spectrum })
    }

    /// Rank-1 projectors onto the given orthonormal vectors.
    pub fn from_basis(eigenvalues: &[f64], basis: &[Vec<Complex64>]) -> Result<Self> {
        if eigenvalues.len() != basis.len() {
            return Err(Error::InvalidObservable(format!(
                "{} eigenvalues for {} basis vectors",
                eigenvalues.len(),
                basis.len()
            )));
        }
        let n = basis.len();
        if n == 0 {
            return Err(Error::InvalidObservable("empty spectrum".into()));
        }
        for v in basis {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        // A square Gram matrix equal to the identity implies completeness too.
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate().skip(i) {
                let dot: Complex64 = u.iter().zip(v).map(|(a, b)| a.conj() * b).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                if (dot - target).norm() > PROJECTOR_TOL {
                    return Err(Error::InvalidObservable(format!(
                        "basis vectors {i} and {j} are not orthonormal"
                    )));
                }
            }
        }
        let mut matrix = ComplexMatrix::zeros(n);
        let spectrum = eigenvalues
            .iter()
            .zip(basis)
            .map(|(&eigenvalue, v)| {
                let projector = ComplexMatrix::projector(v);
                matrix = &matrix + &projector.scale_real(eigenvalue);
                SpectralProjector {
                    eigenvalue,
                    projector,
                }
            })
            .collect();
        Ok(Self { matrix, spectrum })
    }

    /// Validates an explicit projection-valued measure and assembles `Σ o_j Π_j`.
    pub fn from_projectors(spectrum: Vec<SpectralProjector>) -> Result<Self> {
        let n = spectrum
            .first()
            .map(|p| p.projector.dim())
            .ok_or_else(|| Error::InvalidObservable("empty spectrum".into()))?;
        let mut sum = ComplexMatrix::zeros(n);
        let mut matrix = ComplexMatrix::zeros(n);
        for (i, p) in spectrum.iter().enumerate() {
            if p.projector.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.projector.dim(),
                });
            }
            let sq = &p.projector * &p.projector;
            if sq.max_abs_diff(&p.projector) > PROJECTOR_TOL {
                return Err(Error::InvalidObservable(format!(
                    "projector {i} is not idempotent"
                )));
            }
            for (j, q) in spectrum.iter().enumerate().skip(i + 1) {
                if (&p.projector * &q.projector).max_abs() > PROJECTOR_TOL {
                    return Err(Error::InvalidObservable(format!(
                        "projectors {i} and {j} are not orthogonal"
                    )));
                }
            }
            sum = &sum + &p.projector;
            matrix = &matrix + &p.projector.scale_real(p.eigenvalue);
        }
        if sum.max_abs_diff(&ComplexMatrix::identity(n)) > PROJECTOR_TOL {
            return Err(Error::InvalidObservable(
                "projectors do not sum to the identity".into(),
            ));
        }
        Ok(Self { matrix, spectrum })
    }

    /// `e^{-iφ}|0⟩⟨1| + e^{iφ}|1⟩⟨0|` with eigenvectors `(|0⟩ ± e^{iφ}|1⟩)/√2`.
    pub fn two_level_phase(phase: f64) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let e = Complex64::from_polar(h, phase);
        let zero = Complex64::new(h, 0.0);
        Self::from_basis(&[1.0, -1.0], &[vec![zero, e], vec![zero, -e]])
            .expect("two-level eigenbasis is orthonormal")
    }

    /// Pauli z: `|0⟩⟨0| - |1⟩⟨1|`.
    pub fn pauli_z() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::from_basis(&[1.0, -1.0], &[vec![one, zero], vec![zero, one]])
            .expect("computational basis is orthonormal")
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn spectrum(&self) -> &[SpectralProjector] {
        &self.spectrum
    }

    pub fn projectors(&self) -> impl Iterator<Item = &ComplexMatrix> {
        self.spectrum.iter().map(|p| &p.projector)
    }

    /// True when every projector has rank one.
    pub fn is_nondegenerate_basis(&self) -> bool {
        self.spectrum.len() == self.dim()
    }

    /// `c = max_{j,k} ‖Π_j Π'_k‖²`, which reduces to `max |⟨o_j|o'_k⟩|²`
    /// for rank-1 projectors.
    pub fn max_overlap(&self, other: &Observable) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let mut c = 0.0_f64;
        for p in self.projectors() {
            for q in other.projectors() {
                let m = &(p * q) * p;
                let top = hermitian_eigenvalues(&m.hermitian_part())?[0];
                c = c.max(top);
            }
        }
        Ok(c)
    }

    /// Whether both observables are nondegenerate with mutually unbiased
    /// eigenbases, i.e. every `|⟨o_j|o'_k⟩|²` is within `tol` of `1/d`.
    pub fn is_mutually_unbiased(&self, other: &Observable, tol: f64) -> bool {
        if self.dim() != other.dim()
            || !self.is_nondegenerate_basis()
            || !other.is_nondegenerate_basis()
        {
            return false;
        }
        let target = 1.0 / self.dim() as f64;
        self.projectors().all(|p| {
            other
                .projectors()
                .all(|q| ((p * q).trace().re - target).abs() <= tol)
        })
    }
}
