//! Dense complex matrices and the Hermitian eigensolver.

mod eigen;
mod matrix;

pub use eigen::{
    hermitian_eigendecompose, hermitian_eigenvalues, Eigendecomposition, MAX_SWEEPS,
    OFF_DIAGONAL_TOL,
};
pub use matrix::{tensor, tensor_vec, ComplexMatrix, HERMITIAN_TOL};
