//! Random states, operators and gauges for property checks.
//!
//! Everything here is driven by a caller-supplied RNG so that seeded runs are
//! reproducible.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::classical::GaugeChoice;
use crate::linalg::ComplexMatrix;
use crate::measures::Observable;
use crate::state::{DensityMatrix, PureState, Split};

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Hermitian matrix with i.i.d. Gaussian entries (GUE up to scale).
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| gaussian_complex(rng));
    (&g + &g.adjoint()).scale_real(0.5)
}

/// Haar-random unit vector.
pub fn random_ket<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| gaussian_complex(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Haar-random unitary, returned as its columns (an orthonormal basis).
pub fn random_basis<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while basis.len() < dim {
        let mut v: Vec<Complex64> = (0..dim).map(|_| gaussian_complex(rng)).collect();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for b in &basis {
                let overlap: Complex64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= overlap * bi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            basis.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    basis
}

pub fn random_pure_state<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> PureState {
    PureState::new(random_ket(rng, dim)).expect("random ket is normalized")
}

/// Bipartite pure state with split `(s, r)`.
pub fn random_pure_bipartite<R: Rng + ?Sized>(rng: &mut R, s: usize, r: usize) -> PureState {
    PureState::new(random_ket(rng, s * r))
        .and_then(|p| p.with_split(Split::new(s, r)?))
        .expect("random bipartite ket is valid")
}

/// Mixed state `G G† / tr(G G†)` with `G` a `dim x rank` Ginibre matrix.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> DensityMatrix {
    let cols: Vec<Vec<Complex64>> = (0..rank)
        .map(|_| (0..dim).map(|_| gaussian_complex(rng)).collect())
        .collect();
    let m = ComplexMatrix::from_fn(dim, |i, j| cols.iter().map(|c| c[i] * c[j].conj()).sum());
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr)).expect("Ginibre state is a valid density matrix")
}

pub fn random_bipartite_density<R: Rng + ?Sized>(
    rng: &mut R,
    s: usize,
    r: usize,
    rank: usize,
) -> DensityMatrix {
    random_density(rng, s * r, rank)
        .with_split(Split::new(s, r).expect("positive split"))
        .expect("split factors the dimension")
}

/// Nondegenerate observable with a Haar-random eigenbasis (rank-1 projectors).
pub fn random_rank1_observable<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Observable {
    let basis = random_basis(rng, dim);
    let eigenvalues: Vec<f64> = (0..dim).map(|k| k as f64 + 1.0).collect();
    Observable::from_basis(&eigenvalues, &basis).expect("orthonormal basis")
}

/// Gauge function with `terms` Fourier modes of standard-normal amplitude.
pub fn random_gauge<R: Rng + ?Sized>(rng: &mut R, terms: usize) -> GaugeChoice {
    let cos = (0..terms).map(|_| rng.sample(StandardNormal)).collect();
    let sin = (0..terms).map(|_| rng.sample(StandardNormal)).collect();
    GaugeChoice::new(cos, sin)
}
