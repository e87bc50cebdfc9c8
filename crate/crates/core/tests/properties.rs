//! Randomized properties of the linear algebra, entropies and measures.

use ab_realism::entropy::{von_neumann_entropy, LogBase};
use ab_realism::linalg::{hermitian_eigendecompose, ComplexMatrix};
use ab_realism::measures::{
    complementarity_check, decompose_irrealism, dephase, irrealism, realism, MeasureContext, Scope,
};
use ab_realism::sample;
use ab_realism::state::{partial_trace, Subsystem};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigendecomposition_reconstructs(seed in any::<u64>(), dim in 1usize..=12) {
        let a = sample::random_hermitian(&mut rng(seed), dim);
        let e = hermitian_eigendecompose(&a).unwrap();
        let scale = a.frobenius_norm().max(1.0);
        prop_assert!(e.reconstruct().max_abs_diff(&a) <= 1e-10 * scale);
        prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        let v = &e.eigenvectors;
        prop_assert!((&v.adjoint() * v).max_abs_diff(&ComplexMatrix::identity(dim)) <= 1e-10);
        let trace: f64 = e.eigenvalues.iter().sum();
        prop_assert!((trace - a.trace().re).abs() <= 1e-10 * scale);
    }

    #[test]
    fn entropy_changes_base_by_a_constant(seed in any::<u64>(), dim in 2usize..=6, base in 1.5f64..30.0) {
        let rho = sample::random_density(&mut rng(seed), dim, dim);
        let bits = von_neumann_entropy(&rho, LogBase::TWO);
        let other = von_neumann_entropy(&rho, LogBase::new(base).unwrap());
        prop_assert!((other - bits / base.log2()).abs() < 1e-12);
        prop_assert!(bits >= -1e-12 && bits <= (dim as f64).log2() + 1e-12);
    }

    #[test]
    fn pure_states_have_zero_entropy(seed in any::<u64>(), dim in 2usize..=8) {
        let rho = sample::random_pure_state(&mut rng(seed), dim).density();
        prop_assert!(von_neumann_entropy(&rho, LogBase::TWO).abs() < 1e-10);
    }

    #[test]
    fn dephasing_is_idempotent_and_trace_preserving(seed in any::<u64>(), dim in 2usize..=5) {
        let mut r = rng(seed);
        let rho = sample::random_density(&mut r, dim, dim);
        let obs = sample::random_rank1_observable(&mut r, dim);
        let once = dephase(&rho, &obs, Scope::Whole).unwrap();
        let twice = dephase(&once, &obs, Scope::Whole).unwrap();
        prop_assert!(once.matrix().max_abs_diff(twice.matrix()) < 1e-12);
        prop_assert!((once.matrix().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn realism_lies_between_zero_and_log_d(seed in any::<u64>(), dim in 2usize..=5) {
        let mut r = rng(seed);
        let rank = 1 + (seed % dim as u64) as usize;
        let rho = sample::random_density(&mut r, dim, rank);
        let obs = sample::random_rank1_observable(&mut r, dim);
        let ctx = MeasureContext::new(2.0, dim).unwrap();
        let value = realism(&rho, &obs, Scope::Whole, &ctx).unwrap();
        prop_assert!(value >= -1e-10 && value <= ctx.max_value() + 1e-10);
        let i = irrealism(&rho, &obs, Scope::Whole, &ctx).unwrap();
        prop_assert!((value + i - ctx.max_value()).abs() < 1e-12);
    }

    #[test]
    fn irrealism_splits_into_coherence_and_discord(seed in any::<u64>(), r_dim in 1usize..=6) {
        let mut r = rng(seed);
        let rho = sample::random_bipartite_density(&mut r, 2, r_dim, 2 * r_dim);
        let obs = sample::random_rank1_observable(&mut r, 2);
        let d = decompose_irrealism(&rho, &obs, &MeasureContext::qubit()).unwrap();
        prop_assert!(d.defect() < 1e-9);
        prop_assert!(d.coherence >= -1e-10 && d.discord >= -1e-10);
    }

    #[test]
    fn partial_traces_keep_unit_trace(seed in any::<u64>(), s in 2usize..=3, r_dim in 2usize..=4) {
        let rho = sample::random_bipartite_density(&mut rng(seed), s, r_dim, s * r_dim);
        for keep in [Subsystem::S, Subsystem::R] {
            let reduced = partial_trace(&rho, keep).unwrap();
            prop_assert!((reduced.matrix().trace().re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn general_complementarity_bound_holds(seed in any::<u64>(), r_dim in 1usize..=4) {
        let mut r = rng(seed);
        let rho = sample::random_bipartite_density(&mut r, 2, r_dim, 1 + (seed % (2 * r_dim as u64)) as usize);
        let a = sample::random_rank1_observable(&mut r, 2);
        let b = sample::random_rank1_observable(&mut r, 2);
        let report = complementarity_check(&rho, &a, &b, &MeasureContext::qubit()).unwrap();
        prop_assert!(report.holds(1e-9), "{report:?}");
    }
}
