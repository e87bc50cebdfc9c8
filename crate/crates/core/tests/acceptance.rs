//! Acceptance criteria. Runs every criterion, prints one line each, and
//! exits non-zero if any fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::{Duration, Instant};

use ab_realism::classical::{
    self, sigma_z, Branch, ClassicalScenario, OperatorPhase, PhaseProfile,
};
use ab_realism::entropy::{relative_entropy, LogBase};
use ab_realism::measures::{
    complementarity_check, decompose_irrealism, dephase, entanglement_entropy,
    involutory_uncertainty, irrealism, realism, MeasureContext, Observable, Scope,
};
use ab_realism::quantized::{CylinderState, JointAxis, QuantizedScenario};
use ab_realism::sample;
use ab_realism::state::{partial_trace, DensityMatrix, Subsystem};
use ab_realism::ComplexMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_ab;

/// Binary entropy in bits, written out independently of the library.
fn h2(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    term(x) + term(1.0 - x)
}

fn grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| PI * k as f64 / (n - 1) as f64).collect()
}

/// Grid with points inside `1e-9` of the crossing moved to its edges.
fn sweep_grid(n: usize) -> Vec<f64> {
    grid(n)
        .into_iter()
        .map(|t| {
            if (t - FRAC_PI_2).abs() < 1e-9 {
                if t < FRAC_PI_2 {
                    FRAC_PI_2 - 1e-9
                } else {
                    FRAC_PI_2 + 1e-9
                }
            } else {
                t
            }
        })
        .collect()
}

struct Outcome {
    worst: f64,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            worst: 0.0,
            notes: Vec::new(),
        }
    }

    /// Records `|got - want|` against `tol`.
    fn close(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        let dev = (got - want).abs();
        let scaled = dev / tol;
        if scaled > self.worst {
            self.worst = scaled;
        }
        if !(dev <= tol) && self.notes.len() < 5 {
            self.notes
                .push(format!("{what}: got {got:.15}, want {want:.15}, |diff| {dev:.3e} > {tol:.0e}"));
        }
    }

    fn require(&mut self, what: &str, ok: bool) {
        if !ok {
            self.worst = self.worst.max(f64::INFINITY);
            if self.notes.len() < 5 {
                self.notes.push(what.to_string());
            }
        }
    }

    fn passed(&self) -> bool {
        self.notes.is_empty() && self.worst <= 1.0
    }
}

fn realism_qubit(rho: &DensityMatrix, obs: &Observable) -> f64 {
    realism(rho, obs, Scope::Whole, &MeasureContext::qubit()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let z = sigma_z();
    let scenarios = [
        ClassicalScenario::standard(PhaseProfile::linear(1.0 / 3.0)),
        ClassicalScenario::standard(PhaseProfile::Zero),
        ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), PI / 5.0),
        ClassicalScenario::aharonov_bohm(PhaseProfile::Zero, 2.3),
    ];
    for s in &scenarios {
        for theta in grid(1001) {
            let v = s.realism_of(theta, &z).unwrap();
            out.close(&format!("sigma_z at {theta}"), v, 0.0, 1e-12);
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    let s = ClassicalScenario::standard(PhaseProfile::linear(1.0 / 3.0));
    let g = OperatorPhase::tracking(&s.f, 0.0);
    for theta in grid(1001) {
        let op = classical::sigma_g(theta, &g).unwrap();
        let v = s.realism_of(theta, &op).unwrap();
        out.close(&format!("sigma_f at {theta}"), v, 1.0, 1e-12);
    }
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    let phi = PI / 5.0;
    let s = ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), phi);
    let x_post = 1.0 - h2((1.0 + phi.cos()) / 2.0);
    let y_post = 1.0 - h2((1.0 - phi.sin()) / 2.0);
    out.close("quoted value sigma_x^A post", x_post, 0.5454, 1e-3);
    out.close("quoted value sigma_y^A post", y_post, 0.2661, 1e-3);
    for (offset, pre, post, label) in [(0.0, 1.0, x_post, "x"), (FRAC_PI_2, 0.0, y_post, "y")] {
        let g = OperatorPhase::tracking(&s.f, offset);
        let mut firsts = [None, None];
        for theta in sweep_grid(1001) {
            let op = s.sigma_ga(theta, &g).unwrap();
            let dephased = s.realism_of(theta, &op).unwrap();
            let closed = s.realism_sigma_ga_closed_form(theta, &g).unwrap();
            out.close(&format!("{label} oracle at {theta}"), dephased, closed, 1e-10);
            let branch = Branch::at(theta);
            let want = if branch == Branch::Pre { pre } else { post };
            out.close(&format!("{label} value at {theta}"), dephased, want, 1e-10);
            let slot = &mut firsts[branch as usize];
            let first = *slot.get_or_insert(dephased);
            out.close(&format!("{label} branch constancy at {theta}"), dephased, first, 1e-12);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::new();
    let phi = PI / 5.0;
    let s = ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), phi);
    let eps = 1e-9;
    for k in 0..=200 {
        let delta = FRAC_PI_2 * k as f64 / 200.0;
        let g = OperatorPhase::tracking(&s.f, delta);
        let before = FRAC_PI_2 - eps;
        let after = FRAC_PI_2 + eps;
        let pre = s.realism_of(before, &s.sigma_ga(before, &g).unwrap()).unwrap();
        let post = s.realism_of(after, &s.sigma_ga(after, &g).unwrap()).unwrap();
        let oracle = h2((1.0 + delta.cos()) / 2.0) - h2((1.0 + (phi - delta).cos()) / 2.0);
        out.close(&format!("jump at delta {delta}"), post - pre, oracle, 1e-10);
        out.close(
            &format!("library jump at delta {delta}"),
            classical::realism_jump(delta, phi),
            oracle,
            1e-10,
        );
    }
    let g = OperatorPhase::tracking(&s.f, phi / 2.0);
    let pre = s.realism_of(FRAC_PI_2 - eps, &s.sigma_ga(FRAC_PI_2 - eps, &g).unwrap()).unwrap();
    let post = s.realism_of(FRAC_PI_2 + eps, &s.sigma_ga(FRAC_PI_2 + eps, &g).unwrap()).unwrap();
    out.close("jump at delta = phi/2", post - pre, 0.0, 1e-12);
    out.close("formula at delta = phi/2", classical::realism_jump(phi / 2.0, phi), 0.0, 1e-12);
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let base = ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), PI / 5.0);
    let thetas = sweep_grid(41);
    let ga = OperatorPhase::tracking(&base.f, 0.0);
    let x = classical::sigma_g(0.0, &OperatorPhase::constant(0.0)).unwrap();
    let reference: Vec<(f64, f64)> = thetas
        .iter()
        .map(|&t| {
            (
                base.realism_of(t, &base.sigma_ga(t, &ga).unwrap()).unwrap(),
                base.realism_of(t, &x).unwrap(),
            )
        })
        .collect();
    let mut moved = 0;
    for _ in 0..100 {
        let terms = rng.random_range(1..=4);
        let s = base.clone().with_gauge(sample::random_gauge(&mut rng, terms));
        let mut plain_variation = 0.0_f64;
        for (&t, &(ref_a, ref_x)) in thetas.iter().zip(&reference) {
            let a = s.realism_of(t, &s.sigma_ga(t, &ga).unwrap()).unwrap();
            out.close(&format!("sigma_g^A under gauge at {t}"), a, ref_a, 1e-10);
            let plain = s.realism_of(t, &x).unwrap();
            plain_variation = plain_variation.max((plain - ref_x).abs());
        }
        if plain_variation > 1e-3 {
            moved += 1;
        }
    }
    out.require(
        &format!("plain sigma_x moved under only {moved}/100 gauges"),
        moved >= 95,
    );
    out
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let plain = ClassicalScenario::aharonov_bohm(PhaseProfile::Zero, PI / 5.0);
    let gauged = plain.clone().with_gauge(sample::random_gauge(&mut rng, 3));
    let mut thetas = Vec::new();
    while thetas.len() < 50 {
        let t: f64 = rng.random_range(0.0..PI);
        if (t - FRAC_PI_2).abs() >= 1e-3 {
            thetas.push(t);
        }
    }
    for s in [&plain, &gauged] {
        for &t in &thetas {
            // analytic form written out here rather than taken from the library
            let (a0, a1) = (-FRAC_PI_2 - t, -FRAC_PI_2 + t);
            let step = if t >= FRAC_PI_2 { 1.0 } else { 0.0 };
            let analytic = s.phi_ab * (PI * step - t) / PI + s.gauge.on_ring(a0)
                - s.gauge.on_ring(a1);
            let numeric = s.chord_phase_adaptive(t, 1e-12).unwrap();
            out.close(&format!("chord at {t}"), numeric, analytic, 1e-8);
            out.close(
                &format!("library chord at {t}"),
                s.chord_phase(t).unwrap(),
                analytic,
                1e-12,
            );
        }
    }
    out
}

fn fig3_sets() -> [&'static [i64]; 4] {
    [&[2, 3], &[1, 4], &[0, 5], &[-1, 6]]
}

fn fig_scenario(support: &[i64]) -> QuantizedScenario {
    QuantizedScenario::new(
        CylinderState::even_superposition(6, support).unwrap(),
        2.0 * PI / 25.0,
        PhaseProfile::Zero,
    )
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    for support in fig3_sets() {
        let s = fig_scenario(support);
        out.close("mean flux", s.cylinder.mean_m(), 2.5, 1e-12);
        for theta in grid(201) {
            let joint = s.joint_state(theta).unwrap().density();
            let rho_s = partial_trace(&joint, Subsystem::S).unwrap();
            let r_z = realism_qubit(&rho_s, &sigma_z());
            let h_l0 = h2(s.lambda0(theta).unwrap());
            let ent = entanglement_entropy(&joint, LogBase::TWO).unwrap();
            out.close(&format!("{support:?} R_z vs h(l0) at {theta}"), r_z, h_l0, 1e-10);
            out.close(&format!("{support:?} h(l0) vs E at {theta}"), h_l0, ent, 1e-10);
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    let ctx = MeasureContext::unit_scale(26).unwrap();
    let floor = 13f64.ln() / 26f64.ln();
    out.close("log_26 13", floor, 0.7873, 1e-4);
    let z_joint = Observable::from_hermitian(
        sigma_z().matrix().tensor(&ComplexMatrix::identity(13)),
    )
    .unwrap();
    for support in fig3_sets() {
        let s = fig_scenario(support);
        let probs: Vec<f64> = s.cylinder.weights().map(|(_, p)| p).collect();
        let h_c: f64 = probs.iter().map(|p| -p * p.ln() / 26f64.ln()).sum();
        for theta in sweep_grid(61) {
            let rho = s.joint_state(theta).unwrap().density();
            for axis in [JointAxis::X, JointAxis::Y] {
                let op = s.sigma_joint(theta, axis).unwrap();
                let dephased = realism(&rho, &op, Scope::Whole, &ctx).unwrap();
                let closed = s.realism_sigma_joint_closed_form(theta, axis).unwrap();
                out.close(&format!("{support:?} {axis:?} at {theta}"), dephased, closed, 1e-10);
                // pre-crossing plateau written out independently
                if theta < FRAC_PI_2 {
                    let want = match axis {
                        JointAxis::X => 1.0 - h_c,
                        JointAxis::Y => 1.0 - 2f64.ln() / 26f64.ln() - h_c,
                    };
                    out.close(&format!("{support:?} {axis:?} plateau"), dephased, want, 1e-10);
                }
            }
            let z = realism(&rho, &z_joint, Scope::Whole, &ctx).unwrap();
            out.close(&format!("sigma_z joint at {theta}"), z, floor, 1e-10);
            out.close("sigma_z joint closed form", s.realism_sigma_z_joint(&ctx), floor, 1e-12);
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let mut out = Outcome::new();
    let f = PhaseProfile::linear(1.0 / 3.0);
    let qk = 2.0 * PI / 25.0;
    let x = classical::sigma_g(0.0, &OperatorPhase::constant(0.0)).unwrap();
    let y = classical::sigma_g(0.0, &OperatorPhase::constant(FRAC_PI_2)).unwrap();
    for m in -3..=3 {
        let q = QuantizedScenario::new(CylinderState::eigenstate(6, m).unwrap(), qk, f.clone());
        let c = ClassicalScenario::aharonov_bohm(f.clone(), qk * m as f64);
        let ga = OperatorPhase::tracking(&f, 0.0);
        for theta in sweep_grid(101) {
            let rho_q = q.reduced_charge_state(theta).unwrap();
            let rho_c = c.charge_state(theta).unwrap().density();
            out.close(
                "reduced state",
                rho_q.matrix().max_abs_diff(rho_c.matrix()),
                0.0,
                1e-10,
            );
            out.close("lambda0", q.lambda0(theta).unwrap(), 0.0, 1e-10);
            out.close(
                "sigma_x",
                q.realism_sigma_x_reduced(theta).unwrap(),
                c.realism_of(theta, &x).unwrap(),
                1e-10,
            );
            out.close(
                "sigma_y",
                q.realism_sigma_y_reduced(theta).unwrap(),
                c.realism_of(theta, &y).unwrap(),
                1e-10,
            );
            out.close(
                "sigma_z",
                realism_qubit(&rho_q, &sigma_z()),
                c.realism_of(theta, &sigma_z()).unwrap(),
                1e-10,
            );
            let branch_op = q.sigma_xa_branch(theta, m).unwrap();
            out.close(
                "branch operator",
                realism_qubit(&rho_q, &branch_op),
                c.realism_sigma_ga_closed_form(theta, &ga).unwrap(),
                1e-10,
            );
            out.close(
                "weak-interaction residual",
                q.weak_interaction_residual(theta).unwrap(),
                0.0,
                1e-10,
            );
        }
    }
    out
}

fn random_pure_qubit(rng: &mut ChaCha8Rng) -> DensityMatrix {
    sample::random_pure_state(rng, 2).density()
}

fn criterion_10() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);

    // minimizer: S(ρ || Φ(ϱ)) ≥ S(ρ || Φ(ρ)) = 𝕴(ρ)
    for _ in 0..100 {
        let d = rng.random_range(2..=4);
        let rank = rng.random_range(1..=d);
        let rho = sample::random_density(&mut rng, d, rank);
        let obs = sample::random_rank1_observable(&mut rng, d);
        let ctx = MeasureContext::new(2.0, d).unwrap();
        let own = relative_entropy(&rho, &dephase(&rho, &obs, Scope::Whole).unwrap(), LogBase::TWO)
            .unwrap();
        let irr = irrealism(&rho, &obs, Scope::Whole, &ctx).unwrap();
        out.close("irrealism equals relative entropy", own, irr, 1e-9);
        for _ in 0..20 {
            let other = sample::random_density(&mut rng, d, d);
            let dephased = dephase(&other, &obs, Scope::Whole).unwrap();
            let rel = relative_entropy(&rho, &dephased, LogBase::TWO).unwrap();
            out.require("minimizer", rel >= own - 1e-9);
        }
    }

    // decomposition
    for _ in 0..500 {
        let r = rng.random_range(2..=13);
        let rank = rng.random_range(1..=2 * r);
        let rho = sample::random_bipartite_density(&mut rng, 2, r, rank);
        let obs = sample::random_rank1_observable(&mut rng, 2);
        let d = decompose_irrealism(&rho, &obs, &MeasureContext::qubit()).unwrap();
        out.close("decomposition", d.defect(), 0.0, 1e-9);
        out.require("irrealism is nonnegative", d.irrealism >= -1e-12);
    }

    // complementarity bounds
    for k in 0..500 {
        let ds = 2 + k % 2;
        let dr = rng.random_range(1..=4);
        let rank = rng.random_range(1..=ds * dr);
        let rho = sample::random_bipartite_density(&mut rng, ds, dr, rank);
        let ctx = MeasureContext::new(2.0, ds).unwrap();
        let u = sample::random_basis(&mut rng, ds);
        let fourier: Vec<Vec<Complex64>> = (0..ds)
            .map(|j| {
                (0..ds)
                    .map(|i| {
                        let mut v = Complex64::new(0.0, 0.0);
                        for (n, col) in u.iter().enumerate() {
                            let w = Complex64::from_polar(
                                1.0 / (ds as f64).sqrt(),
                                2.0 * PI * (j * n) as f64 / ds as f64,
                            );
                            v += w * col[i];
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let eig: Vec<f64> = (0..ds).map(|i| i as f64).collect();
        let a = Observable::from_basis(&eig, &u).unwrap();
        let b = Observable::from_basis(&eig, &fourier).unwrap();
        let rep = complementarity_check(&rho, &a, &b, &ctx).unwrap();
        out.require("MUB pair recognized", rep.rhs_mub.is_some());
        out.require("MUB bound", rep.mub_slack().unwrap_or(-1.0) >= -1e-9);
        out.require("general bound (MUB pair)", rep.general_slack() >= -1e-9);
        out.require(
            "general bound looser than MUB bound",
            rep.rhs_general - rep.rhs_mub.unwrap_or(f64::INFINITY) >= -1e-9,
        );
        let c = sample::random_rank1_observable(&mut rng, ds);
        let rep = complementarity_check(&rho, &a, &c, &ctx).unwrap();
        out.require("general bound (random pair)", rep.general_slack() >= -1e-9);
    }

    // qubit complementarity against σ_z
    let scenario = ClassicalScenario::aharonov_bohm(PhaseProfile::linear(1.0 / 3.0), PI / 5.0);
    for _ in 0..500 {
        let rho = random_pure_qubit(&mut rng);
        let theta = rng.random_range(0.0..=PI);
        let g = OperatorPhase::constant(rng.random_range(0.0..2.0 * PI));
        let op = scenario.sigma_ga(theta, &g).unwrap();
        let sum = realism_qubit(&rho, &sigma_z()) + realism_qubit(&rho, &op);
        out.require("qubit complementarity", sum <= 1.0 + 1e-9);
    }

    // involutory uncertainty
    for _ in 0..500 {
        let rank = rng.random_range(1..=2);
        let rho = sample::random_density(&mut rng, 2, rank);
        let theta = rng.random_range(0.0..=PI);
        let op = scenario
            .sigma_ga(theta, &OperatorPhase::constant(rng.random_range(0.0..2.0 * PI)))
            .unwrap();
        let u = involutory_uncertainty(&rho, &op).unwrap();
        out.close("uncertainty identity", u.delta * u.delta + u.expectation * u.expectation, 1.0, 1e-10);
        out.close("uncertainty closed form", u.delta, (1.0 - u.expectation.powi(2)).sqrt(), 1e-10);
        let p: f64 = rng.random_range(0.0..=1.0);
        let diag = DensityMatrix::new(ComplexMatrix::from_diagonal(&[p, 1.0 - p])).unwrap();
        let u = involutory_uncertainty(&diag, &op).unwrap();
        out.close("incoherent expectation", u.expectation, 0.0, 1e-10);
        out.close("incoherent spread", u.delta, 1.0, 1e-10);
    }
    out
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 10] = [
        ("1 sigma_z nullity", criterion_1, Duration::from_secs(1)),
        ("2 wave-operator constancy", criterion_2, Duration::from_secs(1)),
        ("3 realism jump values", criterion_3, Duration::from_secs(1)),
        ("4 jump formula", criterion_4, Duration::from_secs(1)),
        ("5 gauge invariance", criterion_5, Duration::from_secs(5)),
        ("6 chord-integral oracle", criterion_6, Duration::from_secs(5)),
        ("7 quantized-flux identities", criterion_7, Duration::from_secs(5)),
        ("8 joint-operator piecewise forms", criterion_8, Duration::from_secs(10)),
        ("9 classical limit", criterion_9, Duration::from_secs(5)),
        ("10 measure-theory suite", criterion_10, Duration::from_secs(30)),
    ];
    let mut failures = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let ok = outcome.passed() && in_time;
        if !ok {
            failures += 1;
        }
        println!(
            "{} criterion {name}: worst deviation {:.3} of tolerance, {:.3}s (budget {}s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.worst,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        for note in &outcome.notes {
            println!("    {note}");
        }
        if !in_time {
            println!("    exceeded time budget");
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
