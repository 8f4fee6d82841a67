use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;
use proptest::prelude::*;

use quasibell::formulas::{
    analytic_average_fidelity, masfi, masfi_from_concurrence, optimal_fidelity, singlet_fraction,
};
use quasibell::linalg::{partial_trace, projector, StateVector, DENSITY_TOL};
use quasibell::noise::{apply_noise, kraus_for, NoisyTeleportation};
use quasibell::protocol::{joint_state, teleport_joint};
use quasibell::states::{build_quasi_bell, concurrence};
use quasibell::{Exposure, Family, InputQubit, NoiseKind, NoiseScenario, QuasiBellSpec};

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

fn kind() -> impl Strategy<Value = NoiseKind> {
    prop::sample::select(vec![
        NoiseKind::None,
        NoiseKind::AmplitudeDamping,
        NoiseKind::PhaseDamping,
    ])
}

fn exposure() -> impl Strategy<Value = Exposure> {
    prop::sample::select(Exposure::ALL.to_vec())
}

fn spec() -> impl Strategy<Value = QuasiBellSpec> {
    (family(), 0.0..0.98f64, 0.0..TAU).prop_map(|(f, r, t)| QuasiBellSpec::new(f, r, t).unwrap())
}

fn scenario() -> impl Strategy<Value = NoiseScenario> {
    (kind(), 0.0..=1.0f64, exposure()).prop_map(|(k, eta, e)| match k {
        NoiseKind::None => NoiseScenario::noiseless(),
        k => NoiseScenario::new(k, eta, e).unwrap(),
    })
}

fn input() -> impl Strategy<Value = InputQubit> {
    (0.0..=PI, 0.0..TAU).prop_map(|(t, p)| InputQubit::new(t, p))
}

fn random_state(dim: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), dim)
        .prop_filter("nonzero", |v| v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3)
        .prop_map(|v| {
            let n = v.iter().map(|(a, b)| a * a + b * b).sum::<f64>().sqrt();
            StateVector::normalized(v.into_iter().map(|(a, b)| C64::new(a / n, b / n)).collect()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quasi_bell_states_are_normalized(s in spec()) {
        let chi = build_quasi_bell(&s).unwrap();
        prop_assert!((chi.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tensor_is_associative(a in random_state(2), b in random_state(2), c in random_state(2)) {
        let left = a.tensor(&b).tensor(&c);
        let right = a.tensor(&b.tensor(&c));
        for (x, y) in left.amps().iter().zip(right.amps()) {
            prop_assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn partial_trace_of_a_product_recovers_factors(a in random_state(2), b in random_state(4)) {
        let pa = projector(&a).unwrap();
        let pb = projector(&b).unwrap();
        let joint = pa.tensor(&pb);
        let ra = partial_trace(&joint, &[0], &[2, 4]).unwrap();
        let rb = partial_trace(&joint, &[1], &[2, 4]).unwrap();
        prop_assert!(ra.max_abs_diff(&pa) < 1e-12);
        prop_assert!(rb.max_abs_diff(&pb) < 1e-12);
    }

    #[test]
    fn kraus_pairs_are_complete(eta in 0.0..=1.0f64) {
        for k in [NoiseKind::AmplitudeDamping, NoiseKind::PhaseDamping] {
            prop_assert!(kraus_for(k, eta).unwrap().completeness_error() < 1e-12);
        }
    }

    #[test]
    fn noise_keeps_density_operators_valid(s in spec(), sc in scenario(), i in input()) {
        let channel = projector(&build_quasi_bell(&s).unwrap()).unwrap();
        let noisy = apply_noise(&joint_state(&channel, &i), &sc).unwrap();
        prop_assert!((noisy.trace().re - 1.0).abs() < DENSITY_TOL);
        prop_assert!(noisy.hermiticity_error() < DENSITY_TOL);
        prop_assert!(noisy.min_eigenvalue() > -1e-10);
    }

    #[test]
    fn outcome_probabilities_sum_to_one(s in spec(), sc in scenario(), i in input()) {
        let tel = NoisyTeleportation::new(&s, &sc).unwrap();
        let recs = teleport_joint(&tel.joint(&i), &i, s.family).unwrap();
        let total: f64 = recs.iter().map(|r| r.probability).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelities_lie_in_unit_interval(s in spec(), sc in scenario(), i in input()) {
        let tel = NoisyTeleportation::new(&s, &sc).unwrap();
        let f = tel.fidelity(&i);
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&f));
        let a = analytic_average_fidelity(&s, &sc).unwrap();
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&a));
    }

    #[test]
    fn entanglement_measures_are_consistent(s in spec()) {
        let c = concurrence(&build_quasi_bell(&s).unwrap()).unwrap();
        prop_assert!((masfi(&s).unwrap() - masfi_from_concurrence(c)).abs() < 1e-10);
        let f = singlet_fraction(&s).unwrap();
        prop_assert!((0.25 - 1e-12..=1.0 + 1e-12).contains(&f));
        prop_assert!((optimal_fidelity(&s).unwrap() - (2.0 * f + 1.0) / 3.0).abs() < 1e-15);
    }

    #[test]
    fn phi_families_swap_under_quarter_turn(r in 0.0..0.98f64, t in 0.0..TAU, sc in scenario()) {
        let a = analytic_average_fidelity(&QuasiBellSpec::new(Family::PhiPlus, r, t).unwrap(), &sc).unwrap();
        let b = analytic_average_fidelity(&QuasiBellSpec::new(Family::PhiMinus, r, t + PI / 2.0).unwrap(), &sc).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }
}
