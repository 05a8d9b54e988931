use luspace_core::qstate::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn conj(k: &Mat2, r: &Mat2) -> Mat2 {
    mat2_mul(&mat2_mul(k, r), &mat2_adjoint(k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn momentum_equivariance_and_psi_invariance(seed in any::<u64>(), l in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state_with(l, &mut rng);
        let k = random_local_unitary(l, &mut rng);
        let t = apply_local_unitary(&s, &k).unwrap();
        let (ms, mt) = (momentum_map(&s), momentum_map(&t));
        for ((kq, a), b) in k.iter().zip(&ms.blocks).zip(&mt.blocks) {
            prop_assert!(mat2_distance(&conj(kq, a), b) < 1e-10);
        }
        let (ps, pt) = (psi_map(&s), psi_map(&t));
        for (a, b) in ps.lambdas.iter().zip(&pt.lambdas) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn purity_identity(seed in any::<u64>(), l in 1usize..=6) {
        let s = random_state(l, seed).unwrap();
        let lam = psi_map(&s).lambdas;
        for (p, x) in purity_invariants(&s).iter().zip(&lam) {
            prop_assert!((p - (0.5 + 2.0 * x * x)).abs() < 1e-12);
        }
    }

    #[test]
    fn reductions_are_states(seed in any::<u64>(), l in 1usize..=6) {
        let s = random_state(l, seed).unwrap();
        for q in 1..=l {
            let r = reduce_one_qubit(&s, q).unwrap();
            prop_assert!((r.trace() - 1.0).abs() < 1e-12);
            prop_assert!(mat2_distance(&r.entries, &mat2_adjoint(&r.entries)) < 1e-14);
            let (lo, hi) = r.eigenvalues();
            prop_assert!(lo >= -1e-12 && hi <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn partial_trace_consistency(seed in any::<u64>(), l in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state_with(l, &mut rng);
        let q = rng.random_range(1..=l);
        let (a, b, c, d): (f64, f64, f64, f64) = rng.random();
        let op: Mat2 = [
            [Complex64::new(a, 0.0), Complex64::new(c, d)],
            [Complex64::new(c, -d), Complex64::new(b, 0.0)],
        ];
        let r = reduce_one_qubit(&s, q).unwrap();
        let lhs = mat2_trace(&mat2_mul(&r.entries, &op));
        let applied = apply_on_slot(s.amplitudes(), l, q, &op);
        let rhs: Complex64 = s.amplitudes().iter().zip(&applied).map(|(x, y)| x.conj() * y).sum();
        prop_assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn state_file_round_trip(seed in any::<u64>(), l in 1usize..=5) {
        let s = random_state(l, seed).unwrap();
        let json = serde_json::to_string(&s.to_state_file()).unwrap();
        let back = PureState::from_json_str(&json).unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn non_normalized_state_rejected() {
    let amps = vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
    assert!(PureState::new(1, amps).is_err());
}

#[test]
fn non_special_unitary_rejected() {
    let s = PureState::basis(2, 0).unwrap();
    let phase = mat2_scale(&IDENTITY, Complex64::new(0.0, 1.0));
    assert!(apply_local_unitary(&s, &[phase, IDENTITY]).is_err());
}
