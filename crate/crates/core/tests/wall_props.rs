use luspace_core::acceptance::random_wall_point;
use luspace_core::qstate::{psi_map, purity_invariants, qubit_mask, reduce_one_qubit, C64};
use luspace_core::wall::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

#[test]
fn eigenspaces_fill_the_register() {
    for l in 1..=10 {
        for d in 1..=l {
            let total: usize = (0..=l).map(|k| eigenspace_basis(l, k, d).unwrap().dim()).sum();
            assert_eq!(total, 1 << l);
        }
    }
}

#[test]
fn wall_condition_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for l in 3..=8 {
        for k in 0..=l {
            if l - k == 1 {
                continue;
            }
            let d = rng.random_range(1..=l);
            let basis = eigenspace_basis(l, k, d).unwrap();
            let mut amps = vec![C64::new(0.0, 0.0); 1 << l];
            for &i in &basis.kets {
                amps[i] = C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            }
            let n = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            amps.iter_mut().for_each(|a| *a /= n);
            assert_eq!(
                check_wall_condition(&amps, l, k, d).unwrap(),
                k == 1,
                "L = {l}, k = {k}"
            );
        }
    }
}

#[test]
fn flipped_first_eigenspace_is_w_pattern() {
    for l in 2..=8 {
        for d in 1..=l {
            let basis = eigenspace_basis(l, 1, d).unwrap();
            let mut flipped: Vec<usize> = basis.kets.iter().map(|k| k ^ qubit_mask(l, d)).collect();
            flipped.sort();
            // One |0⟩ among |1⟩s.
            let mut w: Vec<usize> = (0..l).map(|j| ((1 << l) - 1) ^ (1 << j)).collect();
            w.sort();
            assert_eq!(flipped, w, "L = {l}, d = {d}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn wall_state_properties(seed in any::<u64>(), l in 3usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.random_range(1..=l);
        let p = random_wall_point(l, d, &mut rng);
        let mut states = Vec::new();
        for _ in 0..3 {
            let phases: Vec<f64> = (0..l).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
            states.push(wall_state(&p, &phases).unwrap());
        }
        let ref_psi = psi_map(&states[0]);
        let ref_pur = purity_invariants(&states[0]);
        for s in &states {
            for q in 1..=l {
                let r = reduce_one_qubit(s, q).unwrap();
                prop_assert!(r.entries[0][1].norm() < 1e-12);
            }
            let lam = psi_map(s).lambdas;
            prop_assert!((wall_functional(&lam, d) - (l as f64 / 2.0 - 1.0)).abs() < 1e-10);
            for (a, b) in lam.iter().zip(&ref_psi.lambdas) {
                prop_assert!((a - b).abs() < 1e-12);
            }
            for (a, b) in purity_invariants(s).iter().zip(&ref_pur) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn torus_certificates() {
    for l in 3..=10 {
        let c = torus_transitivity_check(l).unwrap();
        assert_eq!(c.rank, l);
        assert!(c.transitive);
    }
}
