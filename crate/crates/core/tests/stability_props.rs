use luspace_core::fiberlab::rank_dmu;
use luspace_core::linalg::RANK_TOL;
use luspace_core::qstate::{mat2_distance, mat2_scale, random_state, reduce_one_qubit, C64, IDENTITY};
use luspace_core::stability::*;

#[test]
fn stable_states_are_maximally_mixed() {
    let half = mat2_scale(&IDENTITY, C64::new(0.5, 0.0));
    for l in 4..=8 {
        let s = stable_state(l, None).unwrap();
        for q in 1..=l {
            assert!(mat2_distance(&reduce_one_qubit(&s, q).unwrap().entries, &half) < 1e-12);
        }
        let v = verify_stable(&s, l, RANK_TOL).unwrap();
        assert!(v.stable, "L = {l}");
    }
}

#[test]
fn four_qubit_alpha_sweep() {
    for alpha in [-2.0, 0.5, 2.0, 5.0] {
        let v = verify_stable(&stable_state(4, Some(alpha)).unwrap(), 4, RANK_TOL).unwrap();
        assert!(v.stable, "alpha = {alpha}");
    }
    for alpha in EXCLUDED_ALPHAS {
        assert!(stable_state(4, Some(alpha)).is_err());
        let v = verify_stable(&four_qubit_family(alpha).unwrap(), 4, RANK_TOL).unwrap();
        assert!(v.maximally_mixed && !v.stable, "alpha = {alpha}");
    }
}

#[test]
fn pair_only_state_reported() {
    let v = verify_stable(&four_qubit_family(0.0).unwrap(), 4, RANK_TOL).unwrap();
    assert!(v.maximally_mixed);
    assert_eq!(v.stable, v.k1_orbit_dim == 12);
}

#[test]
fn complex_rank_at_stable_states() {
    for l in 4..=6 {
        let o = orbit_dimensions(&stable_state(l, None).unwrap(), RANK_TOL).unwrap();
        assert_eq!((o.dim_k_orbit, o.dim_g_orbit_complex), (3 * l, 3 * l));
    }
}

#[test]
fn partial_reduction_ranks() {
    for l in 4..=5 {
        let s = stable_state(l, None).unwrap();
        for k in 1..=l {
            let slots: Vec<usize> = (1..=k).collect();
            assert_eq!(
                compact_orbit_rank(&s, &slots, RANK_TOL).unwrap().rank,
                3 * k,
                "L = {l}, k = {k}"
            );
        }
    }
}

#[test]
fn rank_duality() {
    for seed in 0..200u64 {
        let l = 2 + (seed % 3) as usize;
        let s = random_state(l, seed).unwrap();
        let r = rank_dmu(&s, RANK_TOL).unwrap().rank;
        let iso = orbit_dimensions(&s, RANK_TOL).unwrap().dim_isotropy_algebra;
        assert_eq!(r + iso, 3 * l, "seed {seed}");
    }
}
