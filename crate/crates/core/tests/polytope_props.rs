use luspace_core::polytope::*;
use luspace_core::qstate::{psi_map, random_state, SpectraPoint};
use num_rational::Rational64;
use proptest::prelude::*;

#[test]
fn closed_form_matches_oracle() {
    for l in 2..=6 {
        assert_eq!(
            vertices(l).unwrap().coordinate_set(),
            vertices_oracle(l).unwrap().coordinate_set(),
            "L = {l}"
        );
    }
}

#[test]
fn vertex_counts() {
    for l in 2..=12 {
        assert_eq!(vertices(l).unwrap().vertices.len(), (1 << l) - l);
        assert_eq!(vertex_count(l), ((1u64 << l) - l as u64));
    }
}

#[test]
fn no_vertex_with_single_zero() {
    for l in 2..=10 {
        for v in vertices(l).unwrap().vertices {
            assert_ne!(
                v.lambdas.iter().filter(|x| **x == Rational64::from_integer(0)).count(),
                1,
                "{}",
                v.label
            );
        }
    }
}

#[test]
fn haar_images_are_members() {
    for l in 2..=5 {
        for seed in 0..1000 {
            let p = psi_map(&random_state(l, seed).unwrap());
            assert!(membership(&p).unwrap().member, "L = {l}, seed {seed}: {p}");
        }
    }
}

#[test]
fn vertices_are_members_and_tight() {
    for l in 3..=7 {
        let model = PolytopeModel::new(l);
        for v in vertices(l).unwrap().vertices {
            let tight = model
                .inequalities()
                .iter()
                .filter(|i| i.slack(&v.lambdas) == Rational64::from_integer(0))
                .count();
            assert!(tight >= l, "{} has only {tight} tight constraints", v.label);
            assert!(model
                .inequalities()
                .iter()
                .all(|i| i.slack(&v.lambdas) >= Rational64::from_integer(0)));
        }
    }
}

fn spectra(l: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(
        prop_oneof![
            Just(0.0),
            Just(0.5),
            0.0f64..0.5,
            (1u32..10).prop_map(|k| k as f64 / 20.0)
        ],
        l,
    )
}

proptest! {
    #[test]
    fn classify_permutation_equivariant(lam in (3usize..=6).prop_flat_map(spectra), perm_seed in any::<u64>()) {
        let p = SpectraPoint::new(lam.clone()).unwrap();
        prop_assume!(membership(&p).unwrap().member);
        let l = lam.len();
        let mut perm: Vec<usize> = (0..l).collect();
        let mut s = perm_seed;
        for i in (1..l).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        // New coordinate i is old coordinate perm[i].
        let q = SpectraPoint::new(perm.iter().map(|&j| lam[j]).collect()).unwrap();
        let a = classify(&p, TIGHT_TOL).unwrap();
        let b = classify(&q, TIGHT_TOL).unwrap();
        prop_assert_eq!(a.k_half, b.k_half);
        prop_assert_eq!(a.k_zero, b.k_zero);
        prop_assert_eq!(a.residual_l, b.residual_l);
        let mut mapped: Vec<usize> = b.tight_walls.iter().map(|&i| perm[i - 1] + 1).collect();
        mapped.sort();
        prop_assert_eq!(mapped, a.tight_walls);
    }

    #[test]
    fn exact_and_float_agree_on_dyadics(num in prop::collection::vec(0i64..=8, 3..=6)) {
        let exact: Vec<Rational64> = num.iter().map(|&n| Rational64::new(n, 16)).collect();
        let p = SpectraPoint::from_exact(exact).unwrap();
        let f = SpectraPoint::new(p.lambdas.clone()).unwrap();
        let (me, mf) = (membership(&p).unwrap(), membership(&f).unwrap());
        prop_assert_eq!(me.member, mf.member);
        if me.member {
            let (a, b) = (classify(&p, TIGHT_TOL).unwrap(), classify(&f, TIGHT_TOL).unwrap());
            prop_assert_eq!((a.k_half, a.tight_walls, a.k_zero), (b.k_half, b.tight_walls, b.k_zero));
        }
    }
}
