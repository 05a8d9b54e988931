//! Acceptance criteria as runnable checks, shared by the `acceptance` test
//! target and the CLI `selftest` subcommand.

use std::time::Instant;

use itertools::Itertools;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dimension::dim_at;
use crate::fiberlab::{numeric_dim, rank_dmu, OracleConfig};
use crate::linalg::RANK_TOL;
use crate::polytope::{self, TIGHT_TOL};
use crate::qstate::{
    self, apply_local_unitary, mat2_adjoint, mat2_distance, mat2_mul, mat2_scale, psi_map, random_local_unitary,
    random_state_with, reduce_one_qubit, SpectraPoint, C64,
};
use crate::stability::{four_qubit_family, orbit_dimensions, stable_state};
use crate::wall::{build_wall_operator, eigenspace_basis, torus_transitivity_check, wall_state};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: f64,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({:.2}s / {:.0}s) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

/// Sample counts. `full()` uses the counts stated in the criteria;
/// `reduced()` is a quick smoke run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub random_points: usize,
    pub oracle_targets: usize,
    pub oracle_samples: usize,
    pub wall_points: usize,
    pub property_pairs: usize,
    pub haar_states: usize,
    pub duality_states: usize,
}

impl SuiteConfig {
    pub fn full() -> Self {
        Self {
            seed: 20_240_601,
            random_points: 5,
            oracle_targets: 5,
            oracle_samples: 5,
            wall_points: 100,
            property_pairs: 1000,
            haar_states: 1000,
            duality_states: 200,
        }
    }

    pub fn reduced() -> Self {
        Self {
            random_points: 5,
            oracle_targets: 2,
            oracle_samples: 2,
            wall_points: 20,
            property_pairs: 100,
            haar_states: 100,
            duality_states: 20,
            ..Self::full()
        }
    }
}

pub const CRITERIA: [(u8, &str, f64); 8] = [
    (1, "three-qubit values", 1.0),
    (2, "four-qubit table", 1.0),
    (3, "polytope combinatorics", 30.0),
    (4, "wall-operator spectrum", 5.0),
    (5, "oracle agreement", 600.0),
    (6, "stable states", 60.0),
    (7, "wall certificate", 30.0),
    (8, "property suites", 120.0),
];

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        // Negated so that NaN fails.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Uniform point of `[0.05, 0.45]^L` at least `0.02` inside every wall.
pub fn random_interior<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> SpectraPoint {
    let model = polytope::PolytopeModel::new(num_qubits);
    loop {
        let lam: Vec<f64> = (0..num_qubits).map(|_| rng.random_range(0.05..0.45)).collect();
        if model.inequalities().iter().all(|ineq| ineq.slack(&lam) >= 0.02) {
            return SpectraPoint::new(lam).expect("finite");
        }
    }
}

/// Random point on a wall with distinguished slot `d`: `p_d = Σ_{j≠d} p_j`, `λ = 1/2 - p`.
pub fn random_wall_point<R: Rng + ?Sized>(num_qubits: usize, d: usize, rng: &mut R) -> SpectraPoint {
    let total: f64 = rng.random_range(0.05..0.5);
    let w: Vec<f64> = (1..num_qubits).map(|_| rng.random_range(0.05..1.0)).collect();
    let s: f64 = w.iter().sum();
    let mut p: Vec<f64> = w.iter().map(|x| x * total / s).collect();
    let sum: f64 = p.iter().sum();
    p.insert(d - 1, sum);
    SpectraPoint::new(p.iter().map(|x| 0.5 - x).collect()).expect("finite")
}

/// Random interior point with the listed coordinates set to `value`.
fn with_fixed<R: Rng + ?Sized>(num_qubits: usize, fixed: &[usize], value: f64, rng: &mut R) -> SpectraPoint {
    let model = polytope::PolytopeModel::new(num_qubits);
    loop {
        let mut lam: Vec<f64> = (0..num_qubits).map(|_| rng.random_range(0.05..0.45)).collect();
        for &i in fixed {
            lam[i - 1] = value;
        }
        let ok = model.inequalities().iter().all(|ineq| {
            let s = ineq.slack(&lam);
            // Constraints forced tight by the fixed coordinates are allowed.
            s >= 0.02 || (ineq.kind != polytope::InequalityKind::Wall && s.abs() < 1e-15)
        });
        if ok {
            return SpectraPoint::new(lam).expect("finite");
        }
    }
}

fn dim_of(p: &SpectraPoint) -> std::result::Result<u64, String> {
    dim_at(p, TIGHT_TOL)
        .map(|(_, r)| r.dim_m)
        .map_err(|e| format!("{p}: {e}"))
}

fn criterion_1(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Check {
    let n = cfg.random_points;
    for _ in 0..n {
        let p = random_interior(3, rng);
        let (_, r) = dim_at(&p, TIGHT_TOL).map_err(err)?;
        ensure!(
            r.dim_m == 2 && r.num_invariants == 5,
            "interior {p}: dim {} invariants {}",
            r.dim_m,
            r.num_invariants
        );
    }
    let mut types = 0;
    for l in 1..=3 {
        for _ in 0..n {
            let zero = with_fixed(3, &[l], 0.0, rng);
            ensure!(dim_of(&zero)? == 0, "λ_{l} = 0 point {zero}");
            let wall = random_wall_point(3, l, rng);
            ensure!(dim_of(&wall)? == 0, "wall {l} point {wall}");
            // The λ_l = 1/2 face of the three-qubit polytope forces the other two coordinates equal.
            let a: f64 = rng.random_range(0.0..0.5);
            let mut lam = vec![a; 3];
            lam[l - 1] = 0.5;
            let half = SpectraPoint::new(lam).map_err(err)?;
            ensure!(dim_of(&half)? == 0, "λ_{l} = 1/2 point {half}");
        }
        types += 3;
    }
    Ok(format!(
        "{n} interior points → 2 (5 invariants); {types} boundary facets × {n} points → 0"
    ))
}

fn criterion_2(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Check {
    let n = cfg.random_points;
    for _ in 0..n {
        let p = random_interior(4, rng);
        ensure!(dim_of(&p)? == 14, "interior {p}");
    }
    for k in 1..=4 {
        let want = [12, 10, 8, 6][k - 1];
        for zeros in (1..=4).combinations(k) {
            for _ in 0..n {
                let p = with_fixed(4, &zeros, 0.0, rng);
                ensure!(dim_of(&p)? == want, "{k} zero(s) at {zeros:?}: {p}");
            }
        }
    }
    let ghz = SpectraPoint::from_exact(vec![Rational64::from_integer(0); 4]).map_err(err)?;
    ensure!(dim_of(&ghz)? == 6, "v_GHZ");
    for d in 1..=4 {
        for _ in 0..n {
            let p = random_wall_point(4, d, rng);
            ensure!(dim_of(&p)? == 0, "wall {d}: {p}");
        }
    }
    for h in 1..=4 {
        let rest: Vec<usize> = (1..=4).filter(|&i| i != h).collect();
        for _ in 0..n {
            let r = random_interior(3, rng);
            let mut lam = r.lambdas.clone();
            lam.insert(h - 1, 0.5);
            let p = SpectraPoint::new(lam).map_err(err)?;
            ensure!(dim_of(&p)? == 2, "λ_{h} = 1/2 face interior {p}");

            let mut z = with_fixed(3, &[1 + rng.random_range(0..3)], 0.0, rng).lambdas;
            z.insert(h - 1, 0.5);
            let p = SpectraPoint::new(z).map_err(err)?;
            ensure!(dim_of(&p)? == 0, "λ_{h} = 1/2 face, residual zero {p}");

            let mut w = random_wall_point(3, 1 + rng.random_range(0..3), rng).lambdas;
            w.insert(h - 1, 0.5);
            let p = SpectraPoint::new(w).map_err(err)?;
            ensure!(dim_of(&p)? == 0, "λ_{h} = 1/2 face, residual wall {p}");
        }
        for &other in &rest {
            let mut lam = vec![0.5; 4];
            let a = rng.random_range(0.05..0.45);
            for &j in &rest {
                if j != other {
                    lam[j - 1] = a;
                }
            }
            let p = SpectraPoint::new(lam).map_err(err)?;
            ensure!(dim_of(&p)? == 0, "two coordinates at 1/2: {p}");
        }
    }
    Ok("interior 14; zeros 12/10/8/6 on all strata; walls 0; λ=1/2 face 2, its boundary 0".into())
}

const FOUR_QUBIT_VERTICES: [(&str, [i64; 4]); 12] = [
    ("v_SEP", [1, 1, 1, 1]),
    ("v_B1", [0, 0, 1, 1]),
    ("v_B2", [0, 1, 0, 1]),
    ("v_B3", [0, 1, 1, 0]),
    ("v_B4", [1, 0, 0, 1]),
    ("v_B5", [1, 0, 1, 0]),
    ("v_B6", [1, 1, 0, 0]),
    ("v_4", [0, 0, 0, 1]),
    ("v_3", [0, 0, 1, 0]),
    ("v_2", [0, 1, 0, 0]),
    ("v_1", [1, 0, 0, 0]),
    ("v_GHZ", [0, 0, 0, 0]),
];

fn criterion_3(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Check {
    for l in 2..=12 {
        let v = polytope::vertices(l).map_err(err)?;
        let want = (1usize << l) - l;
        ensure!(
            v.vertices.len() == want,
            "L = {l}: {} vertices, expected {want}",
            v.vertices.len()
        );
    }
    for l in 2..=6 {
        let closed = polytope::vertices(l).map_err(err)?.coordinate_set();
        let oracle = polytope::vertices_oracle(l).map_err(err)?.coordinate_set();
        ensure!(closed == oracle, "L = {l}: oracle vertex set differs");
    }
    let v4 = polytope::vertices(4).map_err(err)?;
    let half = Rational64::new(1, 2);
    for (got, (label, bits)) in v4.vertices.iter().zip(FOUR_QUBIT_VERTICES) {
        let lam: Vec<Rational64> = bits.iter().map(|&b| half * b).collect();
        ensure!(
            got.label == label && got.lambdas == lam,
            "L = 4 vertex {} ≠ {label}",
            got.label
        );
    }
    for l in 4..=8 {
        let f = polytope::facets(l).map_err(err)?;
        ensure!(f.len() == 3 * l, "L = {l}: {} facets", f.len());
    }
    Ok("2^L - L vertices for L=2..12; oracle agrees L=2..6; four-qubit labels; 3L facets L=4..8".into())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_4(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Check {
    for l in 1..=10 {
        for d in 1..=l {
            let x = build_wall_operator(l, d).map_err(err)?;
            let spec = x.spectrum();
            let want: std::collections::BTreeMap<i64, usize> =
                (0..=l).map(|k| (2 * k as i64 - l as i64, binomial(l, k))).collect();
            ensure!(spec == want, "L = {l}, d = {d}: spectrum {spec:?}");
            let e = eigenspace_basis(l, 1, d).map_err(err)?;
            ensure!(e.dim() == l, "L = {l}, d = {d}: dim H_(-L+2) = {}", e.dim());
        }
    }
    Ok("spectra {-L+2k} with multiplicity C(L,k) and dim H_(-L+2) = L for L=1..10, every slot".into())
}

fn criterion_5(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Check {
    let oracle = OracleConfig {
        n_samples: cfg.oracle_samples,
        seed: cfg.seed,
        rank_tol: RANK_TOL,
        ..Default::default()
    };
    let mut targets = Vec::new();
    for l in 3..=5 {
        for _ in 0..cfg.oracle_targets {
            targets.push(random_interior(l, rng));
        }
    }
    for k in 1..=4 {
        for zeros in (1..=4).combinations(k) {
            targets.push(with_fixed(4, &zeros, 0.0, rng));
        }
    }
    targets.push(SpectraPoint::from_exact(vec![Rational64::from_integer(0); 5]).map_err(err)?);
    let mut checked = 0;
    for t in &targets {
        let want = dim_of(t)?;
        let e = numeric_dim(t, &oracle).map_err(|e| format!("{t}: {e}"))?;
        ensure!(
            e.dim_estimate == Some(want as i64),
            "{t}: estimate {:?} ({:?}), closed form {want}",
            e.dim_estimate,
            e.status
        );
        checked += 1;
    }
    Ok(format!(
        "{checked} targets, {} samples each, all equal to the closed form (v_GHZ → 6 at L=4, 32 at L=5)",
        cfg.oracle_samples
    ))
}

fn criterion_6(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Check {
    let half_id = mat2_scale(&qstate::IDENTITY, C64::new(0.5, 0.0));
    let mut worst: f64 = 0.0;
    for l in 4..=8 {
        let s = stable_state(l, None).map_err(err)?;
        for q in 1..=l {
            let r = reduce_one_qubit(&s, q).map_err(err)?;
            worst = worst.max(mat2_distance(&r.entries, &half_id));
        }
    }
    ensure!(worst <= 1e-12, "reduction deviation {worst:e}");
    for l in 4..=6 {
        let o = orbit_dimensions(&stable_state(l, None).map_err(err)?, RANK_TOL).map_err(err)?;
        ensure!(
            o.dim_g_orbit_complex == 3 * l,
            "L = {l}: complex rank {}",
            o.dim_g_orbit_complex
        );
    }
    for (alpha, expect) in [
        (-2.0, true),
        (0.5, true),
        (2.0, true),
        (5.0, true),
        (1.0, false),
        (-3.0, false),
    ] {
        let o = orbit_dimensions(&four_qubit_family(alpha).map_err(err)?, RANK_TOL).map_err(err)?;
        ensure!(
            (o.dim_g_orbit_complex == 12) == expect,
            "alpha = {alpha}: complex rank {}",
            o.dim_g_orbit_complex
        );
        ensure!(
            expect || stable_state(4, Some(alpha)).is_err(),
            "alpha = {alpha} accepted"
        );
    }
    Ok(format!(
        "reductions I/2 within {worst:.1e} (L=4..8); rank 3L (L=4..6); alpha sweep as expected"
    ))
}

fn criterion_7(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Check {
    for l in 3..=10 {
        let c = torus_transitivity_check(l).map_err(err)?;
        ensure!(
            c.rank == l && c.transitive,
            "L = {l}: rank {} transitive {}",
            c.rank,
            c.transitive
        );
    }
    let mut worst: f64 = 0.0;
    for l in 3..=5 {
        for _ in 0..cfg.wall_points {
            let d = rng.random_range(1..=l);
            let p = random_wall_point(l, d, rng);
            let phases: Vec<f64> = (0..l).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
            let s = wall_state(&p, &phases).map_err(|e| format!("{p}: {e}"))?;
            let got = psi_map(&s);
            for (a, b) in got.lambdas.iter().zip(&p.lambdas) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    ensure!(worst <= 1e-10, "wall_state spectrum error {worst:e}");
    Ok(format!(
        "torus rank L for L=3..10; {} wall points per L, max error {worst:.1e}",
        cfg.wall_points
    ))
}

fn criterion_8(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Check {
    let mut eq_err: f64 = 0.0;
    let mut inv_err: f64 = 0.0;
    let mut pur_err: f64 = 0.0;
    for i in 0..cfg.property_pairs {
        let l = 2 + i % 4;
        let s = random_state_with(l, rng);
        let k = random_local_unitary(l, rng);
        let t = apply_local_unitary(&s, &k).map_err(err)?;
        let (ps, pt) = (psi_map(&s), psi_map(&t));
        for q in 1..=l {
            let r = reduce_one_qubit(&s, q).map_err(err)?;
            let rt = reduce_one_qubit(&t, q).map_err(err)?;
            let conj = mat2_mul(&mat2_mul(&k[q - 1], &r.entries), &mat2_adjoint(&k[q - 1]));
            eq_err = eq_err.max(mat2_distance(&conj, &rt.entries));
            inv_err = inv_err.max((ps.lambdas[q - 1] - pt.lambdas[q - 1]).abs());
            let lam = ps.lambdas[q - 1];
            pur_err = pur_err.max((r.purity() - (0.5 + 2.0 * lam * lam)).abs());
        }
    }
    ensure!(eq_err <= 1e-10, "equivariance error {eq_err:e}");
    ensure!(inv_err <= 1e-10, "Ψ-invariance error {inv_err:e}");
    ensure!(pur_err <= 1e-12, "purity identity error {pur_err:e}");
    for l in 2..=5 {
        for _ in 0..cfg.haar_states {
            let p = psi_map(&random_state_with(l, rng));
            let m = polytope::membership_with_tol(&p, 1e-9).map_err(err)?;
            ensure!(m.member, "Ψ of a Haar state outside the polytope: {p}");
        }
    }
    for i in 0..cfg.duality_states {
        let l = 2 + i % 4;
        let s = random_state_with(l, rng);
        let r = rank_dmu(&s, RANK_TOL).map_err(err)?.rank;
        let iso = orbit_dimensions(&s, RANK_TOL).map_err(err)?.dim_isotropy_algebra;
        ensure!(r + iso == 3 * l, "L = {l}: rank dμ {r} + isotropy {iso} ≠ {}", 3 * l);
    }
    Ok(format!(
        "{} pairs (equivariance {eq_err:.1e}, invariance {inv_err:.1e}, purity {pur_err:.1e}); {} Haar states per L in Ψ; {} duality checks",
        cfg.property_pairs, cfg.haar_states, cfg.duality_states
    ))
}

/// Runs one criterion; `passed` also requires the stated time limit.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> Option<CriterionResult> {
    let &(id, name, limit) = CRITERIA.iter().find(|c| c.0 == id)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(id as u64));
    let start = Instant::now();
    let outcome = match id {
        1 => criterion_1(cfg, &mut rng),
        2 => criterion_2(cfg, &mut rng),
        3 => criterion_3(cfg, &mut rng),
        4 => criterion_4(cfg, &mut rng),
        5 => criterion_5(cfg, &mut rng),
        6 => criterion_6(cfg, &mut rng),
        7 => criterion_7(cfg, &mut rng),
        _ => criterion_8(cfg, &mut rng),
    };
    let seconds = start.elapsed().as_secs_f64();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && seconds > limit {
        passed = false;
        detail = format!("exceeded time limit: {detail}");
    }
    Some(CriterionResult {
        id,
        name,
        passed,
        detail,
        seconds,
        limit_seconds: limit,
    })
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0, cfg)).collect()
}
