//! Orbit and isotropy dimensions from the infinitesimal action of
//! `su(2)^L` and `sl(2, C)^L`, and the stable states with all one-qubit
//! reductions maximally mixed.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{complex_rank, real_rank, realify, NumericRank};
use crate::qstate::{
    self, apply_on_slot, mat2_distance, mat2_mul, mat2_scale, mat2_trace, reduce_one_qubit, Mat2, PureState, C64,
    SIGMA_X, SIGMA_Y, SIGMA_Z,
};

/// Accepted deviation of a reduction from `I/2` when testing stability.
pub const MIXED_TOL: f64 = 1e-10;

const I: C64 = C64::new(0.0, 1.0);

pub const E12: Mat2 = [
    [C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
    [C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
];
pub const E21: Mat2 = [
    [C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
    [C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
];
pub const H: Mat2 = SIGMA_Z;

/// A single-qubit operator acting on one tensor slot (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct SlotOperator {
    pub slot: usize,
    pub name: &'static str,
    pub matrix: Mat2,
}

impl SlotOperator {
    pub fn apply(&self, state: &[C64], num_qubits: usize) -> Vec<C64> {
        apply_on_slot(state, num_qubits, self.slot, &self.matrix)
    }
}

/// Bases of `su(2)^L` (`iσ_x, iσ_y, iσ_z` per slot) and of its
/// complexification (`E12, E21, H` per slot), slot-major.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub num_qubits: usize,
    pub compact: Vec<SlotOperator>,
    pub complex: Vec<SlotOperator>,
}

pub fn generator_set(num_qubits: usize) -> Result<GeneratorSet> {
    if num_qubits == 0 || num_qubits > qstate::MAX_QUBITS {
        return Err(Error::invalid(format!("unsupported qubit count {num_qubits}")));
    }
    let mut compact = Vec::with_capacity(3 * num_qubits);
    let mut complex = Vec::with_capacity(3 * num_qubits);
    for slot in 1..=num_qubits {
        for (name, s) in [("X", SIGMA_X), ("Y", SIGMA_Y), ("Z", SIGMA_Z)] {
            compact.push(SlotOperator {
                slot,
                name,
                matrix: mat2_scale(&s, I),
            });
        }
        for (name, m) in [("E12", E12), ("E21", E21), ("H", H)] {
            complex.push(SlotOperator { slot, name, matrix: m });
        }
    }
    Ok(GeneratorSet {
        num_qubits,
        compact,
        complex,
    })
}

/// `⟨A|B⟩ = -½ tr(AB)` for the full `2^L`-dimensional operators `A`, `B`.
pub fn compact_inner(a: &SlotOperator, b: &SlotOperator, num_qubits: usize) -> f64 {
    let l = num_qubits as i32;
    if a.slot == b.slot {
        -0.5 * mat2_trace(&mat2_mul(&a.matrix, &b.matrix)).re * 2f64.powi(l - 1)
    } else {
        -0.5 * (mat2_trace(&a.matrix) * mat2_trace(&b.matrix)).re * 2f64.powi(l - 2)
    }
}

/// `v - ⟨φ|v⟩ φ`: the component tangent to the projective space.
pub fn project_out(state: &[C64], v: &[C64]) -> Vec<C64> {
    let overlap: C64 = state.iter().zip(v).map(|(a, b)| a.conj() * b).sum();
    v.iter().zip(state).map(|(x, s)| x - overlap * s).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    #[serde(rename = "dim_K_orbit")]
    pub dim_k_orbit: usize,
    #[serde(rename = "dim_G_orbit_complex")]
    pub dim_g_orbit_complex: usize,
    pub dim_isotropy_algebra: usize,
    pub compact_rank: NumericRank,
    pub complex_rank: NumericRank,
}

/// Real rank of the projected actions of the compact generators on the given slots.
pub fn compact_orbit_rank(state: &PureState, slots: &[usize], rank_tol: f64) -> Result<NumericRank> {
    let l = state.num_qubits();
    let gens = generator_set(l)?;
    let cols: Vec<Vec<f64>> = gens
        .compact
        .iter()
        .filter(|g| slots.contains(&g.slot))
        .map(|g| realify(&project_out(state.amplitudes(), &g.apply(state.amplitudes(), l))))
        .collect();
    real_rank(&cols, rank_tol)
}

/// Orbit dimensions of `K = SU(2)^L` (real) and `G = SL(2, C)^L` (complex)
/// through `[φ]`. A generator whose action is a multiple of `iφ` counts as
/// isotropy since states are projective.
pub fn orbit_dimensions(state: &PureState, rank_tol: f64) -> Result<OrbitReport> {
    let l = state.num_qubits();
    let gens = generator_set(l)?;
    let all: Vec<usize> = (1..=l).collect();
    let compact = compact_orbit_rank(state, &all, rank_tol)?;
    let cols: Vec<Vec<C64>> = gens
        .complex
        .iter()
        .map(|g| project_out(state.amplitudes(), &g.apply(state.amplitudes(), l)))
        .collect();
    let complex = complex_rank(&cols, rank_tol)?;
    Ok(OrbitReport {
        dim_k_orbit: compact.rank,
        dim_g_orbit_complex: complex.rank,
        dim_isotropy_algebra: 3 * l - compact.rank,
        compact_rank: compact,
        complex_rank: complex,
    })
}

fn stable_kets(num_qubits: usize, ghz_weight: f64) -> Result<PureState> {
    let l = num_qubits;
    let all = (1usize << l) - 1;
    let one = Complex64::new(1.0, 0.0);
    let w = Complex64::new(ghz_weight, 0.0);
    let mut kets = vec![(0usize, w), (all, w)];
    for q in 2..=l {
        let ket = qstate::qubit_mask(l, 1) | qstate::qubit_mask(l, q);
        kets.push((ket, one));
        kets.push((all ^ ket, one));
    }
    PureState::from_kets(l, &kets)
}

/// `α(|0000⟩+|1111⟩) + (|1100⟩+|0011⟩) + (|1010⟩+|0101⟩) + (|1001⟩+|0110⟩)`,
/// normalized, for any `α` (including the excluded values, for probing).
pub fn four_qubit_family(alpha: f64) -> Result<PureState> {
    if !alpha.is_finite() {
        return Err(Error::invalid("alpha must be finite"));
    }
    stable_kets(4, alpha)
}

/// Excluded weights of the four-qubit family.
pub const EXCLUDED_ALPHAS: [f64; 2] = [1.0, -3.0];

/// Default weight of the GHZ pair for `L = 4`.
pub const DEFAULT_ALPHA: f64 = 2.0;

/// GHZ pair plus, for every `l ≥ 2`, the ket with `|1⟩` exactly at slots
/// `{1, l}` together with its bitwise complement. For `L = 4` the GHZ pair
/// carries the weight `alpha` (default 2; 1 and -3 are rejected).
pub fn stable_state(num_qubits: usize, alpha: Option<f64>) -> Result<PureState> {
    match num_qubits {
        0..=3 => Err(Error::invalid(format!("stable states need L ≥ 4, got {num_qubits}"))),
        4 => {
            let a = alpha.unwrap_or(DEFAULT_ALPHA);
            if EXCLUDED_ALPHAS.iter().any(|&x| (a - x).abs() < 1e-12) {
                return Err(Error::invalid(format!(
                    "alpha = {a} is excluded for the four-qubit stable state (alpha ∉ {{1, -3}})"
                )));
            }
            four_qubit_family(a)
        }
        l if l > qstate::MAX_QUBITS => Err(Error::invalid(format!("unsupported qubit count {l}"))),
        l => {
            if alpha.is_some() {
                return Err(Error::invalid("alpha only parametrizes the four-qubit state"));
            }
            stable_kets(l, 1.0)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub k1: usize,
    /// First `k1` reductions equal `I/2` within [`MIXED_TOL`].
    pub maximally_mixed: bool,
    pub max_mixed_deviation: f64,
    /// Real dimension of the `SU(2)^{k1}` orbit.
    pub k1_orbit_dim: usize,
    pub k1_rank: NumericRank,
    pub full: OrbitReport,
}

/// Stability for the action of `SU(2)^{k1}` on the first `k1` slots: the
/// reductions on those slots vanish in the momentum map and the orbit has
/// full dimension `3 k1`.
pub fn verify_stable(state: &PureState, k1: usize, rank_tol: f64) -> Result<StabilityVerdict> {
    let l = state.num_qubits();
    if k1 == 0 || k1 > l {
        return Err(Error::invalid(format!("k1 must lie in 1..={l}, got {k1}")));
    }
    let mut deviation: f64 = 0.0;
    for q in 1..=k1 {
        let r = reduce_one_qubit(state, q)?;
        deviation = deviation.max(mat2_distance(
            &r.entries,
            &mat2_scale(&qstate::IDENTITY, C64::new(0.5, 0.0)),
        ));
    }
    let maximally_mixed = deviation <= MIXED_TOL;
    let slots: Vec<usize> = (1..=k1).collect();
    let k1_rank = compact_orbit_rank(state, &slots, rank_tol)?;
    let full = orbit_dimensions(state, rank_tol)?;
    Ok(StabilityVerdict {
        stable: maximally_mixed && k1_rank.rank == 3 * k1,
        k1,
        maximally_mixed,
        max_mixed_deviation: deviation,
        k1_orbit_dim: k1_rank.rank,
        k1_rank,
        full,
    })
}
