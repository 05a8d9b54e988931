//! States over a wall `1/2 - λ_d = Σ_{j≠d} (1/2 - λ_j)`.
//!
//! A state whose spectra sit on wall `d` is an eigenvector of the diagonal
//! operator `X = Σ_l X_l` with `X_d = diag(-1, 1)` and `X_l = diag(1, -1)` for
//! `l ≠ d`. Only the eigenspace with eigenvalue `-L + 2` can reach the wall;
//! it is spanned by `|1…1⟩` and the kets with `|0⟩` exactly at `d` and one
//! other slot.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::integer_rank;
use crate::polytope::{self, StratumClass};
use crate::qstate::{self, norm_sqr, qubit_bit, PureState, SpectraPoint};

/// Accepted component of a state outside the prescribed eigenspace.
pub const EIGENSPACE_TOL: f64 = 1e-10;

/// Tolerance on `(L - k - 1)‖φ‖² = L - 2`.
pub const WALL_CONDITION_TOL: f64 = 1e-9;

/// Default tolerance for recognising wall points in [`wall_state`].
pub const WALL_POINT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WallOperator {
    #[serde(rename = "L")]
    pub num_qubits: usize,
    pub distinguished: usize,
    /// Wall normal: `-1` at the distinguished slot, `+1` elsewhere.
    pub xi: Vec<i64>,
    /// `X` in the computational basis.
    pub diagonal: Vec<i64>,
}

impl WallOperator {
    /// Eigenvalue → multiplicity.
    pub fn spectrum(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for &d in &self.diagonal {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }

    pub fn apply(&self, amplitudes: &[Complex64]) -> Vec<Complex64> {
        amplitudes
            .iter()
            .zip(&self.diagonal)
            .map(|(a, &d)| a * d as f64)
            .collect()
    }
}

fn check_distinguished(num_qubits: usize, distinguished: usize) -> Result<()> {
    if distinguished == 0 || distinguished > num_qubits {
        return Err(Error::QubitOutOfRange {
            index: distinguished,
            num_qubits,
        });
    }
    Ok(())
}

pub fn build_wall_operator(num_qubits: usize, distinguished: usize) -> Result<WallOperator> {
    if num_qubits == 0 || num_qubits > qstate::MAX_QUBITS {
        return Err(Error::invalid(format!("unsupported qubit count {num_qubits}")));
    }
    check_distinguished(num_qubits, distinguished)?;
    let xi: Vec<i64> = (1..=num_qubits)
        .map(|l| if l == distinguished { -1 } else { 1 })
        .collect();
    // X_l = diag(ξ_l, -ξ_l): ket bit 0 contributes ξ_l, bit 1 contributes -ξ_l.
    let diagonal = (0..1usize << num_qubits)
        .map(|i| {
            (1..=num_qubits)
                .map(|l| {
                    if qubit_bit(i, num_qubits, l) == 0 {
                        xi[l - 1]
                    } else {
                        -xi[l - 1]
                    }
                })
                .sum()
        })
        .collect();
    Ok(WallOperator {
        num_qubits,
        distinguished,
        xi,
        diagonal,
    })
}

/// Computational kets with `zeros` qubits in `|0⟩` and the rest in `|1⟩`.
pub fn d_subspace(num_qubits: usize, zeros: usize) -> Vec<usize> {
    (0..1usize << num_qubits)
        .filter(|&i| num_qubits - i.count_ones() as usize == zeros)
        .collect()
}

/// Basis of the eigenspace `H_{-L+2k}` of the wall operator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightSubspaceBasis {
    #[serde(rename = "L")]
    pub num_qubits: usize,
    pub k: usize,
    pub distinguished: usize,
    pub eigenvalue: i64,
    /// Computational-basis indices of the spanning kets.
    pub kets: Vec<usize>,
}

impl WeightSubspaceBasis {
    pub fn dim(&self) -> usize {
        self.kets.len()
    }
}

/// Kets `|0⟩_d ⊗ D_k^{L-1}` and `|1⟩_d ⊗ D_{k-1}^{L-1}`, where the factor
/// `D_j^{L-1}` lives on the slots other than `d`.
pub fn eigenspace_basis(num_qubits: usize, k: usize, distinguished: usize) -> Result<WeightSubspaceBasis> {
    if k > num_qubits {
        return Err(Error::invalid(format!("k = {k} exceeds L = {num_qubits}")));
    }
    if num_qubits == 0 || num_qubits > qstate::MAX_QUBITS {
        return Err(Error::invalid(format!("unsupported qubit count {num_qubits}")));
    }
    check_distinguished(num_qubits, distinguished)?;
    let rest = num_qubits - 1;
    let insert = |d_bit: usize, rest_ket: usize| -> usize {
        // Re-insert the distinguished bit into an (L-1)-qubit index.
        let low_width = num_qubits - distinguished;
        let low = rest_ket & ((1 << low_width) - 1);
        let high = rest_ket >> low_width;
        (high << (low_width + 1)) | (d_bit << low_width) | low
    };
    let mut kets: Vec<usize> = d_subspace(rest, k).into_iter().map(|r| insert(0, r)).collect();
    if k >= 1 {
        kets.extend(d_subspace(rest, k - 1).into_iter().map(|r| insert(1, r)));
    }
    kets.sort_unstable();
    Ok(WeightSubspaceBasis {
        num_qubits,
        k,
        distinguished,
        eigenvalue: 2 * k as i64 - num_qubits as i64,
        kets,
    })
}

/// Raw test of `(L - k - 1)‖φ‖² = L - 2` for an (unnormalized) vector in
/// `H_{-L+2k}`. Vectors with a component outside the eigenspace larger than
/// [`EIGENSPACE_TOL`] are rejected.
pub fn check_wall_condition(
    amplitudes: &[Complex64],
    num_qubits: usize,
    k: usize,
    distinguished: usize,
) -> Result<bool> {
    if amplitudes.len() != 1 << num_qubits {
        return Err(Error::invalid("amplitude length does not match L"));
    }
    let basis = eigenspace_basis(num_qubits, k, distinguished)?;
    let outside: f64 = amplitudes
        .iter()
        .enumerate()
        .filter(|(i, _)| basis.kets.binary_search(i).is_err())
        .map(|(_, a)| a.norm_sqr())
        .sum::<f64>()
        .sqrt();
    if outside > EIGENSPACE_TOL {
        return Err(Error::invalid(format!(
            "vector has component {outside:e} outside H_{{{}}}",
            basis.eigenvalue
        )));
    }
    let lhs = (num_qubits as f64 - k as f64 - 1.0) * norm_sqr(amplitudes);
    Ok((lhs - (num_qubits as f64 - 2.0)).abs() <= WALL_CONDITION_TOL)
}

/// Signed wall functional `-λ_d + Σ_{j≠d} λ_j`; equals `L/2 - 1` on wall `d`.
pub fn wall_functional(lambdas: &[f64], distinguished: usize) -> f64 {
    lambdas
        .iter()
        .enumerate()
        .map(|(i, &x)| if i + 1 == distinguished { -x } else { x })
        .sum()
}

/// Builds `φ = c_d |1…1⟩ + Σ_{l≠d} c_l |0 at d and l, 1 elsewhere⟩` with
/// `|c_d|² = 1/2 + λ_d`, `|c_l|² = 1/2 - λ_l` and the given phases.
///
/// The distinguished slot is the (first) tight wall of `alpha`. Every
/// coordinate must be strictly below 1/2; points with coordinates at 1/2
/// belong to the stripped subsystem.
pub fn wall_state(alpha: &SpectraPoint, phases: &[f64]) -> Result<PureState> {
    let l = alpha.num_qubits();
    if phases.len() != l {
        return Err(Error::invalid(format!("expected {l} phases, got {}", phases.len())));
    }
    if !(2..=qstate::MAX_QUBITS).contains(&l) {
        return Err(Error::invalid(format!(
            "wall_state needs 2..={} qubits",
            qstate::MAX_QUBITS
        )));
    }
    let class: StratumClass = polytope::classify(alpha, WALL_POINT_TOL)?;
    if class.k_half > 0 {
        return Err(Error::invalid(
            "wall_state requires every λ_l < 1/2; strip the coordinates at 1/2 first",
        ));
    }
    let Some(&d) = class.tight_walls.first() else {
        return Err(Error::invalid(format!("{alpha} does not lie on a wall")));
    };
    let lam = &alpha.lambdas;
    let moduli_sq: Vec<f64> = (1..=l)
        .map(|q| if q == d { 0.5 + lam[q - 1] } else { 0.5 - lam[q - 1] })
        .collect();
    if let Some(bad) = moduli_sq.iter().find(|m| !(0.0..=1.0).contains(*m)) {
        return Err(Error::invalid(format!("modulus² {bad} outside [0, 1]")));
    }
    let all_ones = (1usize << l) - 1;
    let kets: Vec<(usize, Complex64)> = (1..=l)
        .map(|q| {
            let ket = if q == d {
                all_ones
            } else {
                all_ones & !qstate::qubit_mask(l, d) & !qstate::qubit_mask(l, q)
            };
            (ket, Complex64::from_polar(moduli_sq[q - 1].sqrt(), phases[q - 1]))
        })
        .collect();
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << l];
    for (ket, c) in kets {
        amps[ket] = c;
    }
    // Σ|c|² = 1 follows from the wall equality; renormalizing would hide a bad input.
    PureState::new(l, amps)
}

/// Auditable certificate that the diagonal torus moves the relative phases
/// of the wall-fibre coefficients transitively.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorusCertificate {
    #[serde(rename = "L")]
    pub num_qubits: usize,
    /// Row `l`: phase weights induced on `c_l` by `exp(iθ_j σ_z)` on slot `j`.
    pub matrix: Vec<Vec<i64>>,
    pub rank: usize,
    /// Rank of the induced action on phases modulo the global phase.
    pub quotient_rank: usize,
    pub transitive: bool,
}

pub fn torus_transitivity_check(num_qubits: usize) -> Result<TorusCertificate> {
    if num_qubits < 3 {
        return Err(Error::invalid(format!(
            "torus certificate needs L ≥ 3, got {num_qubits}"
        )));
    }
    let l = num_qubits;
    // σ_z weight of a ket: +1 per slot in |0⟩, -1 per slot in |1⟩.
    let mut matrix = vec![vec![-1i64; l]];
    for q in 1..l {
        let mut row = vec![-1i64; l];
        row[0] = 1;
        row[q] = 1;
        matrix.push(row);
    }
    let rank = integer_rank(&matrix);
    // Quotient by the global phase direction (1, …, 1) in the image.
    let mut with_global: Vec<Vec<i64>> = matrix.clone();
    for row in with_global.iter_mut() {
        row.push(1);
    }
    let quotient_rank = integer_rank(&with_global) - 1;
    Ok(TorusCertificate {
        num_qubits,
        matrix,
        rank,
        quotient_rank,
        transitive: quotient_rank + 1 >= l,
    })
}
