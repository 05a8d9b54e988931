//! Pure states of `L` qubits and their one-qubit reductions.
//!
//! Basis index convention: qubit 1 is the most significant bit, so the ket
//! `|b_1 … b_L⟩` sits at index `Σ_l b_l 2^(L-l)`. All public qubit labels are
//! 1-based.

use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// A 2×2 complex matrix in row-major order.
pub type Mat2 = [[C64; 2]; 2];

/// Accepted deviation of `‖φ‖` from 1 on input.
pub const NORM_TOL: f64 = 1e-9;

/// Accepted deviation of `g g†` from `I` (and of `det g` from 1) for local factors.
pub const UNITARY_TOL: f64 = 1e-10;

/// Largest register supported by [`random_state`] and the dense routines.
pub const MAX_QUBITS: usize = 12;

const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub const IDENTITY: Mat2 = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
pub const SIGMA_X: Mat2 = [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
pub const SIGMA_Y: Mat2 = [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]];
pub const SIGMA_Z: Mat2 = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]];

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[C64::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat2_adjoint(a: &Mat2) -> Mat2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

pub fn mat2_scale(a: &Mat2, s: C64) -> Mat2 {
    [[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]]
}

pub fn mat2_trace(a: &Mat2) -> C64 {
    a[0][0] + a[1][1]
}

/// Largest entrywise modulus of `a - b`.
pub fn mat2_distance(a: &Mat2, b: &Mat2) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            d = d.max((a[i][j] - b[i][j]).norm());
        }
    }
    d
}

/// Bit mask selecting `qubit` (1-based) in a basis index of an `L`-qubit register.
#[inline]
pub fn qubit_mask(num_qubits: usize, qubit: usize) -> usize {
    1 << (num_qubits - qubit)
}

#[inline]
pub fn qubit_bit(index: usize, num_qubits: usize, qubit: usize) -> usize {
    (index >> (num_qubits - qubit)) & 1
}

/// Apply a single-qubit operator to slot `qubit` of a raw amplitude vector.
pub fn apply_on_slot(amplitudes: &[C64], num_qubits: usize, qubit: usize, op: &Mat2) -> Vec<C64> {
    let mask = qubit_mask(num_qubits, qubit);
    let mut out = vec![C64::zero(); amplitudes.len()];
    for i0 in (0..amplitudes.len()).filter(|i| i & mask == 0) {
        let i1 = i0 | mask;
        let (a0, a1) = (amplitudes[i0], amplitudes[i1]);
        out[i0] = op[0][0] * a0 + op[0][1] * a1;
        out[i1] = op[1][0] * a0 + op[1][1] * a1;
    }
    out
}

pub fn norm_sqr(amplitudes: &[C64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum()
}

/// Normalized amplitude vector of `L` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Validates length `2^L` and unit norm (within [`NORM_TOL`]). Never renormalizes.
    pub fn new(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        check_length(num_qubits, amplitudes.len())?;
        let norm = norm_sqr(&amplitudes).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm, tol: NORM_TOL });
        }
        Ok(Self { num_qubits, amplitudes })
    }

    /// Explicit opt-in renormalization of a non-zero vector.
    pub fn normalized(num_qubits: usize, mut amplitudes: Vec<C64>) -> Result<Self> {
        check_length(num_qubits, amplitudes.len())?;
        let norm = norm_sqr(&amplitudes).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::invalid("cannot normalize a zero or non-finite vector"));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(Self { num_qubits, amplitudes })
    }

    /// Normalized superposition of computational kets with the given weights.
    pub fn from_kets(num_qubits: usize, kets: &[(usize, C64)]) -> Result<Self> {
        let mut amps = vec![C64::zero(); 1 << num_qubits];
        for &(index, w) in kets {
            if index >= amps.len() {
                return Err(Error::invalid(format!("ket index {index} exceeds 2^{num_qubits}")));
            }
            amps[index] += w;
        }
        Self::normalized(num_qubits, amps)
    }

    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        Self::from_kets(num_qubits, &[(index, C64::new(1.0, 0.0))])
    }

    /// `(|0…0⟩ + |1…1⟩)/√2`.
    pub fn ghz(num_qubits: usize) -> Result<Self> {
        let one = C64::new(1.0, 0.0);
        Self::from_kets(num_qubits, &[(0, one), ((1 << num_qubits) - 1, one)])
    }

    /// Uniform superposition of the single-excitation kets `|0…01⟩, |0…10⟩, …`.
    pub fn w(num_qubits: usize) -> Result<Self> {
        let one = C64::new(1.0, 0.0);
        let kets: Vec<_> = (0..num_qubits).map(|j| (1usize << j, one)).collect();
        Self::from_kets(num_qubits, &kets)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm_sqr(&self.amplitudes).sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit == 0 || qubit > self.num_qubits {
            return Err(Error::QubitOutOfRange {
                index: qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: StateFile = serde_json::from_str(s)?;
        file.into_state()
    }

    pub fn to_state_file(&self) -> StateFile {
        StateFile {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

fn check_length(num_qubits: usize, len: usize) -> Result<()> {
    if num_qubits == 0 || num_qubits > 30 {
        return Err(Error::invalid(format!("unsupported qubit count {num_qubits}")));
    }
    if len != 1 << num_qubits {
        return Err(Error::invalid(format!(
            "expected {} amplitudes for L = {num_qubits}, got {len}",
            1usize << num_qubits
        )));
    }
    Ok(())
}

/// On-disk state format: `{"L": 4, "amplitudes": [[re, im], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateFile {
    #[serde(rename = "L")]
    pub num_qubits: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateFile {
    pub fn into_state(self) -> Result<PureState> {
        let amps = self.amplitudes.iter().map(|&[re, im]| C64::new(re, im)).collect();
        PureState::new(self.num_qubits, amps)
    }
}

/// A one-qubit reduced density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix2 {
    pub entries: Mat2,
}

impl DensityMatrix2 {
    pub fn trace(&self) -> f64 {
        mat2_trace(&self.entries).re
    }

    /// Eigenvalues `(p, 1 - p)` with `p ≤ 1/2`, from trace and determinant.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let half_trace = 0.5 * (self.entries[0][0].re + self.entries[1][1].re);
        let gap = self.half_gap();
        (half_trace - gap, half_trace + gap)
    }

    /// Half the eigenvalue splitting, `sqrt(((ρ00-ρ11)/2)^2 + |ρ01|^2)`.
    pub fn half_gap(&self) -> f64 {
        let d = 0.5 * (self.entries[0][0].re - self.entries[1][1].re);
        (d * d + self.entries[0][1].norm_sqr()).sqrt()
    }

    /// `tr ρ²`.
    pub fn purity(&self) -> f64 {
        let e = &self.entries;
        e[0][0].norm_sqr() + e[1][1].norm_sqr() + e[0][1].norm_sqr() + e[1][0].norm_sqr()
    }

    /// `ρ - I/2`.
    pub fn traceless_part(&self) -> Mat2 {
        let mut m = self.entries;
        m[0][0] -= 0.5;
        m[1][1] -= 0.5;
        m
    }
}

/// `ρ_l - I/2` for every qubit.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumValue {
    pub blocks: Vec<Mat2>,
}

/// Partial trace over every qubit except `qubit` (1-based).
pub fn reduce_one_qubit(state: &PureState, qubit: usize) -> Result<DensityMatrix2> {
    state.check_qubit(qubit)?;
    Ok(reduce_raw(state.amplitudes(), state.num_qubits(), qubit))
}

/// Partial trace on a raw, not necessarily normalized, amplitude vector.
pub fn reduce_raw(amplitudes: &[C64], num_qubits: usize, qubit: usize) -> DensityMatrix2 {
    let mask = qubit_mask(num_qubits, qubit);
    let mut m = [[C64::zero(); 2]; 2];
    for i0 in (0..amplitudes.len()).filter(|i| i & mask == 0) {
        let (a0, a1) = (amplitudes[i0], amplitudes[i0 | mask]);
        m[0][0] += a0.norm_sqr();
        m[1][1] += a1.norm_sqr();
        m[0][1] += a0 * a1.conj();
    }
    m[1][0] = m[0][1].conj();
    DensityMatrix2 { entries: m }
}

pub fn momentum_map(state: &PureState) -> MomentumValue {
    let l = state.num_qubits();
    let blocks = (1..=l)
        .map(|q| reduce_raw(state.amplitudes(), l, q).traceless_part())
        .collect();
    MomentumValue { blocks }
}

/// Shifted spectra `λ_l = 1/2 - p_l`, with `p_l` the smaller eigenvalue of `ρ_l`.
pub fn psi_map(state: &PureState) -> SpectraPoint {
    let l = state.num_qubits();
    let lambdas = (1..=l)
        .map(|q| reduce_raw(state.amplitudes(), l, q).half_gap().min(0.5))
        .collect();
    SpectraPoint { lambdas, exact: None }
}

pub fn purity_invariants(state: &PureState) -> Vec<f64> {
    let l = state.num_qubits();
    (1..=l).map(|q| reduce_raw(state.amplitudes(), l, q).purity()).collect()
}

/// Act with `g_1 ⊗ … ⊗ g_L`, each factor in SU(2).
pub fn apply_local_unitary(state: &PureState, factors: &[Mat2]) -> Result<PureState> {
    let l = state.num_qubits();
    if factors.len() != l {
        return Err(Error::invalid(format!(
            "expected {l} local factors, got {}",
            factors.len()
        )));
    }
    for (slot, g) in factors.iter().enumerate() {
        let gg = mat2_mul(g, &mat2_adjoint(g));
        let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        let deviation = mat2_distance(&gg, &IDENTITY).max((det - 1.0).norm());
        if deviation > UNITARY_TOL {
            return Err(Error::NotSpecialUnitary {
                slot: slot + 1,
                deviation,
            });
        }
    }
    let mut amps = state.amplitudes().to_vec();
    for (slot, g) in factors.iter().enumerate() {
        amps = apply_on_slot(&amps, l, slot + 1, g);
    }
    PureState::new(l, amps)
}

/// Haar-random state: normalized isotropic complex Gaussian, deterministic per seed.
pub fn random_state(num_qubits: usize, seed: u64) -> Result<PureState> {
    if num_qubits == 0 || num_qubits > MAX_QUBITS {
        return Err(Error::invalid(format!(
            "random_state supports 1..={MAX_QUBITS} qubits, got {num_qubits}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_state_with(num_qubits, &mut rng))
}

pub fn random_state_with<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> PureState {
    let amps: Vec<C64> = (0..1usize << num_qubits)
        .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::normalized(num_qubits, amps).expect("Gaussian vector is non-zero")
}

/// Haar-random element of SU(2) from a uniformly random unit quaternion.
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    let mut q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    q.iter_mut().for_each(|x| *x /= n);
    let a = C64::new(q[0], q[1]);
    let b = C64::new(q[2], q[3]);
    [[a, b], [-b.conj(), a.conj()]]
}

pub fn random_local_unitary<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> Vec<Mat2> {
    (0..num_qubits).map(|_| random_su2(rng)).collect()
}

/// Ordered vector of shifted spectra `(λ_1, …, λ_L)`.
///
/// Only finiteness is enforced here; the chamber and polytope constraints
/// are the business of [`crate::polytope::membership`]. When the point was
/// entered as exact fractions or terminating decimals, `exact` carries the
/// rational coordinates and classification uses them instead of `lambdas`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectraPoint {
    pub lambdas: Vec<f64>,
    #[serde(skip)]
    pub exact: Option<Vec<Rational64>>,
}

impl SpectraPoint {
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::invalid("spectra point needs at least one coordinate"));
        }
        if let Some(bad) = lambdas.iter().find(|x| !x.is_finite()) {
            return Err(Error::invalid(format!("non-finite coordinate {bad}")));
        }
        Ok(Self { lambdas, exact: None })
    }

    pub fn from_exact(exact: Vec<Rational64>) -> Result<Self> {
        let lambdas = exact.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect();
        let mut p = Self::new(lambdas)?;
        p.exact = Some(exact);
        Ok(p)
    }

    /// Parses a comma-separated list of decimals or fractions (`"0,1/6,0.25"`).
    /// If every entry is exactly representable as a small rational the point
    /// keeps exact coordinates.
    pub fn parse(list: &str) -> Result<Self> {
        let items: Vec<&str> = list.split(',').map(str::trim).collect();
        if items.iter().any(|s| s.is_empty()) {
            return Err(Error::invalid(format!("malformed lambda list {list:?}")));
        }
        let exact: Option<Vec<Rational64>> = items.iter().map(|s| parse_rational(s)).collect();
        match exact {
            Some(q) => Self::from_exact(q),
            None => {
                let floats = items
                    .iter()
                    .map(|s| {
                        s.parse::<f64>()
                            .map_err(|_| Error::invalid(format!("cannot parse coordinate {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::new(floats)
            }
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.lambdas.len()
    }
}

impl fmt::Display for SpectraPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(q) => write!(
                f,
                "({})",
                q.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            ),
            None => write!(f, "{:?}", self.lambdas),
        }
    }
}

/// `"3/8"`, `"-2"`, `"0.125"` → exact rational. Returns `None` for anything
/// else, including decimals too long to fit comfortably in `i64`.
pub fn parse_rational(s: &str) -> Option<Rational64> {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().ok()?;
        let d: i64 = d.trim().parse().ok()?;
        return (d != 0).then(|| Rational64::new(n, d));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || int.len() + frac.len() > 15 {
        return None;
    }
    let digits: i64 = format!("{int}{frac}").parse().ok()?;
    Some(Rational64::new(sign * digits, 10i64.pow(frac.len() as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx_mat(a: &Mat2, b: &Mat2, tol: f64) -> bool {
        mat2_distance(a, b) <= tol
    }

    fn diag(a: f64, b: f64) -> Mat2 {
        [[c(a, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(b, 0.0)]]
    }

    #[test]
    fn product_state_reduces_to_projector() {
        let s = PureState::basis(3, 0).unwrap();
        let rho = reduce_one_qubit(&s, 1).unwrap();
        assert!(approx_mat(&rho.entries, &diag(1.0, 0.0), 1e-15));
    }

    #[test]
    fn ghz_reductions_are_maximally_mixed() {
        let s = PureState::ghz(3).unwrap();
        let rho = reduce_one_qubit(&s, 2).unwrap();
        assert!(approx_mat(&rho.entries, &diag(0.5, 0.5), 1e-15));
        for p in purity_invariants(&s) {
            assert!((p - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn w_state_reduction_by_hand() {
        // |001⟩+|010⟩+|100⟩: qubit 1 is |0⟩ in two of the three kets.
        let s = PureState::w(3).unwrap();
        let rho = reduce_one_qubit(&s, 1).unwrap();
        assert!(approx_mat(&rho.entries, &diag(2.0 / 3.0, 1.0 / 3.0), 1e-15));
        let psi = psi_map(&s);
        for l in psi.lambdas {
            assert!((l - 1.0 / 6.0).abs() < 1e-15);
        }
    }

    #[test]
    fn index_convention_most_significant_first() {
        // |100⟩ = index 4: qubit 1 excited.
        let s = PureState::basis(3, 4).unwrap();
        let r1 = reduce_one_qubit(&s, 1).unwrap();
        let r3 = reduce_one_qubit(&s, 3).unwrap();
        assert!(approx_mat(&r1.entries, &diag(0.0, 1.0), 1e-15));
        assert!(approx_mat(&r3.entries, &diag(1.0, 0.0), 1e-15));
    }

    #[test]
    fn out_of_range_and_unnormalized_rejected() {
        let s = PureState::ghz(2).unwrap();
        assert!(matches!(reduce_one_qubit(&s, 0), Err(Error::QubitOutOfRange { .. })));
        assert!(matches!(reduce_one_qubit(&s, 3), Err(Error::QubitOutOfRange { .. })));
        let amps = vec![c(1.0, 0.0), c(0.1, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(matches!(
            PureState::new(2, amps.clone()),
            Err(Error::NotNormalized { .. })
        ));
        assert!(PureState::normalized(2, amps).is_ok());
        assert!(PureState::new(2, vec![c(1.0, 0.0); 3]).is_err());
    }

    #[test]
    fn momentum_of_ghz_and_product() {
        for b in momentum_map(&PureState::ghz(4).unwrap()).blocks {
            assert!(approx_mat(&b, &diag(0.0, 0.0), 1e-15));
        }
        for b in momentum_map(&PureState::basis(4, 0).unwrap()).blocks {
            assert!(approx_mat(&b, &diag(0.5, -0.5), 1e-15));
        }
    }

    #[test]
    fn psi_at_vertices() {
        assert_eq!(psi_map(&PureState::basis(4, 0).unwrap()).lambdas, vec![0.5; 4]);
        for l in psi_map(&PureState::ghz(4).unwrap()).lambdas {
            assert!(l.abs() < 1e-15);
        }
    }

    #[test]
    fn identity_factors_fix_state() {
        let s = random_state(3, 1).unwrap();
        let t = apply_local_unitary(&s, &[IDENTITY; 3]).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn non_unitary_factor_rejected() {
        let s = random_state(2, 1).unwrap();
        let bad = mat2_scale(&IDENTITY, c(2.0, 0.0));
        assert!(matches!(
            apply_local_unitary(&s, &[IDENTITY, bad]),
            Err(Error::NotSpecialUnitary { slot: 2, .. })
        ));
        // Unitary but det = -1.
        assert!(apply_local_unitary(&s, &[IDENTITY, SIGMA_Z]).is_err());
    }

    #[test]
    fn random_state_deterministic() {
        let a = random_state(3, 7).unwrap();
        let b = random_state(3, 7).unwrap();
        assert_eq!(a, b);
        assert!((a.norm() - 1.0).abs() < 1e-12);
        assert_eq!(random_state(4, 99).unwrap().amplitudes().len(), 16);
        assert!(random_state(13, 0).is_err());
        assert!(random_state(0, 0).is_err());
    }

    #[test]
    fn ghz_psi_survives_local_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_local_unitary(4, &mut rng);
        let s = apply_local_unitary(&PureState::ghz(4).unwrap(), &g).unwrap();
        for l in psi_map(&s).lambdas {
            assert!(l.abs() < 1e-12);
        }
    }

    #[test]
    fn state_file_rejects_wrong_length() {
        let ok = r#"{"L": 1, "amplitudes": [[1.0, 0.0], [0.0, 0.0]]}"#;
        assert!(PureState::from_json_str(ok).is_ok());
        let bad = r#"{"L": 2, "amplitudes": [[1.0, 0.0], [0.0, 0.0]]}"#;
        assert!(PureState::from_json_str(bad).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/6"), Some(Rational64::new(1, 6)));
        assert_eq!(parse_rational("0.15"), Some(Rational64::new(3, 20)));
        assert_eq!(parse_rational("-.5"), Some(Rational64::new(-1, 2)));
        assert_eq!(parse_rational("2"), Some(Rational64::from_integer(2)));
        assert_eq!(parse_rational("1e-3"), None);
        assert_eq!(parse_rational("1/0"), None);
        let p = SpectraPoint::parse("0, 1/6, 0.25").unwrap();
        assert!(p.exact.is_some());
        let p = SpectraPoint::parse("0,1e-3").unwrap();
        assert!(p.exact.is_none());
        assert!(SpectraPoint::parse("0,,1").is_err());
        assert!(SpectraPoint::new(vec![f64::NAN]).is_err());
    }
}
