//! Numerical estimate of the reduced-space dimension over regular strata.
//!
//! States on a fibre are found by projected gradient descent on the unit
//! sphere. At each sample the rank of the momentum differential and the
//! isotropy algebra give
//!
//! ```text
//! dim M = (dim P(H) - rank dμ) - (dim K_α - dim k_φ)
//! ```
//!
//! which is only meaningful where `rank dμ` is maximal along the fibre.
//! Points with a coordinate at 1/2 or on a wall are refused.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{real_rank, NumericRank};
use crate::polytope::{self, StratumClass};
use crate::qstate::{apply_on_slot, psi_map, random_state_with, reduce_raw, Mat2, PureState, SpectraPoint, C64};
use crate::stability::orbit_dimensions;

/// Default Ψ-distance accepted as converged.
pub const FIBER_TOL: f64 = 1e-10;

/// Target coordinates at or below this value are treated as zero.
pub const ZERO_TOL: f64 = 1e-9;

pub const DEFAULT_SAMPLES: usize = 5;
pub const DEFAULT_RESTARTS: usize = 8;

/// Iteration cap of a single descent run.
pub const MAX_ITERATIONS: usize = 20_000;

#[derive(Clone, Debug, Serialize)]
pub struct FiberSample {
    #[serde(skip)]
    pub state: PureState,
    pub target: SpectraPoint,
    /// Euclidean distance between `Ψ(state)` and the target.
    pub residual: f64,
    pub iterations: usize,
    pub restarts: usize,
}

fn mix_seed(seed: u64, restart: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(restart.wrapping_mul(0xBF58_476D_1CE4_E5B9))
}

struct Objective<'a> {
    num_qubits: usize,
    target: &'a [f64],
}

impl Objective<'_> {
    /// Per-qubit terms `(λ_l - t_l)²`, replaced by `‖ρ_l - I/2‖²` when `t_l = 0`.
    /// Returns the value and the Euclidean gradient `2 Σ_l G_l φ`.
    fn value_and_gradient(&self, x: &[C64]) -> (f64, Vec<C64>) {
        let l = self.num_qubits;
        let mut value = 0.0;
        let mut grad = vec![C64::new(0.0, 0.0); x.len()];
        for q in 1..=l {
            let rho = reduce_raw(x, l, q);
            let a = rho.traceless_part();
            let lam = rho.half_gap();
            let t = self.target[q - 1];
            let (term, weight) = if t <= ZERO_TOL {
                (2.0 * lam * lam, 2.0)
            } else if lam > 0.0 {
                ((lam - t) * (lam - t), (lam - t) / lam)
            } else {
                (t * t, 0.0)
            };
            value += term;
            if weight != 0.0 {
                let g: Mat2 = [
                    [a[0][0] * weight, a[0][1] * weight],
                    [a[1][0] * weight, a[1][1] * weight],
                ];
                for (acc, v) in grad.iter_mut().zip(apply_on_slot(x, l, q, &g)) {
                    *acc += 2.0 * v;
                }
            }
        }
        (value, grad)
    }

    fn distance(&self, x: &[C64]) -> f64 {
        let l = self.num_qubits;
        (1..=l)
            .map(|q| {
                let d = reduce_raw(x, l, q).half_gap() - self.target[q - 1];
                d * d
            })
            .sum::<f64>()
            .sqrt()
    }
}

fn re_inner(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.re * y.re + x.im * y.im).sum()
}

fn normalize(v: &mut [C64]) {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= n);
}

/// One projected-gradient run with Armijo backtracking and Barzilai–Borwein
/// trial steps. Returns the final point, its Ψ-distance and the iteration count.
fn descend(obj: &Objective<'_>, start: Vec<C64>, tol: f64) -> (Vec<C64>, f64, usize) {
    let mut x = start;
    let (mut f, g) = obj.value_and_gradient(&x);
    let tangent = |x: &[C64], g: &[C64]| -> Vec<C64> {
        let c = re_inner(x, g);
        g.iter().zip(x).map(|(gi, xi)| gi - xi * c).collect()
    };
    let mut rg = tangent(&x, &g);
    let mut step = 0.5;
    for it in 0..MAX_ITERATIONS {
        let dist = obj.distance(&x);
        if dist <= tol {
            return (x, dist, it);
        }
        let gg = re_inner(&rg, &rg);
        if gg == 0.0 {
            return (x, dist, it);
        }
        let mut s = step;
        let (x_new, f_new) = loop {
            let mut cand: Vec<C64> = x.iter().zip(&rg).map(|(xi, gi)| xi - gi * s).collect();
            normalize(&mut cand);
            let (fc, _) = obj.value_and_gradient(&cand);
            if fc <= f - 1e-4 * s * gg || s < 1e-14 {
                break (cand, fc);
            }
            s *= 0.5;
        };
        if f_new >= f {
            // No further progress at double precision.
            return (x, dist, it);
        }
        let (_, g_new) = obj.value_and_gradient(&x_new);
        let rg_new = tangent(&x_new, &g_new);
        let sk: Vec<C64> = x_new.iter().zip(&x).map(|(a, b)| a - b).collect();
        let yk: Vec<C64> = rg_new.iter().zip(&rg).map(|(a, b)| a - b).collect();
        let sy = re_inner(&sk, &yk);
        step = if sy > 0.0 {
            (re_inner(&sk, &sk) / sy).clamp(1e-6, 1e3)
        } else {
            (2.0 * s).min(1e3)
        };
        x = x_new;
        f = f_new;
        rg = rg_new;
    }
    let dist = obj.distance(&x);
    (x, dist, MAX_ITERATIONS)
}

/// Finds a state with `Ψ(φ) = target` within `tol`, restarting from fresh
/// Haar-random seeds up to `max_restarts` times.
pub fn sample_fiber(target: &SpectraPoint, seed: u64, tol: f64, max_restarts: usize) -> Result<FiberSample> {
    let l = target.num_qubits();
    if l > crate::qstate::MAX_QUBITS {
        return Err(Error::invalid(format!("unsupported qubit count {l}")));
    }
    let m = polytope::membership(target)?;
    if !m.member {
        return Err(Error::NotMember {
            violations: m.violations.iter().map(|v| v.to_string()).collect(),
        });
    }
    let obj = Objective {
        num_qubits: l,
        target: &target.lambdas,
    };
    let mut best = f64::INFINITY;
    for restart in 0..=max_restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, restart as u64));
        let start = random_state_with(l, &mut rng).into_amplitudes();
        let (x, dist, iterations) = descend(&obj, start, tol);
        best = best.min(dist);
        if dist <= tol {
            let state = PureState::new(l, x)?;
            return Ok(FiberSample {
                state,
                target: target.clone(),
                residual: dist,
                iterations,
                restarts: restart,
            });
        }
    }
    Err(Error::Numerical(format!(
        "fibre sampling did not converge to {tol:e} after {} start(s); best Ψ-distance {best:e}",
        max_restarts + 1
    )))
}

/// `dρ_l` along `v` at `φ`: the reduction of `|v⟩⟨φ| + |φ⟩⟨v|`.
fn reduction_differential(phi: &[C64], v: &[C64], num_qubits: usize, qubit: usize) -> Mat2 {
    let mask = crate::qstate::qubit_mask(num_qubits, qubit);
    let mut m = [[C64::new(0.0, 0.0); 2]; 2];
    for i0 in (0..phi.len()).filter(|i| i & mask == 0) {
        let idx = [i0, i0 | mask];
        for a in 0..2 {
            for b in 0..2 {
                m[a][b] += v[idx[a]] * phi[idx[b]].conj();
            }
        }
    }
    let mut out = m;
    for a in 0..2 {
        for b in 0..2 {
            out[a][b] = m[a][b] + m[b][a].conj();
        }
    }
    out
}

/// Orthonormal basis of `φ^⊥` from the Householder reflection sending `e_0` to a multiple of `φ`.
fn orthogonal_complement(phi: &[C64]) -> Vec<Vec<C64>> {
    let n = phi.len();
    let phase = if phi[0].norm() > 0.0 {
        phi[0] / phi[0].norm()
    } else {
        C64::new(1.0, 0.0)
    };
    let mut w = phi.to_vec();
    w[0] += phase;
    let wn = w.iter().map(|z| z.norm_sqr()).sum::<f64>();
    (1..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let e = if i == j { 1.0 } else { 0.0 };
                    C64::new(e, 0.0) - 2.0 * w[i] * w[j].conj() / wn
                })
                .collect()
        })
        .collect()
}

/// Real rank of `dμ` at `[φ]` on the `(2^(L+1) - 2)`-dimensional tangent space,
/// with components `tr(σ_a dρ_l)`.
pub fn rank_dmu(state: &PureState, rank_tol: f64) -> Result<NumericRank> {
    let l = state.num_qubits();
    let phi = state.amplitudes();
    let paulis = [crate::qstate::SIGMA_X, crate::qstate::SIGMA_Y, crate::qstate::SIGMA_Z];
    let i = Complex64::new(0.0, 1.0);
    let mut cols = Vec::with_capacity(2 * phi.len() - 2);
    for c in orthogonal_complement(phi) {
        let ic: Vec<C64> = c.iter().map(|z| z * i).collect();
        for v in [c, ic] {
            let mut col = Vec::with_capacity(3 * l);
            for q in 1..=l {
                let d = reduction_differential(phi, &v, l, q);
                for s in &paulis {
                    col.push(crate::qstate::mat2_trace(&crate::qstate::mat2_mul(s, &d)).re);
                }
            }
            cols.push(col);
        }
    }
    real_rank(&cols, rank_tol)
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleBreakdown {
    pub seed: u64,
    pub residual: f64,
    pub iterations: usize,
    pub restarts: usize,
    pub rank_dmu: usize,
    #[serde(rename = "dim_K_alpha")]
    pub dim_k_alpha: usize,
    pub dim_isotropy: usize,
    pub estimate: i64,
    pub regular: bool,
    /// Kept/dropped singular-value ratio of the `dμ` rank decision.
    pub dmu_gap: Option<f64>,
    pub orbit_gap: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EstimateStatus {
    Conclusive,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericDimEstimate {
    pub dim_estimate: Option<i64>,
    pub regular: bool,
    pub status: EstimateStatus,
    pub agreement: usize,
    pub samples: Vec<SampleBreakdown>,
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub n_samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub rank_tol: f64,
    pub max_restarts: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            n_samples: DEFAULT_SAMPLES,
            seed: 1,
            tol: FIBER_TOL,
            rank_tol: crate::linalg::RANK_TOL,
            max_restarts: DEFAULT_RESTARTS,
        }
    }
}

/// Checks that `target` is in the regular regime (no coordinate at 1/2, no tight wall).
pub fn regular_class(target: &SpectraPoint) -> Result<StratumClass> {
    let class = polytope::classify(target, ZERO_TOL)?;
    if class.k_half > 0 || !class.tight_walls.is_empty() || class.degenerate {
        let which = if class.k_half > 0 {
            "coordinate at 1/2: recurse on the stripped system"
        } else {
            "tight wall: use the torus certificate"
        };
        return Err(Error::invalid(format!(
            "singular value of μ — use case-specific certificate ({which})"
        )));
    }
    Ok(class)
}

/// `dim K_α`: 1 for each non-zero coordinate, 3 for each zero.
pub fn stabilizer_dim(target: &SpectraPoint) -> usize {
    target.lambdas.iter().map(|&x| if x > ZERO_TOL { 1 } else { 3 }).sum()
}

fn evaluate_sample(target: &SpectraPoint, seed: u64, cfg: &OracleConfig) -> Result<SampleBreakdown> {
    let l = target.num_qubits();
    let sample = sample_fiber(target, seed, cfg.tol, cfg.max_restarts)?;
    // Re-verify before trusting ranks.
    let reached = psi_map(&sample.state);
    let dist = reached
        .lambdas
        .iter()
        .zip(&target.lambdas)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt();
    if dist > cfg.tol || !polytope::membership(&reached)?.member {
        return Err(Error::Numerical(format!(
            "sample failed re-verification (distance {dist:e})"
        )));
    }
    let dmu = rank_dmu(&sample.state, cfg.rank_tol)?;
    let orbit = orbit_dimensions(&sample.state, cfg.rank_tol)?;
    let dim_k_alpha = stabilizer_dim(target);
    let projective = (1i64 << (l + 1)) - 2;
    let iso = orbit.dim_isotropy_algebra;
    let estimate = (projective - dmu.rank as i64) - (dim_k_alpha as i64 - iso as i64);
    Ok(SampleBreakdown {
        seed,
        residual: sample.residual,
        iterations: sample.iterations,
        restarts: sample.restarts,
        rank_dmu: dmu.rank,
        dim_k_alpha,
        dim_isotropy: iso,
        estimate,
        regular: dmu.rank + iso == 3 * l,
        dmu_gap: dmu.gap,
        orbit_gap: orbit.compact_rank.gap,
    })
}

/// Independent estimate of `dim M` at a regular-regime target. Samples run
/// in parallel with per-sample seeds `seed, seed+1, …`; any disagreement or
/// irregular sample makes the estimate inconclusive.
pub fn numeric_dim(target: &SpectraPoint, cfg: &OracleConfig) -> Result<NumericDimEstimate> {
    regular_class(target)?;
    if cfg.n_samples == 0 {
        return Err(Error::invalid("need at least one sample"));
    }
    let samples = (0..cfg.n_samples as u64)
        .into_par_iter()
        .map(|i| evaluate_sample(target, cfg.seed.wrapping_add(i), cfg))
        .collect::<Result<Vec<_>>>()?;
    let first = samples[0].estimate;
    let agreement = samples.iter().filter(|s| s.estimate == first).count();
    let regular = samples.iter().all(|s| s.regular);
    let conclusive = regular && agreement == samples.len();
    Ok(NumericDimEstimate {
        dim_estimate: conclusive.then_some(first),
        regular,
        status: if conclusive {
            EstimateStatus::Conclusive
        } else {
            EstimateStatus::Inconclusive
        },
        agreement,
        samples,
    })
}
