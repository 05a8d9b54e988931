//! The polytope of admissible shifted spectra.
//!
//! In λ-coordinates the polytope is cut out by `3L` inequalities:
//!
//! * wall `l`: `1/2 - λ_l ≤ Σ_{j≠l} (1/2 - λ_j)`,
//! * lower bound `l`: `0 ≤ λ_l`,
//! * upper bound `l`: `λ_l ≤ 1/2`.
//!
//! Vertex and facet enumeration run over exact rationals.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use itertools::Itertools;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{rational_rank, solve_unique};
use crate::qstate::SpectraPoint;

/// Default absolute slack below which an inequality counts as tight.
pub const TIGHT_TOL: f64 = 1e-9;

/// Upper bound on `L` for [`vertices`].
pub const MAX_VERTEX_QUBITS: usize = 20;

/// Range of `L` accepted by [`vertices_oracle`].
pub const ORACLE_QUBITS: std::ops::RangeInclusive<usize> = 2..=8;

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum InequalityKind {
    #[serde(rename = "wall")]
    Wall,
    #[serde(rename = "lambda_zero")]
    LowerBound,
    #[serde(rename = "lambda_half")]
    UpperBound,
}

/// `coeffs · λ ≤ rhs`, tagged with its distinguished qubit (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct Inequality {
    pub kind: InequalityKind,
    pub index: usize,
    pub coeffs: Vec<Rational64>,
    pub rhs: Rational64,
}

impl Inequality {
    /// `rhs - coeffs·λ`; non-negative iff the inequality holds.
    pub fn slack<T>(&self, lambdas: &[T]) -> T
    where
        T: Copy + Zero + Sub<Output = T> + Mul<Output = T> + Add<Output = T> + FromRational,
    {
        let lhs = self
            .coeffs
            .iter()
            .zip(lambdas)
            .fold(T::zero(), |acc, (&c, &x)| acc + T::from_rational(c) * x);
        T::from_rational(self.rhs) - lhs
    }

    /// Human-readable equality obtained by making the inequality tight.
    pub fn equality(&self) -> String {
        let l = self.index;
        match self.kind {
            InequalityKind::Wall => format!("1/2 - λ_{l} = Σ_{{j≠{l}}} (1/2 - λ_j)"),
            InequalityKind::LowerBound => format!("λ_{l} = 0"),
            InequalityKind::UpperBound => format!("λ_{l} = 1/2"),
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.index;
        match self.kind {
            InequalityKind::Wall => write!(f, "wall {l}"),
            InequalityKind::LowerBound => write!(f, "lower bound λ_{l} ≥ 0"),
            InequalityKind::UpperBound => write!(f, "upper bound λ_{l} ≤ 1/2"),
        }
    }
}

/// Conversion of the (rational) constraint data into the coordinate type.
pub trait FromRational {
    fn from_rational(q: Rational64) -> Self;
}

impl FromRational for f64 {
    fn from_rational(q: Rational64) -> Self {
        q.to_f64().expect("small rational")
    }
}

impl FromRational for Rational64 {
    fn from_rational(q: Rational64) -> Self {
        q
    }
}

/// The full system of `3L` inequalities: walls, then lower bounds, then upper bounds.
#[derive(Clone, Debug)]
pub struct PolytopeModel {
    num_qubits: usize,
    inequalities: Vec<Inequality>,
}

impl PolytopeModel {
    pub fn new(num_qubits: usize) -> Self {
        assert!(num_qubits >= 1);
        let l = num_qubits;
        let unit = |i: usize, v: i64| {
            let mut c = vec![Rational64::zero(); l];
            c[i] = Rational64::from_integer(v);
            c
        };
        let mut inequalities = Vec::with_capacity(3 * l);
        // Σ_{j≠i} λ_j - λ_i ≤ L/2 - 1
        for i in 0..l {
            let coeffs = (0..l)
                .map(|j| Rational64::from_integer(if j == i { -1 } else { 1 }))
                .collect();
            inequalities.push(Inequality {
                kind: InequalityKind::Wall,
                index: i + 1,
                coeffs,
                rhs: Rational64::new(l as i64 - 2, 2),
            });
        }
        for i in 0..l {
            inequalities.push(Inequality {
                kind: InequalityKind::LowerBound,
                index: i + 1,
                coeffs: unit(i, -1),
                rhs: Rational64::zero(),
            });
        }
        for i in 0..l {
            inequalities.push(Inequality {
                kind: InequalityKind::UpperBound,
                index: i + 1,
                coeffs: unit(i, 1),
                rhs: half(),
            });
        }
        Self {
            num_qubits,
            inequalities,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }
}

/// A violated constraint and its (negative) slack.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub kind: InequalityKind,
    pub index: usize,
    pub slack: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            InequalityKind::Wall => format!("wall {}", self.index),
            InequalityKind::LowerBound => format!("lower bound λ_{} ≥ 0", self.index),
            InequalityKind::UpperBound => format!("upper bound λ_{} ≤ 1/2", self.index),
        };
        write!(f, "{name} violated (slack {:e})", self.slack)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub violations: Vec<Violation>,
}

/// Checks all `3L` inequalities. Exact coordinates are checked exactly;
/// float coordinates within [`TIGHT_TOL`].
pub fn membership(point: &SpectraPoint) -> Result<Membership> {
    membership_with_tol(point, TIGHT_TOL)
}

pub fn membership_with_tol(point: &SpectraPoint, tol: f64) -> Result<Membership> {
    if point.lambdas.is_empty() || point.lambdas.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid("spectra point must have finite coordinates"));
    }
    let model = PolytopeModel::new(point.num_qubits());
    let violations = match &point.exact {
        Some(q) => violations_in(&model, q, Rational64::zero()),
        None => violations_in(&model, &point.lambdas, tol),
    };
    Ok(Membership {
        member: violations.is_empty(),
        violations,
    })
}

fn violations_in<T>(model: &PolytopeModel, lambdas: &[T], tol: T) -> Vec<Violation>
where
    T: Coord,
{
    model
        .inequalities()
        .iter()
        .filter_map(|ineq| {
            let s = ineq.slack(lambdas);
            (s + tol < T::zero()).then(|| Violation {
                kind: ineq.kind,
                index: ineq.index,
                slack: s.as_f64(),
            })
        })
        .collect()
}

/// Numeric types the classifier runs on: `f64` with a tolerance, or exact rationals.
pub trait Coord:
    Copy + PartialOrd + Zero + Sub<Output = Self> + Mul<Output = Self> + Add<Output = Self> + FromRational
{
    fn as_f64(self) -> f64;
}

impl Coord for f64 {
    fn as_f64(self) -> f64 {
        self
    }
}

impl Coord for Rational64 {
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Boundary-stratum classification of a spectra point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StratumClass {
    #[serde(rename = "L")]
    pub num_qubits: usize,
    pub member: bool,
    pub violations: Vec<Violation>,
    /// Number of coordinates with `λ_l = 1/2`, stripped first.
    pub k_half: usize,
    pub half_indices: Vec<usize>,
    /// Walls tight in the residual system (1-based, original labels).
    pub tight_walls: Vec<usize>,
    /// Number of residual coordinates with `λ_l = 0`.
    pub k_zero: usize,
    pub zero_indices: Vec<usize>,
    pub residual_l: usize,
    /// Residual system of at most two qubits.
    pub degenerate: bool,
    /// Whether exact rational arithmetic decided every comparison.
    pub exact: bool,
    pub trail: Vec<String>,
}

impl StratumClass {
    /// Record for a point outside the polytope; every field other than the
    /// violation list is empty.
    pub fn non_member(num_qubits: usize, violations: Vec<Violation>) -> Self {
        Self {
            num_qubits,
            member: false,
            violations,
            k_half: 0,
            half_indices: vec![],
            tight_walls: vec![],
            k_zero: 0,
            zero_indices: vec![],
            residual_l: 0,
            degenerate: false,
            exact: false,
            trail: vec![],
        }
    }

    pub fn is_interior(&self) -> bool {
        self.member && self.k_half == 0 && self.tight_walls.is_empty() && self.k_zero == 0
    }
}

/// Classifies a member point by the fixed precedence
/// strip `λ = 1/2` → degenerate check → residual walls → residual zeros.
///
/// `tol` applies to float coordinates only; exact points use exact comparisons.
pub fn classify(point: &SpectraPoint, tol: f64) -> Result<StratumClass> {
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Error::invalid(format!(
            "tolerance must be a finite non-negative number, got {tol}"
        )));
    }
    let m = membership_with_tol(point, tol)?;
    if !m.member {
        return Err(Error::NotMember {
            violations: m.violations.iter().map(|v| v.to_string()).collect(),
        });
    }
    Ok(match &point.exact {
        Some(q) => classify_in(q, Rational64::zero(), true),
        None => classify_in(&point.lambdas, tol, false),
    })
}

fn classify_in<T: Coord>(lambdas: &[T], tol: T, exact: bool) -> StratumClass {
    let l = lambdas.len();
    let half = T::from_rational(half());
    let mut trail = Vec::new();

    let (half_idx, residual): (Vec<usize>, Vec<usize>) = (0..l).partition(|&i| lambdas[i] + tol >= half);
    let residual_l = residual.len();
    trail.push(format!(
        "strip: {} coordinate(s) at 1/2 {:?}, residual system of {} qubit(s)",
        half_idx.len(),
        half_idx.iter().map(|i| i + 1).collect::<Vec<_>>(),
        residual_l
    ));

    let degenerate = residual_l <= 2;
    if degenerate {
        trail.push(format!("degenerate: residual L' = {residual_l} ≤ 2"));
    }

    // Stripped coordinates have p = 0 and drop out of the residual walls.
    let p = |i: usize| half - lambdas[i];
    let total = residual.iter().fold(T::zero(), |acc, &i| acc + p(i));
    let tight_walls: Vec<usize> = residual
        .iter()
        .copied()
        .filter(|&i| {
            let slack = (total - p(i)) - p(i);
            slack <= tol && T::zero() <= slack + tol
        })
        .collect();
    if tight_walls.is_empty() {
        trail.push("walls: none tight in residual system".into());
    } else {
        trail.push(format!(
            "walls: tight {:?}",
            tight_walls.iter().map(|i| i + 1).collect::<Vec<_>>()
        ));
    }

    let zero_idx: Vec<usize> = residual.iter().copied().filter(|&i| lambdas[i] <= tol).collect();
    trail.push(format!(
        "zeros: {} residual coordinate(s) at 0 {:?}",
        zero_idx.len(),
        zero_idx.iter().map(|i| i + 1).collect::<Vec<_>>()
    ));

    StratumClass {
        num_qubits: l,
        member: true,
        violations: vec![],
        k_half: half_idx.len(),
        half_indices: half_idx.iter().map(|i| i + 1).collect(),
        tight_walls: tight_walls.iter().map(|i| i + 1).collect(),
        k_zero: zero_idx.len(),
        zero_indices: zero_idx.iter().map(|i| i + 1).collect(),
        residual_l,
        degenerate,
        exact,
        trail,
    }
}

/// A vertex with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub label: String,
    pub lambdas: Vec<Rational64>,
}

impl Vertex {
    pub fn to_point(&self) -> SpectraPoint {
        SpectraPoint::from_exact(self.lambdas.clone()).expect("vertex coordinates are finite")
    }
}

/// JSON form of an exact fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl From<Rational64> for Fraction {
    fn from(q: Rational64) -> Self {
        Self {
            num: *q.numer(),
            den: *q.denom(),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Vertex", 2)?;
        st.serialize_field("label", &self.label)?;
        let fr: Vec<Fraction> = self.lambdas.iter().copied().map(Fraction::from).collect();
        st.serialize_field("lambdas", &fr)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexList {
    #[serde(rename = "L")]
    pub num_qubits: usize,
    pub vertices: Vec<Vertex>,
}

impl VertexList {
    pub fn coordinate_set(&self) -> BTreeSet<Vec<Rational64>> {
        self.vertices.iter().map(|v| v.lambdas.clone()).collect()
    }

    pub fn find(&self, label: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.label == label)
    }
}

/// Label of the vertex with `λ = 0` exactly at `zeros` (0-based, sorted).
///
/// `v_SEP` has no zeros, `v_GHZ` is all zeros, and otherwise the label lists
/// the coordinates at 1/2 (`v_j`, `v_{i,j}`, …). For four qubits the six
/// vertices with two zeros are `v_B1 … v_B6` in lexicographic order of their
/// zero pairs.
pub fn vertex_label(num_qubits: usize, zeros: &[usize]) -> String {
    if zeros.is_empty() {
        return "v_SEP".into();
    }
    if zeros.len() == num_qubits {
        return "v_GHZ".into();
    }
    if num_qubits == 4 && zeros.len() == 2 {
        let pos = (0..4).combinations(2).position(|c| c == zeros).expect("pair in range");
        return format!("v_B{}", pos + 1);
    }
    let halves: Vec<String> = (0..num_qubits)
        .filter(|i| !zeros.contains(i))
        .map(|i| (i + 1).to_string())
        .collect();
    if halves.len() == 1 {
        format!("v_{}", halves[0])
    } else {
        format!("v_{{{}}}", halves.join(","))
    }
}

fn vertex_from_zeros(num_qubits: usize, zeros: &[usize]) -> Vertex {
    let lambdas = (0..num_qubits)
        .map(|i| if zeros.contains(&i) { Rational64::zero() } else { half() })
        .collect();
    Vertex {
        label: vertex_label(num_qubits, zeros),
        lambdas,
    }
}

fn zeros_of(lambdas: &[Rational64]) -> Vec<usize> {
    (0..lambdas.len()).filter(|&i| lambdas[i].is_zero()).collect()
}

/// Vertices from the closed-form characterization: every `λ_l ∈ {0, 1/2}`
/// with the number of zeros in `{0, 2, 3, …, L}`. Ordered by number of zeros,
/// then lexicographically by zero positions.
pub fn vertices(num_qubits: usize) -> Result<VertexList> {
    if num_qubits == 0 || num_qubits > MAX_VERTEX_QUBITS {
        return Err(Error::invalid(format!(
            "vertices supports 1..={MAX_VERTEX_QUBITS} qubits, got {num_qubits}"
        )));
    }
    let vertices = (0..=num_qubits)
        .filter(|&k| k != 1)
        .flat_map(|k| (0..num_qubits).combinations(k))
        .map(|zeros| vertex_from_zeros(num_qubits, &zeros))
        .collect();
    Ok(VertexList { num_qubits, vertices })
}

/// `2^L - L`.
pub fn vertex_count(num_qubits: usize) -> u64 {
    (1u64 << num_qubits) - num_qubits as u64
}

/// Brute-force vertex enumeration: every `L`-subset of the `3L` constraints
/// is turned into equalities and solved exactly; unique feasible solutions
/// are kept and deduplicated.
pub fn vertices_oracle(num_qubits: usize) -> Result<VertexList> {
    if !ORACLE_QUBITS.contains(&num_qubits) {
        return Err(Error::invalid(format!(
            "vertices_oracle supports {}..={} qubits, got {num_qubits}",
            ORACLE_QUBITS.start(),
            ORACLE_QUBITS.end()
        )));
    }
    let model = PolytopeModel::new(num_qubits);
    let ineqs = model.inequalities();
    let subsets: Vec<Vec<usize>> = (0..ineqs.len()).combinations(num_qubits).collect();
    let found: BTreeSet<Vec<Rational64>> = subsets
        .par_iter()
        .filter_map(|subset| {
            let a = subset.iter().map(|&i| ineqs[i].coeffs.clone()).collect();
            let b = subset.iter().map(|&i| ineqs[i].rhs).collect();
            let x = solve_unique(a, b)?;
            ineqs
                .iter()
                .all(|ineq| ineq.slack(&x) >= Rational64::zero())
                .then_some(x)
        })
        .collect();
    let mut vertices: Vec<Vertex> = found
        .into_iter()
        .map(|lambdas| {
            let zeros = zeros_of(&lambdas);
            // Only {0, 1/2} coordinates have a canonical label.
            let label = if lambdas.iter().all(|q| q.is_zero() || *q == half()) {
                vertex_label(num_qubits, &zeros)
            } else {
                format!(
                    "v_unexpected{:?}",
                    lambdas.iter().map(|q| q.to_string()).collect::<Vec<_>>()
                )
            };
            Vertex { label, lambdas }
        })
        .collect();
    vertices.sort_by_key(|v| {
        let z = zeros_of(&v.lambdas);
        (z.len(), z)
    });
    Ok(VertexList { num_qubits, vertices })
}

/// A facet: one inequality made tight, with its incident vertices.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Facet {
    #[serde(rename = "type")]
    pub kind: InequalityKind,
    pub index: usize,
    pub equality: String,
    pub incident_vertices: Vec<String>,
}

/// Facets of the polytope for `L ≥ 3`: inequalities whose tight vertex set
/// spans an affine hyperplane (dimension `L - 1`), deduplicated by vertex set.
pub fn facets(num_qubits: usize) -> Result<Vec<Facet>> {
    if num_qubits < 3 {
        return Err(Error::invalid(format!(
            "facets need a full-dimensional polytope (L ≥ 3), got L = {num_qubits}"
        )));
    }
    let verts = vertices(num_qubits)?;
    let model = PolytopeModel::new(num_qubits);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for ineq in model.inequalities() {
        let incident: Vec<&Vertex> = verts
            .vertices
            .iter()
            .filter(|v| ineq.slack(&v.lambdas).is_zero())
            .collect();
        if affine_dimension(&incident) + 1 != num_qubits {
            continue;
        }
        let labels: Vec<String> = incident.iter().map(|v| v.label.clone()).collect();
        if seen.insert(labels.clone()) {
            out.push(Facet {
                kind: ineq.kind,
                index: ineq.index,
                equality: ineq.equality(),
                incident_vertices: labels,
            });
        }
    }
    Ok(out)
}

/// Affine dimension of a vertex set (`-1` is reported as 0 for the empty set).
pub fn affine_dimension(points: &[&Vertex]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let rows = rest
        .iter()
        .map(|v| v.lambdas.iter().zip(&first.lambdas).map(|(a, b)| a - b).collect())
        .collect();
    rational_rank(rows)
}

/// Edges of the polytope: vertex pairs whose common tight constraints have rank `L - 1`.
pub fn edges(num_qubits: usize) -> Result<Vec<(String, String)>> {
    let verts = vertices(num_qubits)?;
    let model = PolytopeModel::new(num_qubits);
    let tight: Vec<Vec<usize>> = verts
        .vertices
        .iter()
        .map(|v| {
            (0..model.inequalities().len())
                .filter(|&i| model.inequalities()[i].slack(&v.lambdas).is_zero())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for (a, b) in (0..verts.vertices.len()).tuple_combinations() {
        let common: Vec<Vec<Rational64>> = tight[a]
            .iter()
            .filter(|i| tight[b].contains(i))
            .map(|&i| model.inequalities()[i].coeffs.clone())
            .collect();
        if rational_rank(common) + 1 == num_qubits {
            out.push((verts.vertices[a].label.clone(), verts.vertices[b].label.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[f64]) -> SpectraPoint {
        SpectraPoint::new(v.to_vec()).unwrap()
    }

    #[test]
    fn model_has_3l_constraints() {
        for l in 1..8 {
            assert_eq!(PolytopeModel::new(l).inequalities().len(), 3 * l);
        }
    }

    #[test]
    fn membership_examples() {
        let m = membership(&pt(&[1.0 / 6.0; 3])).unwrap();
        assert!(m.member);

        // p = (0, 0.1, 0.5): wall 3 reads 0.5 ≤ 0.1.
        let m = membership(&pt(&[0.5, 0.4, 0.0])).unwrap();
        assert!(!m.member);
        assert_eq!(m.violations.len(), 1);
        assert_eq!((m.violations[0].kind, m.violations[0].index), (InequalityKind::Wall, 3));
        assert!((m.violations[0].slack + 0.4).abs() < 1e-12);

        let m = membership(&pt(&[0.6, 0.1, 0.1])).unwrap();
        assert!(m
            .violations
            .iter()
            .any(|v| v.kind == InequalityKind::UpperBound && v.index == 1));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&pt(&[0.1, 0.2, 0.15, 0.05]), TIGHT_TOL).unwrap();
        assert!(c.is_interior());

        let c = classify(&pt(&[0.5, 0.1, 0.2, 0.15]), TIGHT_TOL).unwrap();
        assert_eq!((c.k_half, c.residual_l, c.k_zero), (1, 3, 0));
        assert!(c.tight_walls.is_empty());

        let c = classify(&SpectraPoint::parse("1/6,1/3,1/3").unwrap(), TIGHT_TOL).unwrap();
        assert!(c.exact);
        assert_eq!(c.tight_walls, vec![1]);

        let c = classify(&pt(&[1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0]), TIGHT_TOL).unwrap();
        assert_eq!(c.tight_walls, vec![1]);

        assert!(matches!(
            classify(&pt(&[0.6, 0.1, 0.1]), TIGHT_TOL),
            Err(Error::NotMember { .. })
        ));
    }

    #[test]
    fn classify_degenerate_residuals() {
        let c = classify(&pt(&[0.5; 4]), TIGHT_TOL).unwrap();
        assert_eq!(c.residual_l, 0);
        assert!(c.degenerate);
        let c = classify(&pt(&[0.0, 0.0, 0.5, 0.5]), TIGHT_TOL).unwrap();
        assert_eq!((c.residual_l, c.k_zero), (2, 2));
        assert!(c.degenerate);
    }

    #[test]
    fn four_qubit_table() {
        let v = vertices(4).unwrap();
        let labels: Vec<&str> = v.vertices.iter().map(|v| v.label.as_str()).collect();
        assert_eq!(
            labels,
            ["v_SEP", "v_B1", "v_B2", "v_B3", "v_B4", "v_B5", "v_B6", "v_4", "v_3", "v_2", "v_1", "v_GHZ"]
        );
        let h = half();
        let z = Rational64::zero();
        assert_eq!(v.find("v_B1").unwrap().lambdas, vec![z, z, h, h]);
        assert_eq!(v.find("v_B5").unwrap().lambdas, vec![h, z, h, z]);
        assert_eq!(v.find("v_1").unwrap().lambdas, vec![h, z, z, z]);
    }

    #[test]
    fn small_vertex_sets() {
        assert_eq!(vertices(3).unwrap().vertices.len(), 5);
        let v2 = vertices(2).unwrap();
        assert_eq!(
            v2.coordinate_set(),
            [vec![half(), half()], vec![Rational64::zero(); 2]].into()
        );
        assert_eq!(vertices(1).unwrap().vertices.len(), 1);
        assert!(vertices(0).is_err());
        assert!(vertices(21).is_err());
    }

    #[test]
    fn oracle_matches_closed_form_small() {
        for l in 2..=4 {
            assert_eq!(vertices_oracle(l).unwrap(), vertices(l).unwrap());
        }
        assert!(vertices_oracle(1).is_err());
        assert!(vertices_oracle(9).is_err());
    }

    #[test]
    fn facets_of_four_qubits() {
        let f = facets(4).unwrap();
        assert_eq!(f.len(), 12);
        let zero1 = f
            .iter()
            .find(|f| f.kind == InequalityKind::LowerBound && f.index == 1)
            .unwrap();
        let mut got = zero1.incident_vertices.clone();
        got.sort();
        let mut want = ["v_B1", "v_B2", "v_B3", "v_2", "v_3", "v_4", "v_GHZ"]
            .map(String::from)
            .to_vec();
        want.sort();
        assert_eq!(got, want);
        let half1 = f
            .iter()
            .find(|f| f.kind == InequalityKind::UpperBound && f.index == 1)
            .unwrap();
        assert!(half1.incident_vertices.contains(&"v_SEP".to_string()));
        assert_eq!(half1.incident_vertices.len(), 5);
        let wall1 = f
            .iter()
            .find(|f| f.kind == InequalityKind::Wall && f.index == 1)
            .unwrap();
        assert_eq!(wall1.incident_vertices, ["v_SEP", "v_B1", "v_B2", "v_B3"]);
    }

    #[test]
    fn three_qubit_facets_are_reported_as_found() {
        // Triangular bipyramid: the λ = 1/2 faces are edges only.
        let f = facets(3).unwrap();
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|f| f.kind != InequalityKind::UpperBound));
        assert!(facets(2).is_err());
    }

    #[test]
    fn no_vertex_has_single_zero() {
        for l in 2..=10 {
            for v in vertices(l).unwrap().vertices {
                assert_ne!(zeros_of(&v.lambdas).len(), 1);
            }
        }
    }

    #[test]
    fn edges_of_three_qubits() {
        // Bipyramid over a triangle: 3 equator edges + 6 apex edges.
        assert_eq!(edges(3).unwrap().len(), 9);
    }
}
