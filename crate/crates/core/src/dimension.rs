//! Closed-form dimension of the reduced space over a spectra point and the
//! resulting count of local-unitary invariants.
//!
//! Rules, applied in order to a [`StratumClass`] with residual size `L'`
//! (after stripping the coordinates equal to 1/2):
//!
//! 1. `L' ≤ 2`: 0 (product or two-qubit Schmidt fibre; composed).
//! 2. a tight wall in the residual system: 0.
//! 3. no residual zeros: `2^(L'+1) - 4L' - 2`.
//! 4. `k` residual zeros: `2^(L'+1) - 4L' - 2 - 2k` for `L' ≥ 4`, and 0 for `L' = 3`.
//!
//! The invariant count is always `dim M + L` with the original `L`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::{self, StratumClass, Vertex};
use crate::qstate::SpectraPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formula {
    Interior,
    #[serde(rename = "case1+interior")]
    Case1Interior,
    Case2,
    Case3,
    ThreeQubitBoundary,
    DegenerateProduct,
    Composed,
}

impl Formula {
    pub fn as_str(&self) -> &'static str {
        match self {
            Formula::Interior => "interior",
            Formula::Case1Interior => "case1+interior",
            Formula::Case2 => "case2",
            Formula::Case3 => "case3",
            Formula::ThreeQubitBoundary => "three-qubit-boundary",
            Formula::DegenerateProduct => "degenerate-product",
            Formula::Composed => "composed",
        }
    }
}

/// Whether the value is stated directly by a published closed form or obtained
/// by composing the Case-1 recursion with another rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    PaperExact,
    Composed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimReport {
    #[serde(rename = "dim_M")]
    pub dim_m: u64,
    pub num_invariants: u64,
    pub formula: Formula,
    pub status: Status,
    pub notes: Vec<String>,
}

/// `2^(L+1) - 4L - 2`, the generic (interior) reduced-space dimension.
pub fn generic_dim(num_qubits: usize) -> i64 {
    (1i64 << (num_qubits + 1)) - 4 * num_qubits as i64 - 2
}

pub fn dim_reduced_space(class: &StratumClass) -> Result<DimReport> {
    if !class.member {
        return Err(Error::NotMember {
            violations: class.violations.iter().map(|v| v.to_string()).collect(),
        });
    }
    let l = class.num_qubits;
    let lr = class.residual_l;
    let mut notes = Vec::new();
    if class.k_half > 0 {
        notes.push(format!(
            "{} coordinate(s) at 1/2 stripped; residual system of {lr} qubit(s)",
            class.k_half
        ));
    }

    let (dim, formula, status): (i64, Formula, Status) = if lr <= 2 {
        notes.push(format!("residual L' = {lr}: fibre is a single orbit"));
        (0, Formula::DegenerateProduct, Status::Composed)
    } else if !class.tight_walls.is_empty() {
        if class.k_zero > 0 {
            notes.push("tight wall with maximally mixed reductions: wall rule applied unconditionally".into());
        }
        (0, Formula::Case2, Status::PaperExact)
    } else if class.k_zero == 0 {
        let formula = if class.k_half == 0 {
            Formula::Interior
        } else {
            Formula::Case1Interior
        };
        (generic_dim(lr), formula, Status::PaperExact)
    } else if lr >= 4 {
        let d = generic_dim(lr) - 2 * class.k_zero as i64;
        if class.k_half == 0 {
            (d, Formula::Case3, Status::PaperExact)
        } else {
            notes.push("case-3 drop applied to the stripped system".into());
            (d, Formula::Composed, Status::Composed)
        }
    } else {
        let status = if class.k_half == 0 {
            Status::PaperExact
        } else {
            Status::Composed
        };
        (0, Formula::ThreeQubitBoundary, status)
    };

    if dim < 0 {
        return Err(Error::Invariant(format!(
            "negative reduced-space dimension {dim} for residual L' = {lr}, k_zero = {}",
            class.k_zero
        )));
    }
    let dim_m = dim as u64;
    Ok(DimReport {
        dim_m,
        num_invariants: dim_m + l as u64,
        formula,
        status,
        notes,
    })
}

/// Classification followed by the closed form.
pub fn dim_at(point: &SpectraPoint, tol: f64) -> Result<(StratumClass, DimReport)> {
    let class = polytope::classify(point, tol)?;
    let report = dim_reduced_space(&class)?;
    Ok((class, report))
}

/// Vertices and facets annotated with the reduced-space dimension over the
/// relative interior of each facet (evaluated at the facet's vertex centroid).
#[derive(Clone, Debug, Serialize)]
pub struct FaceLattice {
    #[serde(rename = "L")]
    pub num_qubits: usize,
    pub vertices: Vec<AnnotatedVertex>,
    pub edges: Vec<(String, String)>,
    pub facets: Vec<AnnotatedFacet>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnnotatedVertex {
    #[serde(flatten)]
    pub vertex: Vertex,
    #[serde(rename = "dim_M")]
    pub dim_m: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnnotatedFacet {
    #[serde(flatten)]
    pub facet: polytope::Facet,
    #[serde(rename = "dim_M_interior")]
    pub dim_m_interior: u64,
}

pub fn face_lattice(num_qubits: usize) -> Result<FaceLattice> {
    let verts = polytope::vertices(num_qubits)?;
    let facets = polytope::facets(num_qubits)?;
    let vertices = verts
        .vertices
        .iter()
        .map(|v| {
            let (_, r) = dim_at(&v.to_point(), polytope::TIGHT_TOL)?;
            Ok(AnnotatedVertex {
                vertex: v.clone(),
                dim_m: r.dim_m,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let facets = facets
        .into_iter()
        .map(|f| {
            let members: Vec<&Vertex> = f.incident_vertices.iter().filter_map(|l| verts.find(l)).collect();
            let n = num_rational::Rational64::from_integer(members.len() as i64);
            let centroid = (0..num_qubits)
                .map(|i| members.iter().map(|v| v.lambdas[i]).sum::<num_rational::Rational64>() / n)
                .collect();
            let (_, r) = dim_at(&SpectraPoint::from_exact(centroid)?, polytope::TIGHT_TOL)?;
            Ok(AnnotatedFacet {
                facet: f,
                dim_m_interior: r.dim_m,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FaceLattice {
        num_qubits,
        vertices,
        edges: polytope::edges(num_qubits)?,
        facets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::TIGHT_TOL;

    fn dim(v: &[f64]) -> DimReport {
        dim_at(&SpectraPoint::new(v.to_vec()).unwrap(), TIGHT_TOL).unwrap().1
    }

    #[test]
    fn three_qubit_interior() {
        let r = dim(&[0.1, 0.15, 0.2]);
        assert_eq!((r.dim_m, r.num_invariants), (2, 5));
        assert_eq!(r.formula, Formula::Interior);
    }

    #[test]
    fn four_qubit_values() {
        assert_eq!(dim(&[0.1, 0.2, 0.15, 0.05]).dim_m, 14);
        let r = dim(&[0.0, 0.1, 0.2, 0.15]);
        assert_eq!(
            (r.dim_m, r.num_invariants, r.formula, r.status),
            (12, 16, Formula::Case3, Status::PaperExact)
        );
        assert_eq!(dim(&[0.0, 0.0, 0.2, 0.15]).dim_m, 10);
        assert_eq!(dim(&[0.0, 0.0, 0.0, 0.15]).dim_m, 8);
        assert_eq!(dim(&[0.0; 4]).dim_m, 6);
        let r = dim(&[0.5, 0.1, 0.2, 0.15]);
        assert_eq!((r.dim_m, r.formula), (2, Formula::Case1Interior));
        assert_eq!(dim(&[0.5; 4]).dim_m, 0);
    }

    #[test]
    fn wall_gives_zero() {
        // p = (0.45, 0.2, 0.15, 0.1): p_1 = Σ others.
        let (c, r) = dim_at(&SpectraPoint::parse("0.05,0.3,0.35,0.4").unwrap(), TIGHT_TOL).unwrap();
        assert_eq!(c.tight_walls, vec![1]);
        assert_eq!((r.dim_m, r.formula), (0, Formula::Case2));
    }

    #[test]
    fn composed_case1_with_zeros() {
        let r = dim(&[0.5, 0.0, 0.1, 0.2, 0.15]);
        assert_eq!(
            (r.dim_m, r.formula, r.status),
            (12, Formula::Composed, Status::Composed)
        );
        assert_eq!(r.num_invariants, 17);
    }

    #[test]
    fn non_member_class_rejected() {
        let c = StratumClass::non_member(3, vec![]);
        assert!(matches!(dim_reduced_space(&c), Err(Error::NotMember { .. })));
    }

    #[test]
    fn generic_formula_values() {
        assert_eq!(generic_dim(3), 2);
        assert_eq!(generic_dim(4), 14);
        assert_eq!(generic_dim(5), 42);
    }

    #[test]
    fn four_qubit_lattice_annotations() {
        let fl = face_lattice(4).unwrap();
        assert_eq!(fl.facets.len(), 12);
        for f in &fl.facets {
            let want = match f.facet.kind {
                polytope::InequalityKind::Wall => 0,
                polytope::InequalityKind::LowerBound => 12,
                polytope::InequalityKind::UpperBound => 2,
            };
            assert_eq!(f.dim_m_interior, want, "{f:?}");
        }
        let ghz = fl.vertices.iter().find(|v| v.vertex.label == "v_GHZ").unwrap();
        assert_eq!(ghz.dim_m, 6);
    }
}
