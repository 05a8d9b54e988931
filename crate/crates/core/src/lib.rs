//! Reduced-space dimensions for local-unitary equivalence of multi-qubit
//! pure states.
//!
//! Given the one-qubit reduced spectra of an `L`-qubit pure state (or the
//! state itself), the crate locates the spectra inside the polytope of
//! admissible spectra, classifies the boundary stratum, and returns the
//! dimension of the reduced space over that point. That dimension plus `L`
//! is the number of invariant polynomials needed to decide local-unitary
//! equivalence at those spectra.
//!
//! Every closed-form value has an independent numerical route:
//! [`polytope::vertices_oracle`] for the vertex set, [`fiberlab`] for
//! regular-stratum dimensions, [`wall::torus_transitivity_check`] for walls,
//! and [`stability`] for the stable states behind the maximally-mixed drop.

pub mod acceptance;
pub mod dimension;
pub mod error;
pub mod fiberlab;
pub mod linalg;
pub mod polytope;
pub mod qstate;
pub mod stability;
pub mod wall;

pub use error::{Error, ErrorFamily, Result};
pub use qstate::{PureState, SpectraPoint};
