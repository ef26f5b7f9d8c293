//! Exact colored-fan combinatorics and extended tropicalization of spherical
//! embeddings.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyhedra`]: exact rational cones, dual descriptions, faces and
//!   quotient charts.
//! * [`spherical`]: spherical data (rank, valuation cone, palette) and the
//!   colored cone / colored fan axioms.
//! * [`troposphere`]: the face-wise extended tropicalization `⊔ V_τ`.
//! * [`puiseux`]: finite Puiseux scalars, valued polynomials, tropical
//!   evaluation and initial forms.
//! * [`fundthm`]: hypersurface tropicalizations and the set comparisons of
//!   the fundamental theorem, classical and extended.
//! * [`grobtrop`]: the Gröbner-side extended tropicalization and the
//!   comparison against the face-wise construction.
//!
//! Interchangeable algorithms (tropicalization routes, initial-form methods,
//! figure renderers) are registered by name in [`strategy`] and selected at
//! runtime.

pub mod builtin;
pub mod error;
pub mod fundthm;
pub mod grobtrop;
pub mod io;
pub mod polyhedra;
pub mod puiseux;
pub mod render;
pub mod spherical;
pub mod strategy;
pub mod troposphere;

pub use error::{Error, Result};
pub use polyhedra::{Cone, Polyhedron, QVector, QuotientChart, Rational};
