//! Exact rational linear algebra and polyhedral cones.
//!
//! Cones carry both descriptions: the generators they were built from, and a
//! canonical double description computed on demand (extreme rays reduced
//! modulo the lineality space and scaled to primitive integer vectors,
//! lineality in reduced row echelon form, facet normals likewise). Equality
//! and hashing-style keys go through the canonical form, so two cones built
//! from different generator lists compare equal whenever they are the same
//! point set.

mod chart;
mod cone;
mod dd;
pub mod linalg;
mod polyhedron;
mod vector;

pub use chart::QuotientChart;
pub use cone::Cone;
pub use dd::{double_description, Generators};
pub use polyhedron::{Polyhedron, PolyhedronGenerators};
pub use vector::{format_rational, parse_rational, QVector, Rational};
