use super::{linalg, Cone, QVector, Rational};
use crate::Result;

/// Coordinates on `Q^m / span(S)`.
///
/// The chart is an ordered basis `b_1..b_k` of the orthogonal complement of
/// `span(S)`, obtained from Gaussian elimination on the rows of `S` (one
/// basis vector per free column). A vector `x` has coordinates
/// `(<b_1, x>, ..., <b_k, x>)`, which depend only on `x` modulo `span(S)`.
/// Because the complement is `S^⊥`, the basis also spans exactly the
/// characters that pair to zero with `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientChart {
    ambient_dim: usize,
    basis: Vec<QVector>,
}

impl QuotientChart {
    pub fn new(ambient_dim: usize, subspace_gens: &[QVector]) -> Result<QuotientChart> {
        for g in subspace_gens {
            g.check_dim(ambient_dim)?;
        }
        Ok(QuotientChart {
            ambient_dim,
            basis: linalg::nullspace(subspace_gens, ambient_dim),
        })
    }

    /// Chart for the quotient by the linear span of a cone.
    pub fn for_cone(cone: &Cone) -> QuotientChart {
        QuotientChart::new(cone.ambient_dim(), cone.generators()).expect("cone dims agree")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quotient_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    pub fn project(&self, x: &QVector) -> Result<QVector> {
        x.check_dim(self.ambient_dim)?;
        Ok(QVector::new(self.basis.iter().map(|b| b.dot(x)).collect()))
    }

    pub fn project_cone(&self, c: &Cone) -> Result<Cone> {
        let gens = c
            .all_generators()
            .iter()
            .map(|g| self.project(g))
            .collect::<Result<Vec<_>>>()?;
        Cone::from_generators(self.quotient_dim(), gens)
    }

    /// Writes a character `u` vanishing on the subspace as a combination of
    /// the chart basis; `None` if `u` does not vanish there.
    pub fn character_coordinates(&self, u: &QVector) -> Result<Option<Vec<Rational>>> {
        u.check_dim(self.ambient_dim)?;
        Ok(linalg::solve_in_span(&self.basis, u))
    }
}
