use num_traits::{Signed, Zero};

use super::{double_description, Cone, QVector, Rational};
use crate::Result;

/// `{x : <a, x> >= b for (a, b) in inequalities, <a, x> = b for (a, b) in equations}`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    ambient_dim: usize,
    inequalities: Vec<(QVector, Rational)>,
    equations: Vec<(QVector, Rational)>,
}

/// Minkowski–Weyl decomposition `conv(vertices) + cone(rays) + span(lineality)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedronGenerators {
    pub vertices: Vec<QVector>,
    pub rays: Vec<QVector>,
    pub lineality: Vec<QVector>,
}

impl Polyhedron {
    pub fn new(
        ambient_dim: usize,
        inequalities: Vec<(QVector, Rational)>,
        equations: Vec<(QVector, Rational)>,
    ) -> Result<Polyhedron> {
        for (a, _) in inequalities.iter().chain(&equations) {
            a.check_dim(ambient_dim)?;
        }
        Ok(Polyhedron {
            ambient_dim,
            inequalities,
            equations,
        })
    }

    pub fn whole(ambient_dim: usize) -> Polyhedron {
        Polyhedron {
            ambient_dim,
            inequalities: vec![],
            equations: vec![],
        }
    }

    pub fn point(p: &QVector) -> Polyhedron {
        let dim = p.dim();
        Polyhedron {
            ambient_dim: dim,
            inequalities: vec![],
            equations: (0..dim)
                .map(|i| (QVector::unit(dim, i), p[i].clone()))
                .collect(),
        }
    }

    pub fn from_cone(c: &Cone) -> Polyhedron {
        Polyhedron {
            ambient_dim: c.ambient_dim(),
            inequalities: c
                .facets()
                .iter()
                .map(|f| (f.clone(), Rational::zero()))
                .collect(),
            equations: c
                .equations()
                .iter()
                .map(|e| (e.clone(), Rational::zero()))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn inequalities(&self) -> &[(QVector, Rational)] {
        &self.inequalities
    }

    pub fn equations(&self) -> &[(QVector, Rational)] {
        &self.equations
    }

    pub fn contains(&self, x: &QVector) -> Result<bool> {
        x.check_dim(self.ambient_dim)?;
        Ok(self.equations.iter().all(|(a, b)| &a.dot(x) == b)
            && self.inequalities.iter().all(|(a, b)| &a.dot(x) >= b))
    }

    /// Homogenisation `{(x, s) : <a, x> - b s >= 0, s >= 0}` in `Q^(m+1)`.
    fn homogenization_rows(&self) -> Vec<QVector> {
        let lift = |a: &QVector, b: &Rational| {
            let mut e = a.entries().to_vec();
            e.push(-b);
            QVector::new(e)
        };
        let mut rows: Vec<QVector> = self.inequalities.iter().map(|(a, b)| lift(a, b)).collect();
        for (a, b) in &self.equations {
            let r = lift(a, b);
            rows.push(-&r);
            rows.push(r);
        }
        rows.push(QVector::unit(self.ambient_dim + 1, self.ambient_dim));
        rows
    }

    pub fn generators(&self) -> PolyhedronGenerators {
        let m = self.ambient_dim;
        let g = double_description(m + 1, &self.homogenization_rows());
        let drop_last = |v: &QVector| QVector::new(v.entries()[..m].to_vec());
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in &g.rays {
            let s = &r[m];
            if s.is_positive() {
                vertices.push(drop_last(&r.scale(&s.recip())));
            } else {
                rays.push(drop_last(r));
            }
        }
        // the lineality of the homogenised cone lives in s = 0
        let lineality = g.lineality.iter().map(drop_last).collect();
        if vertices.is_empty() {
            return PolyhedronGenerators {
                vertices,
                rays: vec![],
                lineality: vec![],
            };
        }
        PolyhedronGenerators {
            vertices,
            rays,
            lineality,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.generators().vertices.is_empty()
    }

    /// A point of the polyhedron, if nonempty: the barycentre of its vertices
    /// plus every recession ray.
    pub fn interior_point(&self) -> Option<QVector> {
        let g = self.generators();
        if g.vertices.is_empty() {
            return None;
        }
        let n = Rational::from_integer((g.vertices.len() as i64).into());
        let centre = g
            .vertices
            .iter()
            .fold(QVector::zeros(self.ambient_dim), |acc, v| &acc + v)
            .scale(&n.recip());
        Some(g.rays.iter().fold(centre, |acc, r| &acc + r))
    }

    pub fn is_subset_of_cone(&self, c: &Cone) -> Result<bool> {
        if c.ambient_dim() != self.ambient_dim {
            return Err(crate::Error::DimensionMismatch {
                expected: c.ambient_dim(),
                found: self.ambient_dim,
            });
        }
        let g = self.generators();
        let mut all = g.vertices.iter().chain(&g.rays);
        let lin_ok = g
            .lineality
            .iter()
            .all(|l| c.contains(l).unwrap_or(false) && c.contains(&-l).unwrap_or(false));
        Ok(lin_ok && all.all(|p| c.contains(p).unwrap_or(false)))
    }

    /// Dimension of the affine hull, or `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        let g = self.generators();
        let base = g.vertices.first()?.clone();
        let mut dirs: Vec<QVector> = g.vertices.iter().map(|v| v - &base).collect();
        dirs.extend(g.rays.iter().cloned());
        dirs.extend(g.lineality.iter().cloned());
        Some(super::linalg::rank(&dirs, self.ambient_dim))
    }
}
