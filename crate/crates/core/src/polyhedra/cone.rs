use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use super::dd::{double_description, Generators};
use super::{linalg, QVector};
use crate::{Error, Result};

/// A rational polyhedral cone in `Q^m`.
///
/// Built from generators or from inequalities; the other description is
/// computed once on first use and cached, so a `Cone` can be shared freely
/// across threads.
#[derive(Clone)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<QVector>,
    canonical: OnceLock<Generators>,
    // Generators of the dual cone: rays are facet normals, lineality spans
    // the equations of the linear hull.
    dual: OnceLock<Generators>,
}

impl Cone {
    pub fn from_generators(ambient_dim: usize, generators: Vec<QVector>) -> Result<Cone> {
        for g in &generators {
            g.check_dim(ambient_dim)?;
        }
        Ok(Cone {
            ambient_dim,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            canonical: OnceLock::new(),
            dual: OnceLock::new(),
        })
    }

    /// `{x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}`
    pub fn from_inequalities(
        ambient_dim: usize,
        inequalities: &[QVector],
        equations: &[QVector],
    ) -> Result<Cone> {
        let mut rows = Vec::with_capacity(inequalities.len() + 2 * equations.len());
        for a in inequalities {
            a.check_dim(ambient_dim)?;
            rows.push(a.clone());
        }
        for e in equations {
            e.check_dim(ambient_dim)?;
            rows.push(e.clone());
            rows.push(-e);
        }
        Ok(Cone::from_canonical(
            ambient_dim,
            double_description(ambient_dim, &rows),
        ))
    }

    fn from_canonical(ambient_dim: usize, canonical: Generators) -> Cone {
        let generators = generators_of(&canonical);
        let cell = OnceLock::new();
        let _ = cell.set(canonical);
        Cone {
            ambient_dim,
            generators,
            canonical: cell,
            dual: OnceLock::new(),
        }
    }

    /// The cone `{0}`.
    pub fn origin(ambient_dim: usize) -> Cone {
        Cone::from_canonical(
            ambient_dim,
            Generators {
                lineality: vec![],
                rays: vec![],
            },
        )
    }

    pub fn full(ambient_dim: usize) -> Cone {
        Cone::from_canonical(
            ambient_dim,
            Generators {
                lineality: (0..ambient_dim)
                    .map(|i| QVector::unit(ambient_dim, i))
                    .collect(),
                rays: vec![],
            },
        )
    }

    pub fn ray(direction: QVector) -> Cone {
        let dim = direction.dim();
        Cone::from_generators(dim, vec![direction]).expect("dimension is taken from the ray")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The generators this cone was built from (zero vectors removed).
    pub fn generators(&self) -> &[QVector] {
        &self.generators
    }

    pub fn canonical(&self) -> &Generators {
        self.canonical.get_or_init(|| {
            let facets = self.dual_generators();
            let mut rows = facets.rays.clone();
            for e in &facets.lineality {
                rows.push(e.clone());
                rows.push(-e);
            }
            double_description(self.ambient_dim, &rows)
        })
    }

    fn dual_generators(&self) -> &Generators {
        self.dual
            .get_or_init(|| double_description(self.ambient_dim, &self.generators))
    }

    /// Extreme rays modulo the lineality space, canonical form.
    pub fn rays(&self) -> &[QVector] {
        &self.canonical().rays
    }

    pub fn lineality(&self) -> &[QVector] {
        &self.canonical().lineality
    }

    /// Inner facet normals: `<f, x> >= 0` on the cone.
    pub fn facets(&self) -> &[QVector] {
        &self.dual_generators().rays
    }

    /// Basis of the linear equations satisfied by the cone.
    pub fn equations(&self) -> &[QVector] {
        &self.dual_generators().lineality
    }

    /// Rays together with both signs of each lineality basis vector.
    pub fn all_generators(&self) -> Vec<QVector> {
        generators_of(self.canonical())
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations().len()
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.lineality().is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, v: &QVector) -> Result<bool> {
        v.check_dim(self.ambient_dim)?;
        Ok(self.contains_unchecked(v))
    }

    fn contains_unchecked(&self, v: &QVector) -> bool {
        self.equations().iter().all(|e| e.dot(v).is_zero())
            && self.facets().iter().all(|f| !f.dot(v).is_negative())
    }

    /// Membership in the relative interior. Every facet normal is nonzero on
    /// the cone (normals are reduced modulo the equations), so strictness on
    /// all of them characterises the relative interior.
    pub fn relint_contains(&self, v: &QVector) -> Result<bool> {
        v.check_dim(self.ambient_dim)?;
        Ok(self.equations().iter().all(|e| e.dot(v).is_zero())
            && self.facets().iter().all(|f| f.dot(v).is_positive()))
    }

    /// A point of the relative interior: the sum of the extreme rays.
    pub fn relint_point(&self) -> QVector {
        self.rays()
            .iter()
            .fold(QVector::zeros(self.ambient_dim), |acc, r| &acc + r)
    }

    /// Whether `other` is contained in `self` as a point set.
    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.ambient_dim == self.ambient_dim
            && other.generators.iter().all(|g| self.contains_unchecked(g))
    }

    /// Point-set equality, checked as mutual containment.
    pub fn same_set(&self, other: &Cone) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }

    pub fn dual(&self) -> Cone {
        Cone::from_canonical(self.ambient_dim, self.dual_generators().clone())
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut ineqs: Vec<QVector> = self.facets().to_vec();
        ineqs.extend_from_slice(other.facets());
        let mut eqs: Vec<QVector> = self.equations().to_vec();
        eqs.extend_from_slice(other.equations());
        Cone::from_inequalities(self.ambient_dim, &ineqs, &eqs)
    }

    /// Whether the relative interior of `self` meets `other`.
    ///
    /// If it does, the relative interior of `self ∩ other` lies inside the
    /// relative interior of `self`, so testing one interior point of the
    /// intersection decides the question exactly.
    pub fn relint_meets(&self, other: &Cone) -> Result<bool> {
        let k = self.intersect(other)?;
        self.relint_contains(&k.relint_point())
    }

    /// All faces, from the lineality space up to the cone itself, without
    /// duplicates, ordered by dimension.
    pub fn faces(&self) -> Vec<Cone> {
        let rays = self.rays();
        let facets = self.facets();
        let zero_sets: Vec<BTreeSet<usize>> = facets
            .iter()
            .map(|f| {
                (0..rays.len())
                    .filter(|&i| f.dot(&rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let full: BTreeSet<usize> = (0..rays.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue = VecDeque::from([full.clone()]);
        seen.insert(full);
        while let Some(face) = queue.pop_front() {
            for z in &zero_sets {
                let next: BTreeSet<usize> = face.intersection(z).copied().collect();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let lineality = self.lineality();
        let mut faces: Vec<Cone> = seen
            .into_iter()
            .map(|set| {
                Cone::from_canonical(
                    self.ambient_dim,
                    Generators {
                        lineality: lineality.to_vec(),
                        rays: set.into_iter().map(|i| rays[i].clone()).collect(),
                    },
                )
            })
            .collect();
        faces.sort_by(|a, b| (a.dim(), a.rays()).cmp(&(b.dim(), b.rays())));
        faces
    }

    /// Whether `other` is a face of `self`: contained in it and equal to the
    /// smallest face of `self` containing an interior point of `other`.
    pub fn has_face(&self, other: &Cone) -> bool {
        if !self.contains_cone(other) {
            return false;
        }
        let p = other.relint_point();
        let tight: Vec<QVector> = self
            .facets()
            .iter()
            .filter(|f| f.dot(&p).is_zero())
            .cloned()
            .collect();
        let mut eqs = self.equations().to_vec();
        eqs.extend(tight);
        let smallest = Cone::from_inequalities(self.ambient_dim, self.facets(), &eqs)
            .expect("dimensions agree");
        smallest.same_set(other)
    }

    /// Linear span basis in reduced row echelon form.
    pub fn span_basis(&self) -> Vec<QVector> {
        linalg::rref(&self.generators, self.ambient_dim).0
    }
}

fn generators_of(g: &Generators) -> Vec<QVector> {
    let mut out = g.rays.clone();
    for l in &g.lineality {
        out.push(l.clone());
        out.push(-l);
    }
    out
}

impl PartialEq for Cone {
    fn eq(&self, other: &Cone) -> bool {
        self.ambient_dim == other.ambient_dim && self.same_set(other)
    }
}

impl Eq for Cone {}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone{self}")
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for r in self.rays() {
            if !first {
                write!(f, ";")?;
            }
            first = false;
            write!(f, "{r}")?;
        }
        if !self.lineality().is_empty() {
            write!(f, "|lin")?;
            for l in self.lineality() {
                write!(f, "{l}")?;
            }
        }
        write!(f, "]")
    }
}
