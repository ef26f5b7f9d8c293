//! Tropical hypersurfaces and the set comparisons of the fundamental
//! theorem, on the torus and on the coordinate strata of `A^m`.
//!
//! Ideals are principal throughout, so the initial ideal `in_w(⟨f⟩)` is
//! generated by `in_w(f)` and set (2) is decided by that single form.

use std::collections::BTreeMap;

use crate::polyhedra::{Polyhedron, QVector, Rational};
use crate::puiseux::{Exponent, ExtQ, Mode, PuiseuxScalar, ValuedPolynomial};
use crate::{Error, Result};

/// A cell of a tropical complex: the locus where the terms `pair` tie for
/// the minimum, or the whole space when `pair` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub pair: Option<(Exponent, Exponent)>,
    pub polyhedron: Polyhedron,
}

/// A finite union of polyhedra in `Q^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalComplex {
    pub ambient_dim: usize,
    pub cells: Vec<Cell>,
}

impl TropicalComplex {
    pub fn empty(ambient_dim: usize) -> Self {
        TropicalComplex {
            ambient_dim,
            cells: vec![],
        }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        TropicalComplex {
            ambient_dim,
            cells: vec![Cell {
                pair: None,
                polyhedron: Polyhedron::whole(ambient_dim),
            }],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, w: &QVector) -> Result<bool> {
        for c in &self.cells {
            if c.polyhedron.contains(w)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn polyhedra(&self) -> Vec<Polyhedron> {
        self.cells.iter().map(|c| c.polyhedron.clone()).collect()
    }
}

fn finite_valuation(s: &PuiseuxScalar) -> Rational {
    s.valuation()
        .finite()
        .cloned()
        .expect("stored coefficients are nonzero")
}

fn exponent_vector(u: &Exponent) -> QVector {
    QVector::from_ints(u)
}

/// The locus in `Q^m` where the minimum defining `trop(f)` is attained at
/// least twice, one cell per pair of terms.
pub fn trop_hypersurface(f: &ValuedPolynomial) -> Result<TropicalComplex> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = f.nvars();
    let terms: Vec<(QVector, Rational, &Exponent)> = f
        .terms()
        .iter()
        .map(|(u, a)| (exponent_vector(u), finite_valuation(a), u))
        .collect();
    let mut cells = Vec::new();
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            let (ui, vi, ei) = &terms[i];
            let (uj, vj, ej) = &terms[j];
            // v_i + <u_i, w> = v_j + <u_j, w>
            let eq = (ui - uj, vj - vi);
            // v_k + <u_k, w> >= v_i + <u_i, w>
            let ineqs = terms
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, (uk, vk, _))| (uk - ui, vi - vk))
                .collect();
            let polyhedron = Polyhedron::new(m, ineqs, vec![eq])?;
            if !polyhedron.is_empty() {
                cells.push(Cell {
                    pair: Some(((*ei).clone(), (*ej).clone())),
                    polyhedron,
                });
            }
        }
    }
    Ok(TropicalComplex {
        ambient_dim: m,
        cells,
    })
}

/// Set (2): `in_w(f)` is not a monomial. The zero form counts as a member,
/// since then the whole stratum lies on the hypersurface.
pub fn membership_set2(f: &ValuedPolynomial, w: &[ExtQ]) -> Result<bool> {
    Ok(!f.initial_form(w)?.is_monomial())
}

/// Set (1) at an extended weight: with `σ` the infinite coordinates, `w`'s
/// finite part lies on the tropical hypersurface of `f` restricted to the
/// orbit `O_σ` (everything when the restriction vanishes).
pub fn membership_set1(f: &ValuedPolynomial, w: &[ExtQ]) -> Result<bool> {
    OrbitComplexes::new(f).contains(w)
}

/// Tropical complexes of `f` restricted to each orbit, computed on demand
/// and kept for repeated membership queries.
struct OrbitComplexes<'a> {
    f: &'a ValuedPolynomial,
    cache: BTreeMap<Vec<usize>, Option<TropicalComplex>>,
}

impl<'a> OrbitComplexes<'a> {
    fn new(f: &'a ValuedPolynomial) -> Self {
        OrbitComplexes {
            f,
            cache: BTreeMap::new(),
        }
    }

    fn contains(&mut self, w: &[ExtQ]) -> Result<bool> {
        let f = self.f;
        if w.len() != f.nvars() {
            return Err(Error::DimensionMismatch {
                expected: f.nvars(),
                found: w.len(),
            });
        }
        let sigma: Vec<usize> = (0..w.len()).filter(|&i| !w[i].is_finite()).collect();
        if !sigma.is_empty() && f.mode() == Mode::Laurent {
            return Err(Error::InfiniteWeightOnLaurent);
        }
        let finite = QVector::new(w.iter().filter_map(|x| x.finite().cloned()).collect());
        if !self.cache.contains_key(&sigma) {
            let restricted = if sigma.is_empty() {
                f.clone()
            } else {
                f.restrict_to_orbit(&sigma)?
            };
            // A vanishing restriction puts the whole orbit on the hypersurface.
            let complex = if restricted.is_zero() {
                None
            } else {
                Some(trop_hypersurface(&restricted)?)
            };
            self.cache.insert(sigma.clone(), complex);
        }
        match &self.cache[&sigma] {
            None => Ok(true),
            Some(c) => c.contains(&finite),
        }
    }
}

/// For every `σ ⊆ {0..m-1}` (0-based), the tropicalization of `V(f) ∩ O_σ`
/// inside `Q^{m-|σ|}`.
pub fn extended_trop_sets(f: &ValuedPolynomial) -> Result<BTreeMap<Vec<usize>, TropicalComplex>> {
    if f.mode() == Mode::Laurent {
        return Err(Error::LaurentNotAllowed);
    }
    let m = f.nvars();
    let mut out = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let sigma: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let r = f.restrict_to_orbit(&sigma)?;
        let complex = if r.is_zero() {
            TropicalComplex::whole(m - sigma.len())
        } else {
            trop_hypersurface(&r)?
        };
        out.insert(sigma, complex);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleVerdict {
    pub weight: Vec<ExtQ>,
    pub set1: bool,
    pub set2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessVerdict {
    pub point: Vec<PuiseuxScalar>,
    /// `x^c f(p)` with `c` clearing negative exponents; zero iff `f(p) = 0`.
    pub residual: PuiseuxScalar,
    pub valuations: Vec<ExtQ>,
    pub in_set1: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub samples: Vec<SampleVerdict>,
    pub witnesses: Vec<WitnessVerdict>,
}

impl EquivalenceReport {
    pub fn consistent(&self) -> bool {
        self.samples.iter().all(|s| s.set1 == s.set2)
            && self
                .witnesses
                .iter()
                .all(|w| w.residual.is_zero() && w.in_set1)
    }
}

/// Compares set (1) and set (2) at every sample and checks that each
/// witness is a zero of `f` whose valuation vector lies in set (1).
pub fn check_equivalence(
    f: &ValuedPolynomial,
    samples: &[Vec<ExtQ>],
    witnesses: &[Vec<PuiseuxScalar>],
) -> Result<EquivalenceReport> {
    let mut complexes = OrbitComplexes::new(f);
    let samples = samples
        .iter()
        .map(|w| {
            Ok(SampleVerdict {
                weight: w.clone(),
                set1: complexes.contains(w)?,
                set2: membership_set2(f, w)?,
            })
        })
        .collect::<Result<_>>()?;
    let witnesses = witnesses
        .iter()
        .map(|p| {
            if let Some(i) = p.iter().position(PuiseuxScalar::is_zero) {
                return Err(Error::ZeroWitnessCoordinate(i));
            }
            let residual = f.evaluate_cleared(p)?;
            let valuations: Vec<ExtQ> = p.iter().map(PuiseuxScalar::valuation).collect();
            let in_set1 = complexes.contains(&valuations)?;
            Ok(WitnessVerdict {
                point: p.clone(),
                residual,
                valuations,
                in_set1,
            })
        })
        .collect::<Result<_>>()?;
    Ok(EquivalenceReport { samples, witnesses })
}

/// A rational weight grid `{k/den : |k| <= radius·den}^m`.
pub fn sample_grid(m: usize, radius: i64, den: i64) -> Vec<QVector> {
    let axis: Vec<Rational> = (-radius * den..=radius * den)
        .map(|k| Rational::new(k.into(), den.into()))
        .collect();
    let mut out = vec![QVector::zeros(0)];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |x| {
                    let mut e = p.entries().to_vec();
                    e.push(x.clone());
                    QVector::new(e)
                })
            })
            .collect();
    }
    out
}

/// One relative-interior point per cell.
pub fn cell_samples(c: &TropicalComplex) -> Vec<QVector> {
    c.cells
        .iter()
        .filter_map(|cell| cell.polyhedron.interior_point())
        .collect()
}

/// Deterministic sample weights for `f`: a grid (coarser in three
/// variables), one interior point per cell of the hypersurface, and for
/// ordinary polynomials every grid point with each nonempty set of
/// coordinates sent to `∞`.
pub fn default_samples(f: &ValuedPolynomial) -> Result<Vec<Vec<ExtQ>>> {
    let m = f.nvars();
    let grid = if m >= 3 {
        sample_grid(m, 1, 2)
    } else {
        sample_grid(m, 2, 2)
    };
    let mut out: Vec<Vec<ExtQ>> = grid.iter().map(finite_weight).collect();
    out.extend(
        cell_samples(&trop_hypersurface(f)?)
            .iter()
            .map(finite_weight),
    );
    if f.mode() == Mode::Ordinary {
        for mask in 1u64..(1u64 << m) {
            for p in &grid {
                out.push(
                    p.iter()
                        .enumerate()
                        .map(|(i, x)| {
                            if mask & (1 << i) != 0 {
                                ExtQ::Infinite
                            } else {
                                ExtQ::Finite(x.clone())
                            }
                        })
                        .collect(),
                );
            }
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|w| seen.insert(w.clone()));
    Ok(out)
}

/// Weight vector with finite entries.
pub fn finite_weight(w: &QVector) -> Vec<ExtQ> {
    w.iter().cloned().map(ExtQ::Finite).collect()
}
