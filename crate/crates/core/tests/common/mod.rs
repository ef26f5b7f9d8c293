//! Seeded random generators shared by the integration tests and the
//! acceptance harness.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sphertrop::polyhedra::{Cone, QVector, Rational};
use sphertrop::puiseux::{Mode, PuiseuxScalar, ValuedPolynomial};
use sphertrop::spherical::{
    colored_faces, validate_colored_cone, validate_colored_fan, Color, ColoredCone, ColoredFan,
    SphericalDatum,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(rng: &mut impl Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    Rational::new(rng.gen_range(lo * den..=hi * den).into(), den.into())
}

pub fn small_vec(rng: &mut impl Rng, m: usize, r: i64) -> QVector {
    QVector::from_ints(&(0..m).map(|_| rng.gen_range(-r..=r)).collect::<Vec<_>>())
}

pub fn nonzero_vec(rng: &mut impl Rng, m: usize, r: i64) -> QVector {
    loop {
        let v = small_vec(rng, m, r);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A Puiseux scalar with `1..=max_terms` terms, exponents in `[-2, 2]` with
/// denominators up to `max_den`, small nonzero integer coefficients.
pub fn scalar(rng: &mut impl Rng, max_terms: usize, max_den: i64) -> PuiseuxScalar {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let s = PuiseuxScalar::from_terms((0..n).map(|_| {
            let c = loop {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    break c;
                }
            };
            (rat(rng, -2, 2, max_den), Rational::from_integer(c.into()))
        }));
        if !s.is_zero() {
            return s;
        }
    }
}

/// A nonzero Laurent polynomial in `m` variables with at most `max_terms`
/// terms and exponents in `[-2, 2]`.
pub fn laurent(
    rng: &mut impl Rng,
    m: usize,
    max_terms: usize,
    coeff_terms: usize,
    max_den: i64,
) -> ValuedPolynomial {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms: Vec<(Vec<i64>, PuiseuxScalar)> = (0..n)
            .map(|_| {
                let e = (0..m).map(|_| rng.gen_range(-2..=2)).collect();
                (e, scalar(rng, coeff_terms, max_den))
            })
            .collect();
        let f = ValuedPolynomial::from_terms(m, Mode::Laurent, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// An ordinary polynomial with exponents in `[0, 2]`.
pub fn ordinary(rng: &mut impl Rng, m: usize, max_terms: usize) -> ValuedPolynomial {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms: Vec<(Vec<i64>, PuiseuxScalar)> = (0..n)
            .map(|_| {
                (
                    (0..m).map(|_| rng.gen_range(0..=2)).collect(),
                    scalar(rng, 2, 2),
                )
            })
            .collect();
        let f = ValuedPolynomial::from_terms(m, Mode::Ordinary, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// A datum of rank `1..=3` with a full-dimensional valuation cone cut out
/// by at most `m` random inequalities and up to three colors.
pub fn datum(rng: &mut impl Rng) -> SphericalDatum {
    let m = rng.gen_range(1..=3);
    loop {
        let k = rng.gen_range(0..=m);
        let ineqs: Vec<QVector> = (0..k).map(|_| nonzero_vec(rng, m, 2)).collect();
        let v = Cone::from_inequalities(m, &ineqs, &[]).unwrap();
        if v.dim() != m {
            continue;
        }
        let palette = (0..rng.gen_range(0..=3))
            .map(|i| Color {
                name: format!("D{i}"),
                rho: nonzero_vec(rng, m, 2),
            })
            .collect();
        return SphericalDatum::new(m, v, palette).unwrap();
    }
}

/// A point of `V` with small entries, or `None` after a few misses.
fn point_of(rng: &mut impl Rng, v: &Cone) -> Option<QVector> {
    (0..20)
        .map(|_| nonzero_vec(rng, v.ambient_dim(), 3))
        .find(|p| v.contains(p).unwrap())
}

/// A strictly valid colored cone: generated by `ρ(F)` for a random color
/// subset `F` and a few random points of `V`.
pub fn colored_cone(rng: &mut impl Rng, d: &SphericalDatum) -> Option<ColoredCone> {
    let m = d.rank();
    let mut colors = BTreeSet::new();
    let mut gens = Vec::new();
    for c in d.palette() {
        if rng.gen_bool(0.4) {
            colors.insert(c.name.clone());
            gens.push(c.rho.clone());
        }
    }
    for _ in 0..rng.gen_range(0..=m) {
        gens.push(point_of(rng, d.valuation_cone())?);
    }
    let cc = ColoredCone {
        cone: Cone::from_generators(m, gens).unwrap(),
        colors,
    };
    validate_colored_cone(d, &cc)
        .unwrap()
        .is_strictly_valid()
        .then_some(cc)
}

/// Closes a set of colored cones under colored faces.
pub fn close_under_faces(d: &SphericalDatum, members: &[ColoredCone]) -> ColoredFan {
    let mut cones: Vec<ColoredCone> = Vec::new();
    for m in members {
        for f in colored_faces(d, m).unwrap() {
            if !cones.contains(&f) {
                cones.push(f);
            }
        }
    }
    ColoredFan::new(cones)
}

/// A random strictly valid colored fan over a random datum, by rejection.
pub fn colored_fan(rng: &mut impl Rng) -> (SphericalDatum, ColoredFan) {
    loop {
        let d = datum(rng);
        let mut members = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            if let Some(cc) = colored_cone(rng, &d) {
                members.push(cc);
            }
        }
        if members.is_empty() {
            continue;
        }
        let fan = close_under_faces(&d, &members);
        if validate_colored_fan(&d, &fan, true)
            .unwrap()
            .is_strictly_valid()
        {
            return (d, fan);
        }
    }
}

/// A random unimodular matrix as a product of elementary operations.
pub fn unimodular(rng: &mut impl Rng, m: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect();
    if m < 2 {
        return a;
    }
    for _ in 0..4 {
        let i = rng.gen_range(0..m);
        let j = loop {
            let j = rng.gen_range(0..m);
            if j != i {
                break j;
            }
        };
        let k = rng.gen_range(-1..=1);
        for row in a.iter_mut() {
            row[i] += k * row[j];
        }
    }
    let mut cols: Vec<usize> = (0..m).collect();
    cols.shuffle(rng);
    a.into_iter()
        .map(|row| cols.iter().map(|&c| row[c]).collect())
        .collect()
}

pub fn apply(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// A classical simplicial fan: a subfan of the orthant fan of `A^m` or of
/// the fan of `P^m`, given by the generator index sets of its maximal
/// cones together with the generators themselves (after a unimodular map).
pub struct SimplicialFan {
    pub m: usize,
    pub generators: Vec<Vec<i64>>,
    pub maximal: Vec<BTreeSet<usize>>,
}

pub fn simplicial_fan(rng: &mut impl Rng) -> SimplicialFan {
    let m = rng.gen_range(1..=3);
    let mut generators: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect();
    let projective = rng.gen_bool(0.5);
    let all: Vec<BTreeSet<usize>> = if projective {
        generators.push(vec![-1; m]);
        (0..=m)
            .map(|skip| (0..=m).filter(|&i| i != skip).collect())
            .collect()
    } else {
        vec![(0..m).collect()]
    };
    let a = unimodular(rng, m);
    let generators = generators.iter().map(|g| apply(&a, g)).collect();
    // Random subfan: keep a random nonempty subset of faces of the maximal
    // cones, taking each kept set as maximal.
    let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
    for s in &all {
        if rng.gen_bool(0.7) {
            let sub: BTreeSet<usize> = s.iter().copied().filter(|_| rng.gen_bool(0.8)).collect();
            maximal.push(sub);
        }
    }
    if maximal.is_empty() {
        maximal.push(BTreeSet::new());
    }
    SimplicialFan {
        m,
        generators,
        maximal,
    }
}

impl SimplicialFan {
    /// Every face, as a generator index set (faces of simplicial cones are
    /// exactly the subsets of their generators).
    pub fn faces(&self) -> BTreeSet<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for s in &self.maximal {
            let items: Vec<usize> = s.iter().copied().collect();
            for mask in 0u32..(1 << items.len()) {
                out.insert(
                    (0..items.len())
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| items[i])
                        .collect(),
                );
            }
        }
        out
    }

    pub fn cone_of(&self, set: &BTreeSet<usize>) -> Cone {
        Cone::from_generators(
            self.m,
            set.iter()
                .map(|&i| QVector::from_ints(&self.generators[i]))
                .collect(),
        )
        .unwrap()
    }

    pub fn colored_fan(&self) -> ColoredFan {
        ColoredFan::new(
            self.faces()
                .iter()
                .map(|s| ColoredCone::uncolored(self.cone_of(s)))
                .collect(),
        )
    }
}

/// Finite and extended sample weights for `f`: a rational grid plus one
/// interior point per cell of its tropical hypersurface, and for ordinary
/// polynomials the same grid with random coordinates sent to `∞`.
pub fn weights_for(rng: &mut impl Rng, f: &ValuedPolynomial) -> Vec<Vec<sphertrop::puiseux::ExtQ>> {
    use sphertrop::fundthm::{cell_samples, finite_weight, sample_grid, trop_hypersurface};
    use sphertrop::puiseux::ExtQ;
    let m = f.nvars();
    let (radius, den) = if m == 3 { (1, 2) } else { (2, 2) };
    let mut points = sample_grid(m, radius, den);
    points.extend(cell_samples(&trop_hypersurface(f).unwrap()));
    let mut out: Vec<Vec<ExtQ>> = points.iter().map(finite_weight).collect();
    if f.mode() == Mode::Ordinary {
        let extended: Vec<Vec<ExtQ>> = out
            .iter()
            .map(|w| {
                w.iter()
                    .map(|x| {
                        if rng.gen_bool(0.3) {
                            ExtQ::Infinite
                        } else {
                            x.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        out.extend(extended);
    }
    out
}

/// A hypersurface with a known torus point: `f = a·x1 + g(x2, ..)` where
/// `a` is a monomial in `t`, and `x1 = -g(p)/a` for random `p`.
pub fn witness(rng: &mut impl Rng) -> (ValuedPolynomial, Vec<PuiseuxScalar>) {
    loop {
        let m = rng.gen_range(2..=3);
        let g = ordinary(rng, m, 4);
        if g.terms().keys().any(|e| e[0] != 0) {
            continue;
        }
        let a = PuiseuxScalar::monomial(
            Rational::from_integer(rng.gen_range(1..=3).into()),
            rat(rng, -1, 1, 2),
        );
        let mut e1 = vec![0; m];
        e1[0] = 1;
        let f = &g + &ValuedPolynomial::monomial(m, Mode::Ordinary, e1, a.clone()).unwrap();
        let mut p: Vec<PuiseuxScalar> = (0..m).map(|_| scalar(rng, 2, 2)).collect();
        p[0] = PuiseuxScalar::one();
        let gp = g.evaluate_cleared(&p).unwrap();
        if gp.is_zero() {
            continue;
        }
        p[0] = -&(&gp * &a.inverse().unwrap());
        return (f, p);
    }
}

/// Classical extended tropicalization of a simplicial toric fan, coded
/// from the face poset alone: one stratum `Q^m / span(τ)` per face, with
/// the whole quotient as its tropical part.
pub struct OracleStratum {
    pub face: Cone,
    pub quotient_dim: usize,
    pub maximal: BTreeSet<String>,
    pub faces: BTreeSet<String>,
}

pub fn simplicial_oracle(sf: &SimplicialFan) -> Vec<OracleStratum> {
    let faces = sf.faces();
    let key = |s: &BTreeSet<usize>| ColoredCone::uncolored(sf.cone_of(s)).to_string();
    let maximal: Vec<&BTreeSet<usize>> = faces
        .iter()
        .filter(|s| !faces.iter().any(|t| t != *s && s.is_subset(t)))
        .collect();
    faces
        .iter()
        .map(|s| OracleStratum {
            face: sf.cone_of(s),
            quotient_dim: sf.m - s.len(),
            maximal: maximal
                .iter()
                .filter(|t| s.is_subset(t))
                .map(|t| key(t))
                .collect(),
            faces: faces
                .iter()
                .filter(|t| t.is_subset(s) && *t != s)
                .map(key)
                .collect(),
        })
        .collect()
}

/// Compares a computed tropicalization of a classical fan with the oracle.
pub fn check_against_oracle(
    sf: &SimplicialFan,
    trop: &sphertrop::troposphere::ExtendedTrop,
) -> Result<(), String> {
    let oracle = simplicial_oracle(sf);
    if trop.strata().len() != oracle.len() {
        return Err(format!(
            "{} strata, oracle has {}",
            trop.strata().len(),
            oracle.len()
        ));
    }
    for o in &oracle {
        let s = trop
            .strata()
            .iter()
            .find(|s| s.face.cone == o.face)
            .ok_or_else(|| format!("no stratum for {}", o.face))?;
        let annihilates = o
            .face
            .all_generators()
            .iter()
            .all(|g| s.chart.project(g).unwrap().is_zero());
        if s.quotient_dim() != o.quotient_dim
            || !annihilates
            || s.valuation_cone_image != Cone::full(o.quotient_dim)
            || s.maximal != o.maximal
            || s.faces != o.faces
        {
            return Err(format!("stratum {} differs from the oracle", s.key));
        }
    }
    Ok(())
}
