//! The extended tropicalization `trop_G(X) = ⊔_τ V_τ` of a spherical
//! embedding, computed face by face.
//!
//! Each colored face `τ` of a maximal cone of the fan contributes one
//! stratum: the image of the valuation cone in `Q^m / span(τ)`, written in
//! the canonical [`QuotientChart`] of `span(τ)`. Strata of different maximal
//! cones are identified when their colored faces agree.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::fundthm;
use crate::polyhedra::{Cone, Polyhedron, QVector, QuotientChart, Rational};
use crate::puiseux::{ExtQ, ValuedPolynomial};
use crate::spherical::{
    colored_faces, validate_colored_fan, ColoredCone, ColoredFan, SphericalDatum,
};
use crate::{Error, Result};

/// Canonical identity of a colored face: its canonical rays, lineality and
/// sorted colors, rendered as text.
pub fn face_key(face: &ColoredCone) -> String {
    face.to_string()
}

/// Coarse shape of a cone of dimension at most two; `"cone"` otherwise.
pub fn cone_shape(c: &Cone) -> &'static str {
    match (c.dim(), c.lineality().len()) {
        (0, _) => "point",
        (1, 1) => "line",
        (1, _) => "ray",
        (2, 2) => "plane",
        (2, 1) => "halfplane",
        (2, _) => "sector",
        _ => "cone",
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub key: String,
    pub face: ColoredCone,
    pub chart: QuotientChart,
    /// `V_τ`: the valuation cone projected to the chart of `span(τ)`.
    pub valuation_cone_image: Cone,
    /// Keys of the maximal colored cones having this stratum as a colored face.
    pub maximal: BTreeSet<String>,
    /// Keys of the strata of proper colored faces of `τ`.
    pub faces: BTreeSet<String>,
}

impl Stratum {
    pub fn quotient_dim(&self) -> usize {
        self.chart.quotient_dim()
    }

    pub fn face_dim(&self) -> usize {
        self.face.cone.dim()
    }

    pub fn labels(&self) -> &BTreeSet<String> {
        &self.face.colors
    }

    pub fn shape(&self) -> &'static str {
        cone_shape(&self.valuation_cone_image)
    }
}

/// A point of one stratum, in that stratum's chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedPoint {
    pub stratum: String,
    pub value: QVector,
}

/// Strata summary `(dim τ, shape of V_τ, labels)`, sorted.
pub type StrataSummary = Vec<(usize, &'static str, Vec<String>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedTrop {
    rank: usize,
    valuation_cone: Cone,
    maximal_cones: Vec<ColoredCone>,
    strata: Vec<Stratum>,
}

impl ExtendedTrop {
    /// Assembles a tropicalization from its parts, sorting maximal cones by
    /// key and strata by `(dim τ, key)`. Keys must be unique and every
    /// referenced key must be present.
    pub fn from_parts(
        rank: usize,
        valuation_cone: Cone,
        mut maximal_cones: Vec<ColoredCone>,
        mut strata: Vec<Stratum>,
    ) -> Result<ExtendedTrop> {
        if valuation_cone.ambient_dim() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: valuation_cone.ambient_dim(),
            });
        }
        maximal_cones.sort_by_cached_key(face_key);
        strata.sort_by(|a, b| (a.face_dim(), &a.key).cmp(&(b.face_dim(), &b.key)));
        let keys: BTreeSet<&str> = strata.iter().map(|s| s.key.as_str()).collect();
        if keys.len() != strata.len() {
            return Err(Error::Parse("duplicate stratum keys".into()));
        }
        let max_keys: BTreeSet<String> = maximal_cones.iter().map(face_key).collect();
        for s in &strata {
            if s.face.cone.ambient_dim() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: s.face.cone.ambient_dim(),
                });
            }
            if let Some(k) = s.faces.iter().find(|k| !keys.contains(k.as_str())) {
                return Err(Error::UnknownStratum(k.clone()));
            }
            if let Some(k) = s.maximal.iter().find(|k| !max_keys.contains(*k)) {
                return Err(Error::UnknownStratum(k.clone()));
            }
        }
        Ok(ExtendedTrop {
            rank,
            valuation_cone,
            maximal_cones,
            strata,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn valuation_cone(&self) -> &Cone {
        &self.valuation_cone
    }

    pub fn maximal_cones(&self) -> &[ColoredCone] {
        &self.maximal_cones
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, key: &str) -> Result<&Stratum> {
        self.strata
            .iter()
            .find(|s| s.key == key)
            .ok_or_else(|| Error::UnknownStratum(key.to_string()))
    }

    /// The stratum of the colored face `{0}`, carrying `V` itself.
    pub fn open_stratum(&self) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.face.cone.is_origin())
    }

    pub fn summary(&self) -> StrataSummary {
        let mut out: StrataSummary = self
            .strata
            .iter()
            .map(|s| {
                (
                    s.face_dim(),
                    s.shape(),
                    s.labels().iter().cloned().collect(),
                )
            })
            .collect();
        out.sort();
        out
    }

    /// `p(u)` for a character `u` in the dual of a maximal cone containing
    /// the stratum: `∞` off `τ⊥`, otherwise the pairing of `u` with any lift
    /// of the point.
    pub fn evaluate_point(&self, p: &ExtendedPoint, u: &QVector) -> Result<ExtQ> {
        let s = self.stratum(&p.stratum)?;
        p.value.check_dim(s.quotient_dim())?;
        u.check_dim(self.rank)?;
        let mut in_some_dual = false;
        for m in &self.maximal_cones {
            if s.maximal.contains(&face_key(m)) && m.cone.dual().contains(u)? {
                in_some_dual = true;
                break;
            }
        }
        if !in_some_dual {
            return Err(Error::OutsideDualCone(u.to_string()));
        }
        Ok(match s.chart.character_coordinates(u)? {
            None => ExtQ::Infinite,
            Some(lambda) => ExtQ::Finite(
                lambda
                    .iter()
                    .zip(p.value.iter())
                    .fold(Rational::zero(), |acc, (l, x)| acc + l * x),
            ),
        })
    }

    /// The limit of `w + n·r` as `n → ∞` for `r` in the relative interior of
    /// `τ`: the projection of `w` into the stratum of `τ`.
    pub fn limit_point(&self, w: &QVector, key: &str) -> Result<ExtendedPoint> {
        let s = self.stratum(key)?;
        if !self.valuation_cone.contains(w)? {
            return Err(Error::OutsideValuationCone(w.to_string()));
        }
        Ok(ExtendedPoint {
            stratum: s.key.clone(),
            value: s.chart.project(w)?,
        })
    }

    pub fn contains_point(&self, p: &ExtendedPoint) -> Result<bool> {
        let s = self.stratum(&p.stratum)?;
        s.valuation_cone_image.contains(&p.value)
    }

    /// Tags per-stratum polyhedral sets as a subset of this tropicalization,
    /// checking that each set stays inside its stratum's `V_τ`.
    pub fn assemble_subvariety_trop(
        &self,
        sets: BTreeMap<String, Vec<Polyhedron>>,
    ) -> Result<SubvarietyTrop> {
        for (key, pieces) in &sets {
            let s = self.stratum(key)?;
            for p in pieces {
                if !p.is_subset_of_cone(&s.valuation_cone_image)? {
                    return Err(Error::SetEscapesStratum(key.clone()));
                }
            }
        }
        let pieces = sets.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        Ok(SubvarietyTrop { pieces })
    }

    /// For a toric datum whose fan consists of coordinate-orthant faces,
    /// the per-stratum sets of the hypersurface `V(f)`: on the stratum of
    /// `cone(e_i : i ∈ σ)` the tropical complex of `f` restricted to the
    /// orbit where those coordinates vanish.
    pub fn toric_hypersurface_sets(
        &self,
        f: &ValuedPolynomial,
    ) -> Result<BTreeMap<String, Vec<Polyhedron>>> {
        if f.nvars() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: f.nvars(),
            });
        }
        let per_orbit = fundthm::extended_trop_sets(f)?;
        let mut out = BTreeMap::new();
        for s in &self.strata {
            let sigma =
                coordinate_face(&s.face.cone).ok_or_else(|| Error::NotToric(s.key.clone()))?;
            let complex = &per_orbit[&sigma];
            out.insert(s.key.clone(), complex.polyhedra());
        }
        Ok(out)
    }

    /// Glues tropicalizations of the same datum along shared strata.
    pub fn glue(parts: &[ExtendedTrop]) -> Result<ExtendedTrop> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Parse("nothing to glue".into()))?;
        let mut maximal: BTreeMap<String, ColoredCone> = BTreeMap::new();
        let mut strata: BTreeMap<String, Stratum> = BTreeMap::new();
        for t in parts {
            if t.rank != first.rank {
                return Err(Error::RankMismatch(first.rank, t.rank));
            }
            for m in &t.maximal_cones {
                maximal.insert(face_key(m), m.clone());
            }
            for s in &t.strata {
                strata
                    .entry(s.key.clone())
                    .and_modify(|e| e.maximal.extend(s.maximal.iter().cloned()))
                    .or_insert_with(|| s.clone());
            }
        }
        // A cone maximal in one part may be a proper face in another.
        let max_keys: Vec<String> = maximal.keys().cloned().collect();
        for k in max_keys {
            let cone = &maximal[&k].cone;
            if maximal
                .values()
                .any(|o| o.cone.dim() > cone.dim() && o.cone.has_face(cone))
            {
                maximal.remove(&k);
            }
        }
        for s in strata.values_mut() {
            s.maximal.retain(|k| maximal.contains_key(k));
        }
        ExtendedTrop::from_parts(
            first.rank,
            first.valuation_cone.clone(),
            maximal.into_values().collect(),
            strata.into_values().collect(),
        )
    }
}

/// `σ` (0-based) when `c` is spanned by the standard basis vectors `e_i, i ∈ σ`.
fn coordinate_face(c: &Cone) -> Option<Vec<usize>> {
    if !c.lineality().is_empty() {
        return None;
    }
    let m = c.ambient_dim();
    let mut sigma = Vec::new();
    for r in c.rays() {
        let i = (0..m).find(|&i| *r == QVector::unit(m, i))?;
        sigma.push(i);
    }
    sigma.sort_unstable();
    Some(sigma)
}

/// A subset of an extended tropicalization, given stratum by stratum.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubvarietyTrop {
    pub pieces: BTreeMap<String, Vec<Polyhedron>>,
}

impl SubvarietyTrop {
    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains_point(&self, p: &ExtendedPoint) -> Result<bool> {
        match self.pieces.get(&p.stratum) {
            None => Ok(false),
            Some(v) => {
                for poly in v {
                    if poly.contains(&p.value)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }
}

/// One stratum per distinct colored face of the maximal cones of a valid
/// fan, each carrying its projected valuation cone and color labels.
pub fn tropicalize_embedding(datum: &SphericalDatum, fan: &ColoredFan) -> Result<ExtendedTrop> {
    let report = validate_colored_fan(datum, fan, false)?;
    if !report.is_valid() {
        return Err(Error::InvalidFan(report));
    }
    let v = datum.valuation_cone();
    let maximal: Vec<ColoredCone> = fan.maximal_cones().into_iter().cloned().collect();
    let mut strata: BTreeMap<String, Stratum> = BTreeMap::new();
    for sigma in &maximal {
        let sigma_key = face_key(sigma);
        for face in colored_faces(datum, sigma)? {
            let key = face_key(&face);
            if let Some(s) = strata.get_mut(&key) {
                s.maximal.insert(sigma_key.clone());
                continue;
            }
            let stratum = stratum_of(datum, v, face, key)?;
            strata.insert(
                stratum.key.clone(),
                Stratum {
                    maximal: BTreeSet::from([sigma_key.clone()]),
                    ..stratum
                },
            );
        }
    }
    ExtendedTrop::from_parts(
        datum.rank(),
        v.clone(),
        maximal,
        strata.into_values().collect(),
    )
}

fn stratum_of(datum: &SphericalDatum, v: &Cone, face: ColoredCone, key: String) -> Result<Stratum> {
    let chart = QuotientChart::for_cone(&face.cone);
    let valuation_cone_image = chart.project_cone(v)?;
    let faces = colored_faces(datum, &face)?
        .iter()
        .map(face_key)
        .filter(|k| *k != key)
        .collect();
    Ok(Stratum {
        key,
        face,
        chart,
        valuation_cone_image,
        maximal: BTreeSet::new(),
        faces,
    })
}

/// `V_τ`: the image of the valuation cone in `Q^m / span(τ)`.
pub fn stratum_valuation_cone(datum: &SphericalDatum, tau: &Cone) -> Result<Cone> {
    if !tau.relint_meets(datum.valuation_cone())? {
        return Err(Error::NotAColoredFace);
    }
    QuotientChart::for_cone(tau).project_cone(datum.valuation_cone())
}
