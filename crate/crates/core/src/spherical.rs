//! Spherical data and the colored cone / colored fan axioms.
//!
//! A [`SphericalDatum`] is the combinatorial shadow of a spherical
//! homogeneous space: the rank `m`, the valuation cone `V ⊆ Q^m`, and the
//! palette of colors with their images `ρ(D) ∈ Q^m`. Colors are identified by
//! name, so several colors may share a `ρ` vector.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyhedra::{Cone, QVector};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Color {
    pub name: String,
    pub rho: QVector,
}

#[derive(Clone, Debug)]
pub struct SphericalDatum {
    rank: usize,
    valuation_cone: Cone,
    palette: Vec<Color>,
    index: BTreeMap<String, usize>,
}

impl SphericalDatum {
    pub fn new(rank: usize, valuation_cone: Cone, palette: Vec<Color>) -> Result<SphericalDatum> {
        if valuation_cone.ambient_dim() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: valuation_cone.ambient_dim(),
            });
        }
        let mut index = BTreeMap::new();
        for (i, c) in palette.iter().enumerate() {
            c.rho.check_dim(rank)?;
            if index.insert(c.name.clone(), i).is_some() {
                return Err(Error::DuplicateColor(c.name.clone()));
            }
        }
        Ok(SphericalDatum {
            rank,
            valuation_cone,
            palette,
            index,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn valuation_cone(&self) -> &Cone {
        &self.valuation_cone
    }

    pub fn palette(&self) -> &[Color] {
        &self.palette
    }

    pub fn color(&self, name: &str) -> Result<&Color> {
        self.index
            .get(name)
            .map(|&i| &self.palette[i])
            .ok_or_else(|| Error::UnknownColor(name.to_string()))
    }

    pub fn rho(&self, name: &str) -> Result<&QVector> {
        Ok(&self.color(name)?.rho)
    }
}

/// A cone together with a set of color names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredCone {
    pub cone: Cone,
    pub colors: BTreeSet<String>,
}

impl ColoredCone {
    pub fn new<I, S>(cone: Cone, colors: I) -> ColoredCone
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ColoredCone {
            cone,
            colors: colors.into_iter().map(Into::into).collect(),
        }
    }

    pub fn uncolored(cone: Cone) -> ColoredCone {
        ColoredCone {
            cone,
            colors: BTreeSet::new(),
        }
    }
}

impl fmt::Display for ColoredCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.cone)?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColoredFan {
    pub cones: Vec<ColoredCone>,
}

impl ColoredFan {
    pub fn new(cones: Vec<ColoredCone>) -> ColoredFan {
        ColoredFan { cones }
    }

    /// Members that are not a proper face of another member.
    pub fn maximal_cones(&self) -> Vec<&ColoredCone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|d| d.cone.dim() > c.cone.dim() && d.cone.has_face(&c.cone))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// Every named color maps into the cone.
    RhoContainment,
    /// The cone is generated by `ρ(F)` and elements of the valuation cone.
    Generation,
    /// The relative interior meets the valuation cone.
    InteriorMeetsV,
    /// Strictly convex cone and `0 ∉ ρ(F)`.
    StrictConvexity,
    /// Colored faces of members are members.
    FaceClosure,
    /// Two members share a relative-interior point of the valuation cone.
    InteriorOverlap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, axiom: Axiom, detail: impl Into<String>) {
        self.violations.push(Violation {
            axiom,
            detail: detail.into(),
        });
    }

    /// No violations apart from strict convexity.
    pub fn is_valid(&self) -> bool {
        self.violations
            .iter()
            .all(|v| v.axiom == Axiom::StrictConvexity)
    }

    /// No violations at all.
    pub fn is_strictly_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}: {}", v.axiom, v.detail)?;
        }
        Ok(())
    }
}

fn check_cone_dim(datum: &SphericalDatum, cone: &Cone) -> Result<()> {
    if cone.ambient_dim() != datum.rank() {
        return Err(Error::DimensionMismatch {
            expected: datum.rank(),
            found: cone.ambient_dim(),
        });
    }
    Ok(())
}

/// Checks the colored cone axioms. Strict convexity is reported as its own
/// violation kind and does not affect [`ValidationReport::is_valid`].
pub fn validate_colored_cone(datum: &SphericalDatum, cc: &ColoredCone) -> Result<ValidationReport> {
    check_cone_dim(datum, &cc.cone)?;
    let v = datum.valuation_cone();
    let mut report = ValidationReport::default();

    let mut rhos = Vec::with_capacity(cc.colors.len());
    for name in &cc.colors {
        let rho = datum.rho(name)?;
        if !cc.cone.contains(rho)? {
            report.push(
                Axiom::RhoContainment,
                format!("ρ({name}) = {rho} not in {}", cc.cone),
            );
        }
        rhos.push(rho.clone());
    }

    // Any witness set S ⊆ V lies in σ ∩ V, so σ ∩ V is the largest candidate.
    let in_v = cc.cone.intersect(v)?;
    let mut gens = rhos.clone();
    gens.extend(in_v.all_generators());
    let generated = Cone::from_generators(datum.rank(), gens)?;
    if !generated.same_set(&cc.cone) {
        report.push(
            Axiom::Generation,
            format!("ρ(F) and σ∩V generate {generated}, not {}", cc.cone),
        );
    }

    if !cc.cone.relint_meets(v)? {
        report.push(
            Axiom::InteriorMeetsV,
            format!("relint {} misses V", cc.cone),
        );
    }

    if !cc.cone.is_strictly_convex() {
        report.push(
            Axiom::StrictConvexity,
            format!("{} contains a line", cc.cone),
        );
    }
    for (name, rho) in cc.colors.iter().zip(&rhos) {
        if rho.is_zero() {
            report.push(Axiom::StrictConvexity, format!("ρ({name}) = 0"));
        }
    }
    Ok(report)
}

/// Colored faces `(τ, F ∩ ρ⁻¹(τ))` of a valid colored cone: the faces of `σ`
/// whose relative interior meets `V`, the cone itself included.
pub fn colored_faces(datum: &SphericalDatum, cc: &ColoredCone) -> Result<Vec<ColoredCone>> {
    let report = validate_colored_cone(datum, cc)?;
    if !report.is_valid() {
        return Err(Error::InvalidColoredCone(report));
    }
    let v = datum.valuation_cone();
    let mut out = Vec::new();
    for tau in cc.cone.faces() {
        if !tau.relint_meets(v)? {
            continue;
        }
        let mut colors = BTreeSet::new();
        for name in &cc.colors {
            if tau.contains(datum.rho(name)?)? {
                colors.insert(name.clone());
            }
        }
        out.push(ColoredCone { cone: tau, colors });
    }
    Ok(out)
}

/// Checks face closure and that no point of `V` lies in the relative
/// interior of two distinct members. Strict convexity of every member is
/// checked only when `require_strict` is set.
pub fn validate_colored_fan(
    datum: &SphericalDatum,
    fan: &ColoredFan,
    require_strict: bool,
) -> Result<ValidationReport> {
    let mut report = ValidationReport::default();
    let v = datum.valuation_cone();

    for cc in &fan.cones {
        let member = validate_colored_cone(datum, cc)?;
        if !member.is_valid() {
            return Err(Error::InvalidColoredCone(member));
        }
        if require_strict && !member.is_strictly_valid() {
            report.violations.extend(member.violations);
        }
    }

    for cc in &fan.cones {
        for face in colored_faces(datum, cc)? {
            if !fan.cones.contains(&face) {
                report.push(
                    Axiom::FaceClosure,
                    format!("colored face {face} of {cc} missing"),
                );
            }
        }
    }

    for (i, a) in fan.cones.iter().enumerate() {
        for b in &fan.cones[i + 1..] {
            if a == b {
                continue;
            }
            // A point of relint(a) ∩ relint(b) ∩ V exists iff the interior
            // point of a ∩ b ∩ V lies in both relative interiors.
            let k = a.cone.intersect(&b.cone)?.intersect(v)?;
            let p = k.relint_point();
            if a.cone.relint_contains(&p)? && b.cone.relint_contains(&p)? {
                report.push(
                    Axiom::InteriorOverlap,
                    format!("{a} and {b} share the interior point {p} of V"),
                );
            }
        }
    }
    Ok(report)
}
