//! JSON formats for data, fans, polynomials, tropicalizations and reports.
//!
//! Rationals are written as strings `"p/q"` (or `"p"`); integers are
//! accepted on input as well.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::builtin::ExpectedStratum;
use crate::fundthm::{EquivalenceReport, TropicalComplex};
use crate::grobtrop::GrobnerStratumSet;
use crate::polyhedra::{
    format_rational, parse_rational, Cone, Polyhedron, QVector, QuotientChart, Rational,
};
use crate::puiseux::{Mode, PuiseuxScalar, ValuedPolynomial};
use crate::spherical::{Color, ColoredCone, ColoredFan, SphericalDatum};
use crate::troposphere::{ExtendedTrop, Stratum};
use crate::{Error, Result};

/// A rational in its JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(Q(Rational::from_integer(n.into()))),
            Repr::Text(s) => parse_rational(&s).map(Q).map_err(D::Error::custom),
        }
    }
}

type VecJson = Vec<Q>;

fn vec_json(v: &QVector) -> VecJson {
    v.iter().cloned().map(Q).collect()
}

fn vec_from(v: &[Q]) -> QVector {
    QVector::new(v.iter().map(|q| q.0.clone()).collect())
}

fn vecs_from(v: &[VecJson], dim: usize) -> Result<Vec<QVector>> {
    v.iter()
        .map(|x| {
            let q = vec_from(x);
            q.check_dim(dim)?;
            Ok(q)
        })
        .collect()
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ConeInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<VecJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<Vec<VecJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equations: Option<Vec<VecJson>>,
}

impl ConeInput {
    fn into_cone(self, dim: usize) -> Result<Cone> {
        match (self.generators, self.inequalities) {
            (Some(g), None) if self.equations.is_none() => {
                Cone::from_generators(dim, vecs_from(&g, dim)?)
            }
            (None, ineqs) => Cone::from_inequalities(
                dim,
                &vecs_from(&ineqs.unwrap_or_default(), dim)?,
                &vecs_from(&self.equations.unwrap_or_default(), dim)?,
            ),
            _ => Err(Error::Parse(
                "a cone takes either `generators` or `inequalities`/`equations`".into(),
            )),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColorJson {
    name: String,
    rho: VecJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumJson {
    rank: usize,
    valuation_cone: ConeInput,
    #[serde(default)]
    palette: Vec<ColorJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoredConeJson {
    generators: Vec<VecJson>,
    #[serde(default)]
    colors: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FanJson {
    cones: Vec<ColoredConeJson>,
}

/// Canonical description of a cone: rays, lineality basis and the
/// inequalities/equations cutting it out.
#[derive(Serialize, Deserialize)]
struct ConeOut {
    rays: Vec<VecJson>,
    lineality: Vec<VecJson>,
    inequalities: Vec<VecJson>,
    equations: Vec<VecJson>,
}

fn cone_out(c: &Cone) -> ConeOut {
    ConeOut {
        rays: c.rays().iter().map(vec_json).collect(),
        lineality: c.lineality().iter().map(vec_json).collect(),
        inequalities: c.facets().iter().map(vec_json).collect(),
        equations: c.equations().iter().map(vec_json).collect(),
    }
}

fn cone_in(c: &ConeOut, dim: usize) -> Result<Cone> {
    let mut gens = vecs_from(&c.rays, dim)?;
    for l in vecs_from(&c.lineality, dim)? {
        gens.push(-&l);
        gens.push(l);
    }
    Cone::from_generators(dim, gens)
}

fn colored_cone_json(cc: &ColoredCone) -> ColoredConeJson {
    ColoredConeJson {
        generators: cc.cone.all_generators().iter().map(vec_json).collect(),
        colors: cc.colors.iter().cloned().collect(),
    }
}

fn colored_cone_in(c: ColoredConeJson, dim: usize) -> Result<ColoredCone> {
    Ok(ColoredCone::new(
        Cone::from_generators(dim, vecs_from(&c.generators, dim)?)?,
        c.colors,
    ))
}

pub fn datum_from_json(text: &str) -> Result<SphericalDatum> {
    let d: DatumJson = serde_json::from_str(text)?;
    let v = d.valuation_cone.into_cone(d.rank)?;
    let palette = d
        .palette
        .into_iter()
        .map(|c| Color {
            name: c.name,
            rho: vec_from(&c.rho),
        })
        .collect();
    SphericalDatum::new(d.rank, v, palette)
}

pub fn datum_to_json(d: &SphericalDatum) -> Value {
    let j = DatumJson {
        rank: d.rank(),
        valuation_cone: ConeInput {
            generators: Some(
                d.valuation_cone()
                    .all_generators()
                    .iter()
                    .map(vec_json)
                    .collect(),
            ),
            ..ConeInput::default()
        },
        palette: d
            .palette()
            .iter()
            .map(|c| ColorJson {
                name: c.name.clone(),
                rho: vec_json(&c.rho),
            })
            .collect(),
    };
    serde_json::to_value(j).expect("serializable")
}

/// Parses a fan whose cones live in `Q^rank`.
pub fn fan_from_json(text: &str, rank: usize) -> Result<ColoredFan> {
    let f: FanJson = serde_json::from_str(text)?;
    Ok(ColoredFan::new(
        f.cones
            .into_iter()
            .map(|c| colored_cone_in(c, rank))
            .collect::<Result<_>>()?,
    ))
}

pub fn fan_to_json(f: &ColoredFan) -> Value {
    let j = FanJson {
        cones: f.cones.iter().map(colored_cone_json).collect(),
    };
    serde_json::to_value(j).expect("serializable")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exponent: Vec<i64>,
    /// `[exponent of t, coefficient]` pairs.
    coefficient: Vec<(Q, Q)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    nvars: usize,
    mode: String,
    terms: Vec<TermJson>,
}

pub fn scalar_to_json(s: &PuiseuxScalar) -> Value {
    json!(s
        .terms()
        .iter()
        .map(|(e, c)| (Q(e.clone()), Q(c.clone())))
        .collect::<Vec<_>>())
}

pub fn poly_to_json(f: &ValuedPolynomial) -> Value {
    let j = PolyJson {
        nvars: f.nvars(),
        mode: match f.mode() {
            Mode::Laurent => "laurent".into(),
            Mode::Ordinary => "ordinary".into(),
        },
        terms: f
            .terms()
            .iter()
            .map(|(u, a)| TermJson {
                exponent: u.clone(),
                coefficient: a
                    .terms()
                    .iter()
                    .map(|(e, c)| (Q(e.clone()), Q(c.clone())))
                    .collect(),
            })
            .collect(),
    };
    let mut v = serde_json::to_value(j).expect("serializable");
    v["text"] = json!(f.to_string());
    v
}

pub fn poly_from_json(text: &str) -> Result<ValuedPolynomial> {
    let mut v: Value = serde_json::from_str(text)?;
    if let Some(obj) = v.as_object_mut() {
        obj.remove("text");
    }
    let j: PolyJson = serde_json::from_value(v)?;
    let mode = match j.mode.as_str() {
        "laurent" => Mode::Laurent,
        "ordinary" => Mode::Ordinary,
        other => return Err(Error::Parse(format!("unknown mode `{other}`"))),
    };
    ValuedPolynomial::from_terms(
        j.nvars,
        mode,
        j.terms.into_iter().map(|t| {
            let s = PuiseuxScalar::from_terms(t.coefficient.into_iter().map(|(e, c)| (e.0, c.0)));
            (t.exponent, s)
        }),
    )
}

#[derive(Serialize, Deserialize)]
struct StratumJson {
    key: String,
    face: ConeOut,
    colors: Vec<String>,
    dim: usize,
    quotient_dim: usize,
    shape: String,
    chart: Vec<VecJson>,
    valuation_cone_image: ConeOut,
    maximal: Vec<String>,
    faces: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TropJson {
    rank: usize,
    valuation_cone: ConeOut,
    maximal_cones: Vec<ColoredConeJson>,
    strata: Vec<StratumJson>,
}

pub fn trop_to_json(t: &ExtendedTrop) -> Value {
    let j = TropJson {
        rank: t.rank(),
        valuation_cone: cone_out(t.valuation_cone()),
        maximal_cones: t.maximal_cones().iter().map(colored_cone_json).collect(),
        strata: t
            .strata()
            .iter()
            .map(|s| StratumJson {
                key: s.key.clone(),
                face: cone_out(&s.face.cone),
                colors: s.face.colors.iter().cloned().collect(),
                dim: s.face_dim(),
                quotient_dim: s.quotient_dim(),
                shape: s.shape().to_string(),
                chart: s.chart.basis().iter().map(vec_json).collect(),
                valuation_cone_image: cone_out(&s.valuation_cone_image),
                maximal: s.maximal.iter().cloned().collect(),
                faces: s.faces.iter().cloned().collect(),
            })
            .collect(),
    };
    serde_json::to_value(j).expect("serializable")
}

/// Reads a tropicalization written by [`trop_to_json`]. Charts are
/// recomputed from the faces and must match the stored bases.
pub fn trop_from_json(text: &str) -> Result<ExtendedTrop> {
    let j: TropJson = serde_json::from_str(text)?;
    let m = j.rank;
    let maximal = j
        .maximal_cones
        .into_iter()
        .map(|c| colored_cone_in(c, m))
        .collect::<Result<Vec<_>>>()?;
    let strata = j
        .strata
        .into_iter()
        .map(|s| {
            let face = ColoredCone::new(cone_in(&s.face, m)?, s.colors);
            let chart = QuotientChart::for_cone(&face.cone);
            if chart.basis() != vecs_from(&s.chart, m)?.as_slice() {
                return Err(Error::Parse(format!(
                    "chart of `{}` is not canonical",
                    s.key
                )));
            }
            let image = cone_in(&s.valuation_cone_image, chart.quotient_dim())?;
            Ok(Stratum {
                key: s.key,
                face,
                chart,
                valuation_cone_image: image,
                maximal: s.maximal.into_iter().collect::<BTreeSet<_>>(),
                faces: s.faces.into_iter().collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ExtendedTrop::from_parts(m, cone_in(&j.valuation_cone, m)?, maximal, strata)
}

fn affine_rows(rows: &[(QVector, Rational)]) -> Value {
    json!(rows
        .iter()
        .map(|(a, b)| json!({"normal": vec_json(a), "rhs": Q(b.clone())}))
        .collect::<Vec<_>>())
}

pub fn polyhedron_to_json(p: &Polyhedron) -> Value {
    let g = p.generators();
    json!({
        "vertices": g.vertices.iter().map(vec_json).collect::<Vec<_>>(),
        "rays": g.rays.iter().map(vec_json).collect::<Vec<_>>(),
        "lineality": g.lineality.iter().map(vec_json).collect::<Vec<_>>(),
        "inequalities": affine_rows(p.inequalities()),
        "equations": affine_rows(p.equations()),
    })
}

pub fn complex_to_json(c: &TropicalComplex) -> Value {
    json!({
        "ambient_dim": c.ambient_dim,
        "cells": c.cells.iter().map(|cell| {
            let mut v = polyhedron_to_json(&cell.polyhedron);
            v["pair"] = json!(cell.pair);
            v
        }).collect::<Vec<_>>(),
    })
}

pub fn equivalence_to_json(r: &EquivalenceReport) -> Value {
    json!({
        "consistent": r.consistent(),
        "samples": r.samples.iter().map(|s| json!({
            "weight": s.weight.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "set1": s.set1,
            "set2": s.set2,
        })).collect::<Vec<_>>(),
        "witnesses": r.witnesses.iter().map(|w| json!({
            "point": w.point.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "residual": w.residual.to_string(),
            "valuations": w.valuations.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "in_set1": w.in_set1,
        })).collect::<Vec<_>>(),
    })
}

/// Sets per stratum key, as produced for subvarieties.
pub fn strata_sets_to_json(sets: &BTreeMap<String, Vec<Polyhedron>>) -> Value {
    json!(sets
        .iter()
        .map(|(k, v)| (
            k.clone(),
            v.iter().map(polyhedron_to_json).collect::<Vec<_>>()
        ))
        .collect::<BTreeMap<_, _>>())
}

pub fn cone_to_json(c: &Cone) -> Value {
    serde_json::to_value(cone_out(c)).expect("serializable")
}

pub fn vector_to_json(v: &QVector) -> Value {
    json!(vec_json(v))
}

/// Per-maximal-cone stratum sets of the graded route.
pub fn grobner_sets_to_json(sets: &[(String, Vec<GrobnerStratumSet>)]) -> Value {
    json!(sets
        .iter()
        .map(|(sigma, list)| json!({
            "maximal": sigma,
            "strata": list.iter().map(|s| json!({
                "key": s.face.to_string(),
                "colors": s.face.colors,
                "units": s.units.iter().map(vec_json).collect::<Vec<_>>(),
                "admissible": cone_to_json(&s.admissible),
                "chart": s.chart.basis().iter().map(vec_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }))
        .collect::<Vec<_>>())
}

/// Expected strata of a built-in embedding.
pub fn expected_to_json(expected: &[ExpectedStratum]) -> Value {
    json!(expected
        .iter()
        .map(|e| json!({"dim": e.dim, "shape": e.shape, "colors": e.colors}))
        .collect::<Vec<_>>())
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::troposphere::tropicalize_embedding;

    #[test]
    fn datum_and_fan_round_trip() {
        for e in builtin::corpus() {
            let d = datum_from_json(&datum_to_json(&e.datum).to_string()).unwrap();
            assert_eq!(d.rank(), e.datum.rank());
            assert_eq!(d.valuation_cone(), e.datum.valuation_cone());
            assert_eq!(d.palette(), e.datum.palette());
            let f = fan_from_json(&fan_to_json(&e.fan).to_string(), d.rank()).unwrap();
            assert_eq!(f, e.fan);
        }
    }

    #[test]
    fn handwritten_datum() {
        let d = datum_from_json(
            r#"{"rank": 2, "valuation_cone": {"inequalities": [[1, -1]]},
                "palette": [{"name": "D", "rho": ["-1", "1"]}]}"#,
        )
        .unwrap();
        assert_eq!(d.valuation_cone(), builtin::gl2_datum().valuation_cone());
        assert!(
            datum_from_json(r#"{"rank": 1, "valuation_cone": {"generators": [["1/0"]]}}"#).is_err()
        );
        assert!(
            datum_from_json(r#"{"rank": 2, "valuation_cone": {"generators": [[1]]}}"#).is_err()
        );
        assert!(datum_from_json("{").is_err());
    }

    #[test]
    fn trop_round_trip() {
        for e in builtin::corpus() {
            let t = tropicalize_embedding(&e.datum, &e.fan).unwrap();
            let text = to_pretty(&trop_to_json(&t));
            assert_eq!(trop_from_json(&text).unwrap(), t, "{}", e.name);
        }
    }

    #[test]
    fn poly_round_trip() {
        let f = builtin::e3_polynomial();
        let back = poly_from_json(&poly_to_json(&f).to_string()).unwrap();
        assert_eq!(back, f);
        assert!(poly_from_json(r#"{"nvars":1,"mode":"odd","terms":[]}"#).is_err());
        assert!(poly_from_json(
            r#"{"nvars":1,"mode":"ordinary","terms":[{"exponent":[-1],"coefficient":[["0","1"]]}]}"#
        )
        .is_err());
    }
}
