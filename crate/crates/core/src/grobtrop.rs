//! The Gröbner-side extended tropicalization.
//!
//! Here a stratum is found from the character side. For a maximal colored
//! cone `(σ, F)`, each face `φ` of `σ∨` names the characters allowed to be
//! finite, and `τ = σ ∩ φ⊥` is the face on which exactly those stay finite.
//! The finite characters of the stratum are the units of the semigroup of
//! characters regular on `X_B(O_τ)`, the dual of `cone(ρ(F') ∪ (τ ∩ V))`,
//! and the stratum's valuation set is `V` restricted to those units. This
//! never uses the colored-face enumeration of [`crate::spherical`] or the
//! projection of [`crate::troposphere`], so agreement between the two is a
//! real check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::polyhedra::linalg::solve_in_span;
use crate::polyhedra::{Cone, QVector, QuotientChart, Rational};
use crate::puiseux::{ExtQ, ResiduePolynomial, ValuedPolynomial};
use crate::spherical::{validate_colored_fan, ColoredCone, ColoredFan, SphericalDatum};
use crate::troposphere::{face_key, ExtendedTrop, Stratum};
use crate::{Error, Result};

/// The class of `f` in its lowest nonzero graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedClass {
    /// Lowest finite grade: the initial form, together with the terms of
    /// infinite grade, which live in the `v = ∞` summand.
    Finite {
        form: ResiduePolynomial,
        infinite_part: ValuedPolynomial,
    },
    /// Every term has infinite grade.
    Infinite(ValuedPolynomial),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedInitialForm {
    pub grade: ExtQ,
    pub representative: GradedClass,
}

/// `in_v(f)` in the associated graded algebra of the monomial valuation
/// `x^u ↦ <v, u>`.
pub fn graded_initial_form(f: &ValuedPolynomial, v: &[ExtQ]) -> Result<GradedInitialForm> {
    let values = f.term_values(v)?;
    let mut infinite_part = ValuedPolynomial::zero(f.nvars(), f.mode());
    let mut finite: Vec<(&Vec<i64>, Rational)> = Vec::new();
    for (u, val) in values {
        match val {
            ExtQ::Infinite => infinite_part.add_term(u.clone(), f.terms()[u].clone())?,
            ExtQ::Finite(q) => finite.push((u, q)),
        }
    }
    let Some(grade) = finite.iter().map(|(_, q)| q.clone()).min() else {
        return Ok(GradedInitialForm {
            grade: ExtQ::Infinite,
            representative: GradedClass::Infinite(infinite_part),
        });
    };
    let form = ResiduePolynomial::from_terms(
        f.nvars(),
        finite
            .into_iter()
            .filter(|(_, q)| *q == grade)
            .map(|(u, _)| {
                let c = f.terms()[u]
                    .leading_coefficient()
                    .cloned()
                    .unwrap_or_else(Rational::zero);
                (u.clone(), c)
            }),
    );
    Ok(GradedInitialForm {
        grade: ExtQ::Finite(grade),
        representative: GradedClass::Finite {
            form,
            infinite_part,
        },
    })
}

/// The valuations on one stratum, before gluing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrobnerStratumSet {
    pub face: ColoredCone,
    /// Basis of the characters that stay finite on the stratum.
    pub units: Vec<QVector>,
    /// The admissible valuation set, in the canonical chart of `span(τ)`.
    pub admissible: Cone,
    pub chart: QuotientChart,
}

/// Stratum sets of one maximal colored cone, one per face of `σ∨` whose
/// dual face meets `V` in its relative interior.
pub fn grobner_stratum_sets(
    datum: &SphericalDatum,
    sigma: &ColoredCone,
) -> Result<Vec<GrobnerStratumSet>> {
    let m = datum.rank();
    let v = datum.valuation_cone();
    let dual = sigma.cone.dual();
    let mut out = Vec::new();
    for phi in dual.faces() {
        let finite_chars = phi.all_generators();
        let mut eqs = sigma.cone.equations().to_vec();
        eqs.extend(finite_chars.iter().cloned());
        let tau = Cone::from_inequalities(m, sigma.cone.facets(), &eqs)?;
        if !tau.relint_meets(v)? {
            continue;
        }
        let mut colors = BTreeSet::new();
        let mut regular_gens = Vec::new();
        for name in &sigma.colors {
            let rho = datum.rho(name)?;
            if finite_chars.iter().all(|g| g.dot(rho).is_zero()) {
                colors.insert(name.clone());
                regular_gens.push(rho.clone());
            }
        }
        regular_gens.extend(tau.intersect(v)?.all_generators());
        let regular = Cone::from_generators(m, regular_gens)?.dual();
        let units = regular.lineality().to_vec();

        let chart = QuotientChart::for_cone(&tau);
        let change: Vec<Vec<Rational>> = chart
            .basis()
            .iter()
            .map(|b| solve_in_span(&units, b).ok_or(Error::NotAColoredFace))
            .collect::<Result<_>>()?;
        let restricted: Vec<QVector> = v
            .all_generators()
            .iter()
            .map(|g| {
                let r: Vec<Rational> = units.iter().map(|e| e.dot(g)).collect();
                QVector::new(
                    change
                        .iter()
                        .map(|c| {
                            c.iter()
                                .zip(&r)
                                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                        })
                        .collect(),
                )
            })
            .collect();
        let admissible = Cone::from_generators(chart.quotient_dim(), restricted)?;
        out.push(GrobnerStratumSet {
            face: ColoredCone { cone: tau, colors },
            units,
            admissible,
            chart,
        });
    }
    Ok(out)
}

/// The Gröbner-side tropicalization `⋃_B V_B(0)`, glued along shared strata.
pub fn grobner_tropicalize_embedding(
    datum: &SphericalDatum,
    fan: &ColoredFan,
) -> Result<ExtendedTrop> {
    let report = validate_colored_fan(datum, fan, false)?;
    if !report.is_valid() {
        return Err(Error::InvalidFan(report));
    }
    let maximal: Vec<ColoredCone> = fan.maximal_cones().into_iter().cloned().collect();
    let mut strata: BTreeMap<String, Stratum> = BTreeMap::new();
    for sigma in &maximal {
        let sigma_key = face_key(sigma);
        for set in grobner_stratum_sets(datum, sigma)? {
            let key = face_key(&set.face);
            strata
                .entry(key.clone())
                .or_insert_with(|| Stratum {
                    key,
                    face: set.face,
                    chart: set.chart,
                    valuation_cone_image: set.admissible,
                    maximal: BTreeSet::new(),
                    faces: BTreeSet::new(),
                })
                .maximal
                .insert(sigma_key.clone());
        }
    }
    let keys: Vec<String> = strata.keys().cloned().collect();
    for a in &keys {
        let mut below = BTreeSet::new();
        for b in &keys {
            if a == b {
                continue;
            }
            let (sa, sb) = (&strata[a], &strata[b]);
            if !sa.face.cone.has_face(&sb.face.cone) {
                continue;
            }
            let mut inherited = BTreeSet::new();
            for name in &sa.face.colors {
                if sb.face.cone.contains(datum.rho(name)?)? {
                    inherited.insert(name.clone());
                }
            }
            if inherited == sb.face.colors {
                below.insert(b.clone());
            }
        }
        strata.get_mut(a).expect("key present").faces = below;
    }
    ExtendedTrop::from_parts(
        datum.rank(),
        datum.valuation_cone().clone(),
        maximal,
        strata.into_values().collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MismatchKind {
    ValuationCone,
    MissingLeft,
    MissingRight,
    QuotientDim,
    Image,
    Labels,
    Adjacency,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub stratum: String,
    pub kind: MismatchKind,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub strata_compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ComparisonReport {
    pub fn equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal() {
            return write!(f, "equal ({} strata)", self.strata_compared);
        }
        for (i, m) in self.mismatches.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{:?} at {}: {}", m.kind, m.stratum, m.detail)?;
        }
        Ok(())
    }
}

/// Stratum-by-stratum comparison. Strata are matched by their underlying
/// cone, so a relabelled color shows up as a label mismatch.
pub fn compare_tropicalizations(a: &ExtendedTrop, b: &ExtendedTrop) -> Result<ComparisonReport> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    let mut report = ComparisonReport::default();
    let mut push = |stratum: &str, kind, detail: String| {
        report.mismatches.push(Mismatch {
            stratum: stratum.to_string(),
            kind,
            detail,
        });
    };
    if a.valuation_cone() != b.valuation_cone() {
        push(
            "",
            MismatchKind::ValuationCone,
            format!("{} vs {}", a.valuation_cone(), b.valuation_cone()),
        );
    }
    let by_cone = |t: &ExtendedTrop| -> BTreeMap<String, Stratum> {
        t.strata()
            .iter()
            .map(|s| (s.face.cone.to_string(), s.clone()))
            .collect()
    };
    let (left, right) = (by_cone(a), by_cone(b));
    let plain_keys = |t: &ExtendedTrop, keys: &BTreeSet<String>| -> BTreeSet<String> {
        keys.iter()
            .filter_map(|k| t.stratum(k).ok())
            .map(|s| s.face.cone.to_string())
            .collect()
    };
    let mut compared = 0;
    for (k, sa) in &left {
        let Some(sb) = right.get(k) else {
            push(
                k,
                MismatchKind::MissingRight,
                format!("{} only on the left", sa.key),
            );
            continue;
        };
        compared += 1;
        if sa.quotient_dim() != sb.quotient_dim() {
            push(
                k,
                MismatchKind::QuotientDim,
                format!("{} vs {}", sa.quotient_dim(), sb.quotient_dim()),
            );
        }
        if sa.valuation_cone_image != sb.valuation_cone_image {
            push(
                k,
                MismatchKind::Image,
                format!("{} vs {}", sa.valuation_cone_image, sb.valuation_cone_image),
            );
        }
        if sa.labels() != sb.labels() {
            push(
                k,
                MismatchKind::Labels,
                format!("{:?} vs {:?}", sa.labels(), sb.labels()),
            );
        }
        let (fa, fb) = (plain_keys(a, &sa.faces), plain_keys(b, &sb.faces));
        if fa != fb {
            push(k, MismatchKind::Adjacency, format!("{fa:?} vs {fb:?}"));
        }
    }
    for (k, sb) in &right {
        if !left.contains_key(k) {
            push(
                k,
                MismatchKind::MissingLeft,
                format!("{} only on the right", sb.key),
            );
        }
    }
    report.strata_compared = compared;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::puiseux::parse_polynomial;
    use crate::troposphere::tropicalize_embedding;

    #[test]
    fn graded_forms() {
        let f = builtin::e3_polynomial();
        let g = graded_initial_form(&f, &[ExtQ::int(-2), ExtQ::int(0)]).unwrap();
        assert_eq!(g.grade, ExtQ::int(-4));
        match &g.representative {
            GradedClass::Finite {
                form,
                infinite_part,
            } => {
                assert_eq!(form.to_string(), "-6*x1^2 + 4*x1*x2");
                assert!(infinite_part.is_zero());
            }
            other => panic!("{other:?}"),
        }

        let h = parse_polynomial("x1 + x2").unwrap();
        let g = graded_initial_form(&h, &[ExtQ::Infinite, ExtQ::int(0)]).unwrap();
        assert_eq!(g.grade, ExtQ::int(0));
        match &g.representative {
            GradedClass::Finite {
                form,
                infinite_part,
            } => {
                assert_eq!(form.to_string(), "x2");
                assert_eq!(infinite_part.to_string(), "x1");
            }
            other => panic!("{other:?}"),
        }

        let p = parse_polynomial("x1*x2").unwrap();
        let g = graded_initial_form(&p, &[ExtQ::Infinite, ExtQ::int(0)]).unwrap();
        assert_eq!(g.grade, ExtQ::Infinite);
        assert_eq!(g.representative, GradedClass::Infinite(p));
    }

    #[test]
    fn corpus_routes_agree() {
        for e in builtin::corpus() {
            let a = tropicalize_embedding(&e.datum, &e.fan).unwrap();
            let b = grobner_tropicalize_embedding(&e.datum, &e.fan).unwrap();
            let r = compare_tropicalizations(&a, &b).unwrap();
            assert!(r.equal(), "{}: {r}", e.name);
            assert_eq!(a, b, "{}", e.name);
        }
    }

    #[test]
    fn negative_controls() {
        let e = builtin::table1()
            .into_iter()
            .find(|e| e.name == "P2")
            .unwrap();
        let a = tropicalize_embedding(&e.datum, &e.fan).unwrap();

        let mut strata = a.strata().to_vec();
        let dropped = strata.pop().unwrap().key;
        for s in &mut strata {
            s.faces.remove(&dropped);
        }
        let fewer = ExtendedTrop::from_parts(
            a.rank(),
            a.valuation_cone().clone(),
            a.maximal_cones().to_vec(),
            strata,
        )
        .unwrap();
        let r = compare_tropicalizations(&a, &fewer).unwrap();
        assert!(r
            .mismatches
            .iter()
            .any(|m| m.kind == MismatchKind::MissingRight));

        let mut strata = a.strata().to_vec();
        for s in &mut strata {
            if s.face.colors.remove(builtin::A2_COLOR) {
                s.face.colors.insert("E".into());
            }
        }
        let relabeled = ExtendedTrop::from_parts(a.rank(), a.valuation_cone().clone(), vec![], {
            for s in &mut strata {
                s.maximal.clear();
            }
            strata
        })
        .unwrap();
        let r = compare_tropicalizations(&a, &relabeled).unwrap();
        assert!(r.mismatches.iter().any(|m| m.kind == MismatchKind::Labels));

        let flag = builtin::flag();
        let f = tropicalize_embedding(&flag.datum, &flag.fan).unwrap();
        assert!(matches!(
            compare_tropicalizations(&a, &f),
            Err(Error::RankMismatch(1, 0))
        ));
    }
}
