//! Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on
//! any failure. Each criterion also has a wall-clock budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use sphertrop::builtin::{self, Embedding};
use sphertrop::fundthm::{
    cell_samples, check_equivalence, finite_weight, membership_set1, membership_set2, sample_grid,
    trop_hypersurface,
};
use sphertrop::grobtrop::{compare_tropicalizations, grobner_tropicalize_embedding};
use sphertrop::polyhedra::{QVector, Rational};
use sphertrop::puiseux::{
    parse_polynomial, parse_scalar, parse_weight, ExtQ, PuiseuxScalar, ValuedPolynomial,
};
use sphertrop::spherical::colored_faces;
use sphertrop::troposphere::{face_key, tropicalize_embedding, ExtendedTrop};

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn check_tables(embeddings: Vec<Embedding>) -> Outcome {
    let n = embeddings.len();
    for e in embeddings {
        let trop =
            tropicalize_embedding(&e.datum, &e.fan).map_err(|err| format!("{}: {err}", e.name))?;
        let mut expected: Vec<(usize, &str, Vec<String>)> = e
            .expected
            .iter()
            .map(|s| {
                (
                    s.dim,
                    s.shape,
                    s.colors.iter().map(|c| c.to_string()).collect(),
                )
            })
            .collect();
        expected.sort();
        let got = trop.summary();
        if got != expected {
            return Err(format!("{}: got {got:?}, expected {expected:?}", e.name));
        }
    }
    Ok(format!("{n} embeddings"))
}

fn ac1() -> Outcome {
    check_tables(builtin::table1())
}

fn ac2() -> Outcome {
    check_tables(builtin::table2())
}

fn ac3() -> Outcome {
    let f = builtin::e3_polynomial();
    let cases = [
        ("(-2, 0)", -4, "-6*x1^2 + 4*x1*x2", true),
        ("(0, 2)", -1, "x1", false),
    ];
    for (w, value, form, member) in cases {
        let w = parse_weight(w).map_err(|e| e.to_string())?;
        let got = f.trop_eval(&w).map_err(|e| e.to_string())?;
        let init = f.initial_form(&w).map_err(|e| e.to_string())?.to_string();
        let s1 = membership_set1(&f, &w).map_err(|e| e.to_string())?;
        let s2 = membership_set2(&f, &w).map_err(|e| e.to_string())?;
        if got != ExtQ::int(value) || init != form || s1 != member || s2 != member {
            return Err(format!(
                "at {w:?}: value {got}, form {init}, sets ({s1},{s2})"
            ));
        }
    }
    Ok("both weights".into())
}

const CORPUS_SEED: u64 = 20_240_501;
const CORPUS_SIZE: usize = 500;

/// The random Laurent corpus shared by the two polynomial criteria.
fn laurent_corpus() -> Vec<ValuedPolynomial> {
    let mut rng = common::rng(CORPUS_SEED);
    (0..CORPUS_SIZE)
        .map(|_| {
            let m = rng.gen_range(1..=3);
            common::laurent(&mut rng, m, 6, 3, 2)
        })
        .collect()
}

fn finite_samples(f: &ValuedPolynomial) -> Result<Vec<QVector>, String> {
    let m = f.nvars();
    let mut points = sample_grid(m, 2, if m == 3 { 1 } else { 2 });
    points.extend(cell_samples(
        &trop_hypersurface(f).map_err(|e| e.to_string())?,
    ));
    Ok(points)
}

fn ac4() -> Outcome {
    let mut checked = 0;
    for (i, f) in laurent_corpus().iter().enumerate() {
        let samples: Vec<Vec<ExtQ>> = finite_samples(f)?.iter().map(finite_weight).collect();
        let report = check_equivalence(f, &samples, &[]).map_err(|e| e.to_string())?;
        if let Some(bad) = report.samples.iter().find(|s| s.set1 != s.set2) {
            return Err(format!("polynomial {i} ({f}) at {:?}", bad.weight));
        }
        checked += samples.len();
    }
    Ok(format!("{CORPUS_SIZE} polynomials, {checked} samples"))
}

fn ac5() -> Outcome {
    let mut checked = 0;
    for (i, f) in laurent_corpus().iter().enumerate() {
        for p in finite_samples(f)? {
            let w = finite_weight(&p);
            let a = f.initial_form(&w).map_err(|e| e.to_string())?;
            let b = f.initial_form_substitution(&w).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("polynomial {i} ({f}) at {p}: {a} vs {b}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{CORPUS_SIZE} polynomials, {checked} weights"))
}

fn routes_agree(
    label: &str,
    d: &sphertrop::spherical::SphericalDatum,
    fan: &sphertrop::spherical::ColoredFan,
) -> Result<(), String> {
    let a = tropicalize_embedding(d, fan).map_err(|e| format!("{label}: {e}"))?;
    let b = grobner_tropicalize_embedding(d, fan).map_err(|e| format!("{label}: {e}"))?;
    let report = compare_tropicalizations(&a, &b).map_err(|e| format!("{label}: {e}"))?;
    if report.equal() && a == b {
        Ok(())
    } else {
        Err(format!("{label}: {report}"))
    }
}

fn ac6() -> Outcome {
    let corpus = builtin::corpus();
    for e in &corpus {
        routes_agree(e.name, &e.datum, &e.fan)?;
    }
    let random = 120;
    for seed in 0..random {
        let (d, fan) = common::colored_fan(&mut common::rng(seed));
        routes_agree(&format!("random fan {seed}"), &d, &fan)?;
    }
    Ok(format!("{} builtin and {random} random fans", corpus.len()))
}

/// Extremal generators of `σ∨`: its rays and both signs of its lineality.
fn dual_generators(sigma: &sphertrop::Cone) -> Vec<QVector> {
    let dual = sigma.dual();
    let mut out = dual.rays().to_vec();
    for l in dual.lineality() {
        out.push(l.clone());
        out.push(-l);
    }
    out
}

fn ac7() -> Outcome {
    let mut sequences = 0;
    for e in builtin::corpus() {
        let trop: ExtendedTrop =
            tropicalize_embedding(&e.datum, &e.fan).map_err(|err| err.to_string())?;
        let v = e.datum.valuation_cone();
        let grid: Vec<QVector> = sample_grid(e.datum.rank(), 2, 1)
            .into_iter()
            .filter(|w| v.contains(w).unwrap())
            .collect();
        for sigma in e.fan.maximal_cones() {
            for tau in colored_faces(&e.datum, sigma).map_err(|err| err.to_string())? {
                let key = face_key(&tau);
                let r = tau
                    .cone
                    .intersect(v)
                    .map_err(|err| err.to_string())?
                    .relint_point();
                if !tau.cone.relint_contains(&r).unwrap() {
                    return Err(format!("{}: no direction in relint({key}) ∩ V", e.name));
                }
                for w in &grid {
                    let limit = trop.limit_point(w, &key).map_err(|err| err.to_string())?;
                    for u in dual_generators(&sigma.cone) {
                        let at_limit = trop
                            .evaluate_point(&limit, &u)
                            .map_err(|err| err.to_string())?;
                        let values: Vec<Rational> = (1..=50)
                            .map(|n| w.add_scaled(&Rational::from_integer(n.into()), &r).dot(&u))
                            .collect();
                        let ok = match &at_limit {
                            ExtQ::Finite(x) => values.iter().all(|y| y == x),
                            ExtQ::Infinite => values.windows(2).all(|p| p[0] < p[1]),
                        };
                        if !ok {
                            return Err(format!("{}: stratum {key}, w = {w}, u = {u}", e.name));
                        }
                        sequences += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{sequences} sequences"))
}

fn ac8() -> Outcome {
    for seed in 0..20 {
        let sf = common::simplicial_fan(&mut common::rng(900 + seed));
        let d = builtin::toric_datum(sf.m);
        let trop = tropicalize_embedding(&d, &sf.colored_fan()).map_err(|e| e.to_string())?;
        common::check_against_oracle(&sf, &trop).map_err(|e| format!("fan {seed}: {e}"))?;
    }
    Ok("20 fans".into())
}

fn scalars(src: &[&str]) -> Result<Vec<PuiseuxScalar>, String> {
    src.iter()
        .map(|s| parse_scalar(s).map_err(|e| e.to_string()))
        .collect()
}

/// A zero of the running example: `x1` is chosen so that the coefficient
/// of `x2` is the monomial `t`, which makes solving for `x2` exact.
fn running_example_witness() -> Result<(ValuedPolynomial, Vec<PuiseuxScalar>), String> {
    let f = builtin::e3_polynomial();
    let x1 = parse_scalar("1/4*t^1002 - 7/4*t^2 + 1/4*t^3").map_err(|e| e.to_string())?;
    let rest = scalars(&["2*t", "t^-1 + 3*t^3"])?;
    let numerator =
        &(&rest[0] + &(&rest[1] * &x1)) + &(&x1 * &x1).scale(&Rational::from_integer((-6).into()));
    let x2 = -&(&numerator * &parse_scalar("t^-1").map_err(|e| e.to_string())?);
    Ok((f, vec![x1, x2]))
}

fn ac9() -> Outcome {
    let hand: [(&str, &[&str]); 9] = [
        ("x1 + x2 + 1", &["t", "-1 - t"]),
        ("x1*x2 - 1", &["t^2", "t^-2"]),
        ("x1^2 - x2", &["1 + t", "1 + 2*t + t^2"]),
        ("t*x1 + x2 - 2", &["t^-1", "1"]),
        ("x1 + x2 + x3", &["t", "t^(1/2)", "-t - t^(1/2)"]),
        ("x1^2 + x2^2 - 2*x1*x2", &["3 + t", "3 + t"]),
        ("(1 + t)*x1 - x2", &["t^(-1/2)", "t^(-1/2) + t^(1/2)"]),
        ("x1*x2*x3 - t^5", &["t", "t^2", "t^2"]),
        ("x1 - 7 + t^1000", &["7 - t^1000"]),
    ];
    let mut cases = Vec::new();
    for (f, p) in hand {
        cases.push((parse_polynomial(f).map_err(|e| e.to_string())?, scalars(p)?));
    }
    cases.push(running_example_witness()?);
    for (f, p) in &cases {
        let report =
            check_equivalence(f, &[], std::slice::from_ref(p)).map_err(|e| e.to_string())?;
        let w = &report.witnesses[0];
        let point = QVector::new(
            w.valuations
                .iter()
                .map(|v| v.finite().cloned().ok_or("infinite valuation"))
                .collect::<Result<_, _>>()?,
        );
        let in_complex = trop_hypersurface(f)
            .map_err(|e| e.to_string())?
            .contains(&point)
            .map_err(|e| e.to_string())?;
        if !w.residual.is_zero() || !w.in_set1 || !in_complex {
            return Err(format!(
                "{f} at {p:?}: residual {}, valuations {point}",
                w.residual
            ));
        }
    }
    Ok(format!("{} witnesses", cases.len()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: "AC1",
            name: "rank-one table",
            budget: secs(1),
            run: ac1,
        },
        Criterion {
            id: "AC2",
            name: "Gl2 table",
            budget: secs(1),
            run: ac2,
        },
        Criterion {
            id: "AC3",
            name: "running example",
            budget: secs(1),
            run: ac3,
        },
        Criterion {
            id: "AC4",
            name: "membership equivalence",
            budget: secs(30),
            run: ac4,
        },
        Criterion {
            id: "AC5",
            name: "initial form agreement",
            budget: secs(10),
            run: ac5,
        },
        Criterion {
            id: "AC6",
            name: "facewise vs graded route",
            budget: secs(30),
            run: ac6,
        },
        Criterion {
            id: "AC7",
            name: "convergence to strata",
            budget: secs(10),
            run: ac7,
        },
        Criterion {
            id: "AC8",
            name: "toric oracle",
            budget: secs(10),
            run: ac8,
        },
        Criterion {
            id: "AC9",
            name: "witness containment",
            budget: secs(1),
            run: ac9,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!(
                "{detail}; took {elapsed:.2?}, budget {:?}",
                c.budget
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {} {} ({elapsed:.2?}): {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {} ({elapsed:.2?}): {why}", c.id, c.name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
