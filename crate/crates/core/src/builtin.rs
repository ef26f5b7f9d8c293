//! Built-in worked examples: the rank-one homogeneous space `A²∖{0}`, `Gl₂`
//! as a `Gl₂ × Gl₂` space, `P¹×P¹`, the flag-variety point, a toric datum,
//! and the running Puiseux polynomial.
//!
//! Each embedding carries the stratification its tropicalization should
//! have, as a list of [`ExpectedStratum`] summaries.

use crate::polyhedra::{Cone, QVector};
use crate::puiseux::{parse_polynomial, ValuedPolynomial};
use crate::spherical::{Color, ColoredCone, ColoredFan, SphericalDatum};

/// Name of the single color of `A²∖{0}`.
pub const A2_COLOR: &str = "D";
/// Name of the single color of `Gl₂`.
pub const GL2_COLOR: &str = "V(x22)";

pub const E3_SOURCE: &str = "2*t + (t^-1 + 3*t^3)*x1 + (7 - t^1000)*x2 - 6*x1^2 + 4*t^-2*x1*x2";

/// Shape and labels of one stratum: `dim` is `dim τ`, `shape` the shape of
/// the projected valuation cone (see `troposphere::cone_shape`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExpectedStratum {
    pub dim: usize,
    pub shape: &'static str,
    pub colors: Vec<&'static str>,
}

#[derive(Clone, Debug)]
pub struct Embedding {
    pub name: &'static str,
    pub datum: SphericalDatum,
    pub fan: ColoredFan,
    pub expected: Vec<ExpectedStratum>,
}

fn v(x: &[i64]) -> QVector {
    QVector::from_ints(x)
}

fn cone(gens: &[&[i64]]) -> Cone {
    let dim = gens[0].len();
    Cone::from_generators(dim, gens.iter().map(|g| v(g)).collect()).expect("builtin cone")
}

fn plain(gens: &[&[i64]]) -> ColoredCone {
    ColoredCone::uncolored(cone(gens))
}

fn colored(gens: &[&[i64]], color: &str) -> ColoredCone {
    ColoredCone::new(cone(gens), [color])
}

fn origin(m: usize) -> ColoredCone {
    ColoredCone::uncolored(Cone::origin(m))
}

fn st(dim: usize, shape: &'static str, colors: &[&'static str]) -> ExpectedStratum {
    ExpectedStratum {
        dim,
        shape,
        colors: colors.to_vec(),
    }
}

/// `A²∖{0}`: rank 1, `V = Q`, one color at `+1`.
pub fn a2_minus_origin_datum() -> SphericalDatum {
    SphericalDatum::new(
        1,
        Cone::full(1),
        vec![Color {
            name: A2_COLOR.into(),
            rho: v(&[1]),
        }],
    )
    .expect("builtin datum")
}

/// `Gl₂`: rank 2, `V = {α₁ ≥ α₂}`, one color at `(-1, 1)`.
pub fn gl2_datum() -> SphericalDatum {
    SphericalDatum::new(
        2,
        Cone::from_inequalities(2, &[v(&[1, -1])], &[]).expect("builtin cone"),
        vec![Color {
            name: GL2_COLOR.into(),
            rho: v(&[-1, 1]),
        }],
    )
    .expect("builtin datum")
}

/// `P¹×P¹` minus the diagonal: rank 1, `V = ray(+1)`, two colors both at `-1`.
pub fn p1xp1_datum() -> SphericalDatum {
    SphericalDatum::new(
        1,
        Cone::ray(v(&[1])),
        vec![
            Color {
                name: "V(x21)".into(),
                rho: v(&[-1]),
            },
            Color {
                name: "V(x22)".into(),
                rho: v(&[-1]),
            },
        ],
    )
    .expect("builtin datum")
}

/// A flag variety: rank 0, so every fan is the single origin cone.
pub fn flag_datum() -> SphericalDatum {
    SphericalDatum::new(0, Cone::full(0), vec![]).expect("builtin datum")
}

/// The torus `(k*)^m` acting on itself: no colors, `V = Q^m`.
pub fn toric_datum(m: usize) -> SphericalDatum {
    SphericalDatum::new(m, Cone::full(m), vec![]).expect("builtin datum")
}

/// The fan of `A^m`: all faces of the positive orthant.
pub fn affine_space_fan(m: usize) -> ColoredFan {
    let mut cones = Vec::new();
    for mask in 0u32..(1 << m) {
        let gens: Vec<QVector> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| QVector::unit(m, i))
            .collect();
        let c = if gens.is_empty() {
            Cone::origin(m)
        } else {
            Cone::from_generators(m, gens).expect("orthant face")
        };
        cones.push(ColoredCone::uncolored(c));
    }
    ColoredFan::new(cones)
}

/// The six embeddings of `A²∖{0}`.
pub fn table1() -> Vec<Embedding> {
    let d = a2_minus_origin_datum();
    let o = || origin(1);
    let pos_d = || colored(&[&[1]], A2_COLOR);
    let pos = || plain(&[&[1]]);
    let neg = || plain(&[&[-1]]);
    let line = || st(0, "line", &[]);
    let point = || st(1, "point", &[]);
    let rows: Vec<(&'static str, Vec<ColoredCone>, Vec<ExpectedStratum>)> = vec![
        ("A2-0", vec![o()], vec![line()]),
        (
            "A2",
            vec![o(), pos_d()],
            vec![line(), st(1, "point", &[A2_COLOR])],
        ),
        ("Bl0A2", vec![o(), pos()], vec![line(), point()]),
        ("P2-0", vec![o(), neg()], vec![line(), point()]),
        (
            "P2",
            vec![o(), pos_d(), neg()],
            vec![line(), st(1, "point", &[A2_COLOR]), point()],
        ),
        (
            "Bl0P2",
            vec![o(), pos(), neg()],
            vec![line(), point(), point()],
        ),
    ];
    rows.into_iter()
        .map(|(name, cones, expected)| Embedding {
            name,
            datum: d.clone(),
            fan: ColoredFan::new(cones),
            expected,
        })
        .collect()
}

/// The seven `Gl₂`-embeddings.
pub fn table2() -> Vec<Embedding> {
    let d = gl2_datum();
    let o = || origin(2);
    let r10 = || plain(&[&[1, 0]]);
    let r11 = || plain(&[&[1, 1]]);
    let rmm = || plain(&[&[-1, -1]]);
    let a4 = || colored(&[&[-1, 1], &[1, 0]], GL2_COLOR);
    let bl = || plain(&[&[1, 0], &[1, 1]]);
    let p4 = || plain(&[&[1, 0], &[-1, -1]]);
    let half = || st(0, "halfplane", &[]);
    let line = || st(1, "line", &[]);
    let ray = || st(1, "ray", &[]);
    let point = || st(2, "point", &[]);
    let dpoint = || st(2, "point", &[GL2_COLOR]);
    let rows: Vec<(&'static str, Vec<ColoredCone>, Vec<ExpectedStratum>)> = vec![
        ("Gl2", vec![o()], vec![half()]),
        ("A4-0", vec![o(), r10()], vec![half(), line()]),
        ("A4", vec![o(), r10(), a4()], vec![half(), line(), dpoint()]),
        (
            "Bl0A4",
            vec![o(), r10(), r11(), bl()],
            vec![half(), line(), ray(), point()],
        ),
        (
            "P4-0",
            vec![o(), r10(), rmm(), p4()],
            vec![half(), line(), ray(), point()],
        ),
        (
            "P4",
            vec![o(), r10(), a4(), rmm(), p4()],
            vec![half(), line(), dpoint(), ray(), point()],
        ),
        (
            "Bl0P4",
            vec![o(), r11(), r10(), rmm(), bl(), p4()],
            vec![half(), ray(), line(), ray(), point(), point()],
        ),
    ];
    rows.into_iter()
        .map(|(name, cones, expected)| Embedding {
            name,
            datum: d.clone(),
            fan: ColoredFan::new(cones),
            expected,
        })
        .collect()
}

/// `Bl₀(A⁴)` as a `Gl₂`-embedding.
pub fn blowup_a4() -> Embedding {
    table2()
        .into_iter()
        .find(|e| e.name == "Bl0A4")
        .expect("present")
}

/// `P¹×P¹` with the fan `{0, ray(+1)}`, no colors on the ray.
pub fn p1xp1() -> Embedding {
    Embedding {
        name: "P1xP1",
        datum: p1xp1_datum(),
        fan: ColoredFan::new(vec![origin(1), plain(&[&[1]])]),
        expected: vec![st(0, "ray", &[]), st(1, "point", &[])],
    }
}

pub fn flag() -> Embedding {
    Embedding {
        name: "flag",
        datum: flag_datum(),
        fan: ColoredFan::new(vec![origin(0)]),
        expected: vec![st(0, "point", &[])],
    }
}

/// `A²` as a toric variety, the quadrant fan.
pub fn toric_a2() -> Embedding {
    Embedding {
        name: "toric-A2",
        datum: toric_datum(2),
        fan: affine_space_fan(2),
        expected: vec![
            st(0, "plane", &[]),
            st(1, "line", &[]),
            st(1, "line", &[]),
            st(2, "point", &[]),
        ],
    }
}

/// Every built-in embedding, each listed once.
pub fn corpus() -> Vec<Embedding> {
    let mut all = table1();
    all.extend(table2());
    all.push(p1xp1());
    all.push(flag());
    all.push(toric_a2());
    all
}

/// The running example `2t + (t⁻¹+3t³)x₁ + (7−t¹⁰⁰⁰)x₂ − 6x₁² + 4t⁻²x₁x₂`.
pub fn e3_polynomial() -> ValuedPolynomial {
    parse_polynomial(E3_SOURCE).expect("builtin polynomial")
}
