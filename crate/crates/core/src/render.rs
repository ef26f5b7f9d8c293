//! Pictures of tropicalizations of rank at most two.
//!
//! The valuation cone is cut down to the polygon
//! `Q = V ∩ [-E, E]^m ∩ {<r̂, x> <= E}` where `r` runs over the rays that
//! are strata and `r̂` is `r` scaled to max-norm one. The stratum of `τ` is
//! drawn as the face of `Q` maximising a relative-interior point of
//! `τ ∩ V`: the open stratum fills `Q`, ray strata become edges and
//! two-dimensional strata become vertices. Colored strata get a bullseye.

use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::polyhedra::{Polyhedron, QVector, Rational};
use crate::strategy::{Named, Registry};
use crate::troposphere::ExtendedTrop;
use crate::{io, Error, Result};

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Half-width `E` of the bounding box `[-E, E]^m`.
    pub extent: Rational,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            extent: Rational::from_integer(2.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Geometry {
    Region,
    Segment(QVector, QVector),
    Point(QVector),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mark {
    pub key: String,
    pub colored: bool,
    pub geometry: Geometry,
}

/// Exact layout shared by all renderers. Points have `rank` coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub rank: usize,
    pub extent: Rational,
    /// Vertices of `Q`, in counter-clockwise order for rank two.
    pub region: Vec<QVector>,
    pub marks: Vec<Mark>,
}

pub fn layout(t: &ExtendedTrop, opts: &RenderOptions) -> Result<Scene> {
    let m = t.rank();
    if m > 2 {
        return Err(Error::RenderRank(m));
    }
    if !opts.extent.is_positive() {
        return Err(Error::Parse("extent must be positive".into()));
    }
    let e = opts.extent.clone();
    let v = t.valuation_cone();
    let mut ineqs: Vec<(QVector, Rational)> = Vec::new();
    for i in 0..m {
        let unit = QVector::unit(m, i);
        ineqs.push((-&unit, -e.clone()));
        ineqs.push((unit, -e.clone()));
    }
    for s in t.strata() {
        if s.face.cone.dim() == 1 {
            for r in s.face.cone.rays() {
                let norm = r.iter().map(|x| x.abs()).max().expect("nonzero ray");
                ineqs.push((-&r.scale(&norm.recip()), -e.clone()));
            }
        }
    }
    ineqs.extend(v.facets().iter().map(|f| (f.clone(), Rational::zero())));
    let eqs = v
        .equations()
        .iter()
        .map(|f| (f.clone(), Rational::zero()))
        .collect();
    let q = Polyhedron::new(m, ineqs, eqs)?;
    let region = order_polygon(q.generators().vertices);

    let mut marks = Vec::new();
    for s in t.strata() {
        let c = s.face.cone.intersect(v)?.relint_point();
        let geometry = if c.is_zero() {
            Geometry::Region
        } else {
            let best = region
                .iter()
                .map(|p| c.dot(p))
                .max()
                .expect("nonempty polygon");
            let mut top: Vec<QVector> = region
                .iter()
                .filter(|p| c.dot(p) == best)
                .cloned()
                .collect();
            top.sort();
            match top.len() {
                1 => Geometry::Point(top.remove(0)),
                _ => Geometry::Segment(top[0].clone(), top[top.len() - 1].clone()),
            }
        };
        marks.push(Mark {
            key: s.key.clone(),
            colored: !s.labels().is_empty(),
            geometry,
        });
    }
    Ok(Scene {
        rank: m,
        extent: e,
        region,
        marks,
    })
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

fn xy(p: &QVector) -> (f64, f64) {
    let x = p.entries().first().map_or(0.0, to_f64);
    let y = p.entries().get(1).map_or(0.0, to_f64);
    (x, y)
}

/// Sorts the vertices of a convex polygon counter-clockwise around their
/// centroid, starting from the lexicographically least.
fn order_polygon(mut pts: Vec<QVector>) -> Vec<QVector> {
    pts.sort();
    if pts.len() < 3 || pts[0].dim() != 2 {
        return pts;
    }
    let n = pts.len() as f64;
    let (cx, cy) = pts
        .iter()
        .map(xy)
        .fold((0.0, 0.0), |a, p| (a.0 + p.0 / n, a.1 + p.1 / n));
    let start = pts[0].clone();
    let angle = |p: &QVector| {
        let (x, y) = xy(p);
        (y - cy).atan2(x - cx)
    };
    let a0 = angle(&start);
    pts.sort_by(|a, b| {
        let norm = |t: f64| (t - a0).rem_euclid(std::f64::consts::TAU);
        norm(angle(a)).total_cmp(&norm(angle(b)))
    });
    pts
}

pub trait Renderer: Named + Send + Sync {
    fn render(&self, t: &ExtendedTrop, opts: &RenderOptions) -> Result<String>;
}

pub struct Svg;
pub struct Ascii;
pub struct Json;

impl Named for Svg {
    fn name(&self) -> &'static str {
        "svg"
    }

    fn description(&self) -> &'static str {
        "scalable vector figure"
    }
}

impl Named for Ascii {
    fn name(&self) -> &'static str {
        "ascii"
    }

    fn description(&self) -> &'static str {
        "character grid for terminals"
    }
}

impl Named for Json {
    fn name(&self) -> &'static str {
        "json"
    }

    fn description(&self) -> &'static str {
        "the tropicalization itself, as JSON"
    }
}

const SCALE: f64 = 50.0;
const MARGIN: f64 = 20.0;

impl Renderer for Svg {
    fn render(&self, t: &ExtendedTrop, opts: &RenderOptions) -> Result<String> {
        let scene = layout(t, opts)?;
        let e = to_f64(&scene.extent);
        let size = 2.0 * e * SCALE + 2.0 * MARGIN;
        let px = |p: &QVector| {
            let (x, y) = xy(p);
            (MARGIN + (x + e) * SCALE, MARGIN + (e - y) * SCALE)
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
        );
        let o = px(&QVector::zeros(scene.rank));
        let _ = writeln!(
            out,
            r#"  <g stroke="gray" stroke-dasharray="2,3" stroke-width="0.5"><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/></g>"#,
            MARGIN,
            o.1,
            size - MARGIN,
            o.1,
            o.0,
            MARGIN,
            o.0,
            size - MARGIN
        );
        let mut regions = String::new();
        let mut edges = String::new();
        let mut points = String::new();
        for mark in &scene.marks {
            match &mark.geometry {
                Geometry::Region if scene.region.len() >= 3 => {
                    let pts: Vec<String> = scene
                        .region
                        .iter()
                        .map(|p| {
                            let (x, y) = px(p);
                            format!("{x:.2},{y:.2}")
                        })
                        .collect();
                    let _ = writeln!(
                        regions,
                        r##"  <polygon points="{}" fill="#d9d9d9" stroke="none"><title>{}</title></polygon>"##,
                        pts.join(" "),
                        escape(&mark.key)
                    );
                }
                Geometry::Region if scene.region.len() == 2 => {
                    let (a, b) = (px(&scene.region[0]), px(&scene.region[1]));
                    let _ = writeln!(
                        regions,
                        r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2"><title>{}</title></line>"#,
                        a.0,
                        a.1,
                        b.0,
                        b.1,
                        escape(&mark.key)
                    );
                }
                Geometry::Region => {
                    if let Some(p) = scene.region.first() {
                        dot(&mut points, px(p), mark.colored, &mark.key);
                    }
                }
                Geometry::Segment(a, b) => {
                    let (a, b) = (px(a), px(b));
                    let stroke = if mark.colored { "red" } else { "black" };
                    let _ = writeln!(
                        edges,
                        r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="3"><title>{}</title></line>"#,
                        a.0,
                        a.1,
                        b.0,
                        b.1,
                        escape(&mark.key)
                    );
                    if mark.colored {
                        dot(
                            &mut points,
                            ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0),
                            true,
                            &mark.key,
                        );
                    }
                }
                Geometry::Point(p) => dot(&mut points, px(p), mark.colored, &mark.key),
            }
        }
        out.push_str(&regions);
        out.push_str(&edges);
        out.push_str(&points);
        out.push_str("</svg>\n");
        Ok(out)
    }
}

fn dot(out: &mut String, (x, y): (f64, f64), colored: bool, key: &str) {
    if colored {
        let _ = writeln!(
            out,
            r#"  <g><title>{}</title><circle cx="{x:.2}" cy="{y:.2}" r="6" fill="white" stroke="red"/><circle cx="{x:.2}" cy="{y:.2}" r="3" fill="red"/></g>"#,
            escape(key)
        );
    } else {
        let _ = writeln!(
            out,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"><title>{}</title></circle>"#,
            escape(key)
        );
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

const COLS: usize = 41;
const ROWS: usize = 21;

impl Renderer for Ascii {
    fn render(&self, t: &ExtendedTrop, opts: &RenderOptions) -> Result<String> {
        let scene = layout(t, opts)?;
        let e = to_f64(&scene.extent);
        let rows = if scene.rank == 2 { ROWS } else { 1 };
        let mut grid = vec![vec![' '; COLS]; rows];
        let cell = |(x, y): (f64, f64)| -> (usize, usize) {
            let c = ((x + e) / (2.0 * e) * (COLS - 1) as f64).round() as usize;
            let r = if rows == 1 {
                0
            } else {
                ((e - y) / (2.0 * e) * (rows - 1) as f64).round() as usize
            };
            (r.min(rows - 1), c.min(COLS - 1))
        };
        let polygon = region_polyhedron(&scene);
        for (r, row) in grid.iter_mut().enumerate() {
            for (c, ch) in row.iter_mut().enumerate() {
                let x = Rational::new(
                    (2 * c as i64 - (COLS as i64 - 1)).into(),
                    (COLS as i64 - 1).into(),
                ) * &scene.extent;
                let y = if rows == 1 {
                    Rational::zero()
                } else {
                    Rational::new(
                        ((rows as i64 - 1) - 2 * r as i64).into(),
                        (rows as i64 - 1).into(),
                    ) * &scene.extent
                };
                let p = QVector::new([x, y][..scene.rank.clamp(1, 2)].to_vec());
                if scene.rank > 0
                    && polygon
                        .as_ref()
                        .is_some_and(|q| q.contains(&p).unwrap_or(false))
                {
                    *ch = '.';
                }
            }
        }
        for mark in &scene.marks {
            let glyph = if mark.colored { '@' } else { 'o' };
            match &mark.geometry {
                Geometry::Region => {
                    if scene.rank == 0 {
                        grid[0][COLS / 2] = glyph;
                    } else if scene.region.len() == 2 {
                        stroke(
                            &mut grid,
                            xy(&scene.region[0]),
                            xy(&scene.region[1]),
                            '-',
                            &cell,
                        );
                    }
                }
                Geometry::Segment(a, b) => {
                    stroke(
                        &mut grid,
                        xy(a),
                        xy(b),
                        if mark.colored { '@' } else { '#' },
                        &cell,
                    );
                }
                Geometry::Point(p) => {
                    let (r, c) = cell(xy(p));
                    grid[r][c] = glyph;
                }
            }
        }
        let mut out = String::new();
        for row in grid {
            out.push_str(row.iter().collect::<String>().trim_end());
            out.push('\n');
        }
        for s in t.strata() {
            let _ = writeln!(out, "{:>9} {}", s.shape(), s.key);
        }
        Ok(out)
    }
}

fn region_polyhedron(scene: &Scene) -> Option<Polyhedron> {
    if scene.rank == 0 || scene.region.is_empty() {
        return None;
    }
    // The region is the convex hull of its vertices; membership is tested
    // through the hull's inequalities, recovered by double description.
    let m = scene.rank;
    let lifted: Vec<QVector> = scene
        .region
        .iter()
        .map(|p| {
            let mut e = p.entries().to_vec();
            e.push(num_traits::One::one());
            QVector::new(e)
        })
        .collect();
    let hull = crate::polyhedra::Cone::from_generators(m + 1, lifted).ok()?;
    let split = |a: &QVector| {
        let (lin, last) = a.entries().split_at(m);
        (QVector::new(lin.to_vec()), -last[0].clone())
    };
    Polyhedron::new(
        m,
        hull.facets().iter().map(split).collect(),
        hull.equations().iter().map(split).collect(),
    )
    .ok()
}

fn stroke(
    grid: &mut [Vec<char>],
    a: (f64, f64),
    b: (f64, f64),
    glyph: char,
    cell: &dyn Fn((f64, f64)) -> (usize, usize),
) {
    const STEPS: usize = 200;
    for i in 0..=STEPS {
        let s = i as f64 / STEPS as f64;
        let (r, c) = cell((a.0 + s * (b.0 - a.0), a.1 + s * (b.1 - a.1)));
        if !matches!(grid[r][c], 'o' | '@') {
            grid[r][c] = glyph;
        }
    }
}

impl Renderer for Json {
    fn render(&self, t: &ExtendedTrop, _opts: &RenderOptions) -> Result<String> {
        Ok(io::to_pretty(&io::trop_to_json(t)))
    }
}

pub fn renderers() -> Registry<dyn Renderer> {
    let mut r: Registry<dyn Renderer> = Registry::new("renderer");
    r.register(Box::new(Svg));
    r.register(Box::new(Ascii));
    r.register(Box::new(Json));
    r
}
