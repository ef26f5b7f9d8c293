//! Double description by incremental Fourier–Motzkin elimination.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::linalg;
use super::QVector;

/// Generators of a cone `L + cone(rays)`.
///
/// In canonical form the lineality basis is in reduced row echelon form and
/// every ray is orthogonal to the lineality space, extreme modulo it, and a
/// primitive integer vector; rays are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generators {
    pub lineality: Vec<QVector>,
    pub rays: Vec<QVector>,
}

/// Generators of `{x in Q^dim : <a, x> >= 0 for every a in inequalities}`.
pub fn double_description(dim: usize, inequalities: &[QVector]) -> Generators {
    let mut lineality: Vec<QVector> = (0..dim).map(|i| QVector::unit(dim, i)).collect();
    let mut rays: Vec<QVector> = Vec::new();
    let mut processed: Vec<QVector> = Vec::new();

    for a in inequalities {
        if a.is_zero() {
            continue;
        }
        if let Some(idx) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l0 = lineality.remove(idx);
            if a.dot(&l0).is_negative() {
                l0 = -&l0;
            }
            let al0 = a.dot(&l0);
            for l in lineality.iter_mut() {
                let c = -(a.dot(l) / &al0);
                *l = l.add_scaled(&c, &l0);
            }
            for r in rays.iter_mut() {
                let c = -(a.dot(r) / &al0);
                *r = r.add_scaled(&c, &l0);
            }
            rays.push(l0);
        } else {
            let mut next = Vec::new();
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for r in rays.drain(..) {
                let s = a.dot(&r);
                match s.cmp(&Zero::zero()) {
                    Ordering::Greater => {
                        pos.push((s, r.clone()));
                        next.push(r);
                    }
                    Ordering::Equal => next.push(r),
                    Ordering::Less => neg.push((s, r)),
                }
            }
            for (sp, p) in &pos {
                for (sn, n) in &neg {
                    // sp * n - sn * p with sp > 0 and -sn > 0
                    let combo = &n.scale(sp) - &p.scale(sn);
                    next.push(combo);
                }
            }
            rays = next;
        }
        processed.push(a.clone());
        rays = canonical_rays(dim, &lineality, rays, &processed);
    }

    let (lineality, _) = linalg::rref(&lineality, dim);
    let rays = canonical_rays(dim, &lineality, rays, &processed);
    Generators { lineality, rays }
}

/// Projects rays off the lineality space, makes them primitive, removes
/// duplicates and drops rays that are not extreme for the cone cut out by
/// `processed`.
fn canonical_rays(
    dim: usize,
    lineality: &[QVector],
    rays: Vec<QVector>,
    processed: &[QVector],
) -> Vec<QVector> {
    let orth = linalg::orthogonal_basis(lineality);
    let target_rank = dim.saturating_sub(lineality.len() + 1);
    let mut out: Vec<QVector> = rays
        .into_iter()
        .map(|r| linalg::project_out(&r, &orth).primitive())
        .filter(|r| !r.is_zero())
        .filter(|r| {
            let tight: Vec<QVector> = processed
                .iter()
                .filter(|a| a.dot(r).is_zero())
                .cloned()
                .collect();
            linalg::rank(&tight, dim) == target_rank
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
