//! Gaussian elimination over `Q`.

use num_traits::Zero;

use super::{QVector, Rational};

/// Reduced row echelon form of the given rows. Returns the nonzero rows and
/// their pivot columns. The result depends only on the row space.
pub fn rref(rows: &[QVector], dim: usize) -> (Vec<QVector>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let c = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot).take(dim) {
                    *x -= &c * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    (m.into_iter().map(QVector::new).collect(), pivots)
}

pub fn rank(rows: &[QVector], dim: usize) -> usize {
    rref(rows, dim).1.len()
}

/// Basis of `{x : <r, x> = 0 for every row r}`, one vector per free column,
/// ordered by free column, with a 1 at its own free column and 0 at the
/// others.
pub fn nullspace(rows: &[QVector], dim: usize) -> Vec<QVector> {
    let (r, pivots) = rref(rows, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = QVector::unit(dim, f).into_entries();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            QVector::new(v)
        })
        .collect()
}

/// Coefficients `c` with `sum c_i basis_i = target`, if `target` lies in the
/// span. `basis` must be linearly independent.
pub fn solve_in_span(basis: &[QVector], target: &QVector) -> Option<Vec<Rational>> {
    let dim = target.dim();
    let k = basis.len();
    // Augmented system: columns are basis vectors, rows are coordinates.
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let p = (row..dim).find(|&i| !m[i][col].is_zero())?;
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[row].clone();
        for (i, r) in m.iter_mut().enumerate().take(dim) {
            if i != row && !r[col].is_zero() {
                let c = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot).take(k + 1) {
                    *x -= &c * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

/// Orthogonal basis of the span of `vectors` (Gram–Schmidt, exact).
pub fn orthogonal_basis(vectors: &[QVector]) -> Vec<QVector> {
    let mut basis: Vec<QVector> = Vec::new();
    for v in vectors {
        let w = project_out(v, &basis);
        if !w.is_zero() {
            basis.push(w);
        }
    }
    basis
}

/// Removes from `v` its orthogonal projection onto the span of the
/// (pairwise orthogonal) `orth` vectors.
pub fn project_out(v: &QVector, orth: &[QVector]) -> QVector {
    orth.iter().fold(v.clone(), |acc, q| {
        let c = acc.dot(q) / q.dot(q);
        acc.add_scaled(&-c, q)
    })
}
