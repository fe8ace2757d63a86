//! Exact row reduction over [`Scalar`].

use crate::scalar::{Scalar, Vector};

/// Reduced row-echelon form of a set of row vectors.
///
/// `rows` are the nonzero rows, each with a leading 1 in column
/// `pivots[i]` and zeros in every other pivot column. The representation is
/// unique for a given row space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn empty(ncols: usize) -> Self {
        Rref {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn new(ncols: usize, input: &[Vector]) -> Self {
        let mut r = Rref::empty(ncols);
        for v in input {
            r.insert(v);
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating all pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v.0[p].is_zero() {
                let c = -&v.0[p];
                v = v.axpy(&c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the row space. Returns false if it was already contained.
    pub fn insert(&mut self, v: &Vector) -> bool {
        debug_assert_eq!(v.dim(), self.ncols);
        let rem = self.reduce(v);
        let Some(p) = rem.first_nonzero() else {
            return false;
        };
        let inv = rem.0[p].recip();
        let new_row = rem.scale(&inv);
        for row in &mut self.rows {
            if !row.0[p].is_zero() {
                let c = -&row.0[p];
                *row = row.axpy(&c, &new_row);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, new_row);
        true
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Basis of the null space `{x : row·x = 0 for all rows}`, one vector per
    /// free column `f` with `x_f = 1`, other free coordinates zero.
    pub fn nullspace(&self) -> Vec<Vector> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = Vector::unit(self.ncols, f);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x.0[p] = -&row.0[f];
                }
                x
            })
            .collect()
    }

    /// Coefficients expressing `v` in terms of the RREF rows, if `v` lies in
    /// the row space.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.0[p].clone()).collect())
    }
}

pub fn rank(rows: &[Vector]) -> usize {
    match rows.first() {
        None => 0,
        Some(r) => Rref::new(r.dim(), rows).rank(),
    }
}

/// Solves `x · basis = v` for `x`, i.e. coefficients of `v` in the given
/// (linearly independent) rows. Returns `None` if `v` is not in their span
/// or the rows are dependent.
pub fn coefficients(basis: &[Vector], v: &Vector) -> Option<Vec<Scalar>> {
    let n = basis.len();
    let dim = v.dim();
    // Row-reduce the augmented system: columns are basis vectors.
    let mut aug: Vec<Vec<Scalar>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b.0[r].clone()).collect();
            row.push(v.0[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        let Some(r) = (pivot_row..dim).find(|&r| !aug[r][col].is_zero()) else {
            return None;
        };
        aug.swap(pivot_row, r);
        let inv = aug[pivot_row][col].recip();
        for x in aug[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..dim {
            if r != pivot_row && !aug[r][col].is_zero() {
                let c = aug[r][col].clone();
                let src = aug[pivot_row].clone();
                for (x, s) in aug[r].iter_mut().zip(&src) {
                    if !s.is_zero() {
                        *x = &*x - &(&c * s);
                    }
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    if aug[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some((0..n).map(|i| aug[i][n].clone()).collect())
}

/// Square matrix inverse (rows in, rows out). `None` if singular.
pub fn inverse(rows: &[Vector]) -> Option<Vec<Vector>> {
    let n = rows.len();
    let mut aug: Vec<Vector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.0.clone();
            v.extend(Vector::unit(n, i).0);
            Vector(v)
        })
        .collect();
    for col in 0..n {
        let r = (col..n).find(|&r| !aug[r].0[col].is_zero())?;
        aug.swap(col, r);
        let inv = aug[col].0[col].recip();
        aug[col] = aug[col].scale(&inv);
        for r in 0..n {
            if r != col && !aug[r].0[col].is_zero() {
                let c = -&aug[r].0[col];
                aug[r] = aug[r].axpy(&c, &aug[col]);
            }
        }
    }
    Some(aug.into_iter().map(|r| Vector(r.0[n..].to_vec())).collect())
}

/// `rows · v`.
pub fn mat_vec(rows: &[Vector], v: &Vector) -> Vector {
    Vector(rows.iter().map(|r| r.dot(v)).collect())
}

/// `v · rows` (row vector times matrix).
pub fn vec_mat(v: &Vector, rows: &[Vector]) -> Vector {
    let ncols = rows.first().map_or(0, Vector::dim);
    let mut out = Vector::zeros(ncols);
    for (c, r) in v.0.iter().zip(rows) {
        if !c.is_zero() {
            out = out.axpy(c, r);
        }
    }
    out
}
