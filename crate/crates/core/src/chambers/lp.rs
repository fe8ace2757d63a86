//! Exact feasibility of an open polyhedral cone.
//!
//! To decide whether `{x : s_i <n_i, x> > 0 for all i}` is nonempty we
//! maximize a slack `δ` subject to `s_i <n_i, x> ≥ δ`, `-1 ≤ x ≤ 1`,
//! `δ ≤ 1`. Writing `x = u - v` with `0 ≤ u, v ≤ 1` makes the origin a basic
//! feasible solution, so no phase one is needed. The cone is open-nonempty
//! iff the optimum has `δ > 0`; we stop at the first basis with `δ > 0`.
//!
//! Pivoting uses Bland's rule on a condensed tableau, which terminates on
//! the heavily degenerate starting vertex.

use crate::scalar::{Scalar, Vector};

struct Tableau {
    /// `basic_i = rhs_i - Σ_j a[i][j] · nonbasic_j`
    a: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
    /// objective `z = z0 + Σ_j c_j · nonbasic_j`
    c: Vec<Scalar>,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, p: usize, q: usize) {
        let inv = self.a[p][q].recip();
        let ncols = self.nonbasic.len();
        let pivot_row: Vec<Scalar> = (0..ncols)
            .map(|j| if j == q { inv.clone() } else { &self.a[p][j] * &inv })
            .collect();
        let pivot_rhs = &self.rhs[p] * &inv;
        for i in 0..self.a.len() {
            if i == p {
                continue;
            }
            let f = self.a[i][q].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..ncols {
                if j == q {
                    self.a[i][j] = -&(&f * &inv);
                } else if !pivot_row[j].is_zero() {
                    self.a[i][j] = &self.a[i][j] - &(&f * &pivot_row[j]);
                }
            }
            if !pivot_rhs.is_zero() {
                self.rhs[i] = &self.rhs[i] - &(&f * &pivot_rhs);
            }
        }
        let f = self.c[q].clone();
        if !f.is_zero() {
            for j in 0..ncols {
                if j == q {
                    self.c[j] = -&(&f * &inv);
                } else if !pivot_row[j].is_zero() {
                    self.c[j] = &self.c[j] - &(&f * &pivot_row[j]);
                }
            }
        }
        self.a[p] = pivot_row;
        self.rhs[p] = pivot_rhs;
        std::mem::swap(&mut self.basic[p], &mut self.nonbasic[q]);
    }
}

/// A point `x` with `sign(<normals[i], x>) = signs[i]` for every `i`, or
/// `None` if the open cone is empty. `signs` entries must be ±1.
pub fn feasible_interior_point(dim: usize, normals: &[Vector], signs: &[i8]) -> Option<Vector> {
    assert_eq!(normals.len(), signs.len());
    if normals.is_empty() {
        return Some(Vector::zeros(dim));
    }
    let delta = 2 * dim;
    let nvars = 2 * dim + 1;
    let mut a = Vec::with_capacity(normals.len() + nvars);
    let mut rhs = Vec::with_capacity(normals.len() + nvars);
    for (n, &s) in normals.iter().zip(signs) {
        debug_assert!(s == 1 || s == -1);
        let s = Scalar::from_int(s as i64);
        let mut row = vec![Scalar::zero(); nvars];
        for j in 0..dim {
            if !n.0[j].is_zero() {
                let v = &s * &n.0[j];
                row[j] = -&v;
                row[dim + j] = v;
            }
        }
        row[delta] = Scalar::one();
        a.push(row);
        rhs.push(Scalar::zero());
    }
    for j in 0..nvars {
        let mut row = vec![Scalar::zero(); nvars];
        row[j] = Scalar::one();
        a.push(row);
        rhs.push(Scalar::one());
    }
    let mut c = vec![Scalar::zero(); nvars];
    c[delta] = Scalar::one();
    let nrows = a.len();
    let mut t = Tableau {
        a,
        rhs,
        c,
        basic: (nvars..nvars + nrows).collect(),
        nonbasic: (0..nvars).collect(),
    };

    loop {
        if let Some(p) = t.basic.iter().position(|&b| b == delta) {
            if t.rhs[p].is_positive() {
                break;
            }
        }
        let entering = (0..nvars)
            .filter(|&j| t.c[j].is_positive())
            .min_by_key(|&j| t.nonbasic[j])?;
        let mut best: Option<(usize, Scalar)> = None;
        for i in 0..nrows {
            if !t.a[i][entering].is_positive() {
                continue;
            }
            let ratio = &t.rhs[i] / &t.a[i][entering];
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && t.basic[i] < t.basic[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        let (p, _) = best.expect("bounded by box constraints");
        t.pivot(p, entering);
    }

    let mut value = vec![Scalar::zero(); nvars];
    for (i, &b) in t.basic.iter().enumerate() {
        if b < nvars {
            value[b] = t.rhs[i].clone();
        }
    }
    let x = Vector((0..dim).map(|j| &value[j] - &value[dim + j]).collect());
    let x = x.clear_denominators();
    debug_assert!(normals
        .iter()
        .zip(signs)
        .all(|(n, &s)| n.dot(&x).sign() == s));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let n = vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])];
        let x = feasible_interior_point(2, &n, &[1, 1]).unwrap();
        assert!(x.0.iter().all(Scalar::is_positive));
        let x = feasible_interior_point(2, &n, &[-1, 1]).unwrap();
        assert!(x[0].is_negative() && x[1].is_positive());

        let opposed = vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[-1, 0])];
        assert!(feasible_interior_point(2, &opposed, &[1, 1]).is_none());
        assert!(feasible_interior_point(2, &opposed, &[1, -1]).is_some());
    }

    #[test]
    fn a2_dominant() {
        // essential A2: normals of α1, α2, α1+α2 in fundamental-coweight coordinates
        let n = vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1]), Vector::from_ints(&[1, 1])];
        let x = feasible_interior_point(2, &n, &[1, 1, 1]).unwrap();
        for v in &n {
            assert!(v.dot(&x).is_positive());
        }
        // α1 > 0, α2 > 0 forces α1 + α2 > 0
        assert!(feasible_interior_point(2, &n, &[1, 1, -1]).is_none());
    }

    #[test]
    fn golden_cone() {
        let phi = Scalar::golden_ratio();
        let n = vec![
            Vector(vec![Scalar::one(), -&phi]),
            Vector(vec![-Scalar::one(), Scalar::from_ratio(3, 2)]),
        ];
        // x1 > φ x2 and x1 < 1.5 x2: feasible for x2 < 0 only
        let x = feasible_interior_point(2, &n, &[1, 1]).unwrap();
        assert!(x[1].is_negative());
    }
}
