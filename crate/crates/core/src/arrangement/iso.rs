//! Linear isomorphism of central arrangements.
//!
//! Two arrangements are linearly isomorphic when an invertible linear map of
//! their essential spaces carries one hyperplane set onto the other. We
//! search for the map on the dual side: a basis of normals of the first
//! arrangement is sent to scalar multiples of independent normals of the
//! second, the scalars are pinned down by the remaining normals, and the
//! result is verified on every hyperplane.

use std::collections::HashMap;

use super::Arrangement;
use crate::linalg::{self, Rref};
use crate::scalar::{canonicalize_normal, Scalar, Vector};

/// A linear identification found by [`find_isomorphism`].
#[derive(Clone, Debug)]
pub struct Isomorphism {
    /// `r × r` matrix on essential normal coordinates (row-vector
    /// convention): normal `a` of the first arrangement maps to `a · matrix`,
    /// a multiple of normal `permutation[i]` of the second.
    pub matrix: Vec<Vector>,
    pub permutation: Vec<usize>,
}

struct Side {
    normals: Vec<Vector>,
    pair_size: Vec<Vec<usize>>,
    profile: Vec<Vec<usize>>,
}

impl Side {
    fn new(normals: Vec<Vector>) -> Self {
        let m = normals.len();
        let dim = normals.first().map_or(0, Vector::dim);
        let mut pair_size = vec![vec![0; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let span = Rref::new(dim, &[normals[i].clone(), normals[j].clone()]);
                let s = normals.iter().filter(|n| span.contains(n)).count();
                pair_size[i][j] = s;
                pair_size[j][i] = s;
            }
        }
        let profile = (0..m)
            .map(|i| {
                let mut p: Vec<usize> = (0..m).filter(|&j| j != i).map(|j| pair_size[i][j]).collect();
                p.sort_unstable();
                p
            })
            .collect();
        Side {
            normals,
            pair_size,
            profile,
        }
    }
}

fn support(coeffs: &[Scalar]) -> u64 {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Searches for a linear isomorphism between the essentializations of `a`
/// and `b`. Returns `None` if none exists.
pub fn find_isomorphism(a: &Arrangement, b: &Arrangement) -> Option<Isomorphism> {
    let ea = a.essential();
    let eb = b.essential();
    let r = ea.rank();
    if r != eb.rank() || a.len() != b.len() || r > 64 {
        return None;
    }
    if r == 0 {
        return Some(Isomorphism {
            matrix: Vec::new(),
            permutation: Vec::new(),
        });
    }
    let sa = Side::new(ea.normals);
    let sb = Side::new(eb.normals);
    let mut pa: Vec<&Vec<usize>> = sa.profile.iter().collect();
    let mut pb: Vec<&Vec<usize>> = sb.profile.iter().collect();
    pa.sort();
    pb.sort();
    if pa != pb {
        return None;
    }

    let mut basis = Vec::new();
    let mut rref = Rref::empty(r);
    for (i, n) in sa.normals.iter().enumerate() {
        if rref.insert(n) {
            basis.push(i);
        }
    }
    let basis_rows: Vec<Vector> = basis.iter().map(|&i| sa.normals[i].clone()).collect();
    let lambda: Vec<Vec<Scalar>> = sa
        .normals
        .iter()
        .map(|n| linalg::coefficients(&basis_rows, n).expect("basis spans"))
        .collect();

    // Processing order for the non-basis normals: each one after the first
    // in its component shares a coordinate with something already pinned.
    let mut order = Vec::new();
    let mut known = 0u64;
    let mut remaining: Vec<usize> = (0..sa.normals.len()).filter(|i| !basis.contains(i)).collect();
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|&i| support(&lambda[i]) & known != 0)
            .unwrap_or(0);
        let i = remaining.remove(pos);
        known |= support(&lambda[i]);
        order.push(i);
    }

    let mut search = Search {
        sa: &sa,
        sb: &sb,
        basis: &basis,
        lambda: &lambda,
        order: &order,
        sigma: Vec::new(),
        used: vec![false; sb.normals.len()],
    };
    search.choose_basis(r)
}

struct Search<'a> {
    sa: &'a Side,
    sb: &'a Side,
    basis: &'a [usize],
    lambda: &'a [Vec<Scalar>],
    order: &'a [usize],
    sigma: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn choose_basis(&mut self, r: usize) -> Option<Isomorphism> {
        let j = self.sigma.len();
        if j == r {
            return self.propagate();
        }
        let ai = self.basis[j];
        for bi in 0..self.sb.normals.len() {
            if self.used[bi] || self.sb.profile[bi] != self.sa.profile[ai] {
                continue;
            }
            let consistent = self
                .sigma
                .iter()
                .enumerate()
                .all(|(l, &bl)| self.sb.pair_size[bl][bi] == self.sa.pair_size[self.basis[l]][ai]);
            if !consistent {
                continue;
            }
            let mut rows: Vec<Vector> = self.sigma.iter().map(|&b| self.sb.normals[b].clone()).collect();
            rows.push(self.sb.normals[bi].clone());
            if linalg::rank(&rows) != rows.len() {
                continue;
            }
            self.used[bi] = true;
            self.sigma.push(bi);
            if let Some(iso) = self.choose_basis(r) {
                return Some(iso);
            }
            self.sigma.pop();
            self.used[bi] = false;
        }
        None
    }

    fn propagate(&mut self) -> Option<Isomorphism> {
        let r = self.basis.len();
        let beta: Vec<Vector> = self.sigma.iter().map(|&b| self.sb.normals[b].clone()).collect();
        let gamma: Vec<Vec<Scalar>> = self
            .sb
            .normals
            .iter()
            .map(|n| linalg::coefficients(&beta, n).expect("basis spans"))
            .collect();
        let mut by_support: HashMap<u64, Vec<usize>> = HashMap::new();
        for (i, g) in gamma.iter().enumerate() {
            if !self.used[i] {
                by_support.entry(support(g)).or_default().push(i);
            }
        }
        let mut c: Vec<Option<Scalar>> = vec![None; r];
        let mut perm = vec![usize::MAX; self.sa.normals.len()];
        for (j, &ai) in self.basis.iter().enumerate() {
            perm[ai] = self.sigma[j];
        }
        let mut used = self.used.clone();
        if !self.assign(0, &gamma, &by_support, &mut c, &mut used, &mut perm) {
            return None;
        }
        let c: Vec<Scalar> = c.into_iter().map(|x| x.unwrap_or_else(Scalar::one)).collect();
        let basis_rows: Vec<Vector> = self.basis.iter().map(|&i| self.sa.normals[i].clone()).collect();
        let inv = linalg::inverse(&basis_rows)?;
        let scaled: Vec<Vector> = beta.iter().zip(&c).map(|(b, ci)| b.scale(ci)).collect();
        let matrix: Vec<Vector> = inv.iter().map(|row| linalg::vec_mat(row, &scaled)).collect();
        for (i, n) in self.sa.normals.iter().enumerate() {
            let image = canonicalize_normal(&linalg::vec_mat(n, &matrix)).ok()?;
            if image != canonicalize_normal(&self.sb.normals[perm[i]]).ok()? {
                return None;
            }
        }
        Some(Isomorphism {
            matrix,
            permutation: perm,
        })
    }

    fn assign(
        &self,
        step: usize,
        gamma: &[Vec<Scalar>],
        by_support: &HashMap<u64, Vec<usize>>,
        c: &mut Vec<Option<Scalar>>,
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
    ) -> bool {
        let Some(&ai) = self.order.get(step) else {
            return true;
        };
        let lam = &self.lambda[ai];
        let sup = support(lam);
        let Some(cands) = by_support.get(&sup) else {
            return false;
        };
        let idx: Vec<usize> = (0..lam.len()).filter(|i| sup >> i & 1 == 1).collect();
        for &bi in cands {
            if used[bi] {
                continue;
            }
            let g = &gamma[bi];
            let mu = match idx.iter().find(|&&i| c[i].is_some()) {
                Some(&i) => &(&lam[i] * c[i].as_ref().unwrap()) / &g[i],
                None => Scalar::one(),
            };
            let ok = idx.iter().all(|&i| match &c[i] {
                Some(ci) => &lam[i] * ci == &mu * &g[i],
                None => true,
            });
            if !ok {
                continue;
            }
            let newly: Vec<usize> = idx.iter().copied().filter(|&i| c[i].is_none()).collect();
            for &i in &newly {
                c[i] = Some(&(&mu * &g[i]) / &lam[i]);
            }
            used[bi] = true;
            perm[ai] = bi;
            if self.assign(step + 1, gamma, by_support, c, used, perm) {
                return true;
            }
            used[bi] = false;
            perm[ai] = usize::MAX;
            for &i in &newly {
                c[i] = None;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn arr(dim: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_normals(dim, Field::Rational, rows.iter().map(|r| Vector::from_ints(r))).unwrap()
    }

    #[test]
    fn a2_two_realizations() {
        let ambient = arr(3, &[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        let planar = arr(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let iso = find_isomorphism(&ambient, &planar).unwrap();
        assert_eq!(iso.permutation.len(), 3);
        // any three distinct lines in the plane are isomorphic
        let other = arr(2, &[&[1, 0], &[0, 1], &[1, -3]]);
        assert!(find_isomorphism(&planar, &other).is_some());
    }

    #[test]
    fn b2_is_not_a_generic_four_lines() {
        let b2 = arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        let four = arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 3]]);
        // same matroid, different cross-ratio
        assert!(find_isomorphism(&b2, &four).is_none());
        let b2_scaled = arr(2, &[&[2, 0], &[0, 3], &[2, 3], &[2, -3]]);
        assert!(find_isomorphism(&b2, &b2_scaled).is_some());
    }

    #[test]
    fn rank_mismatch() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let b = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert!(find_isomorphism(&a, &b).is_none());
    }
}
