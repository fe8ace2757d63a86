use std::collections::HashSet;
use std::hash::Hash;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::RootSystem;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::Polynomial;
use crate::scalar::{Scalar, Vector};

/// Upper bound on the group order for enumeration.
#[derive(Clone, Copy, Debug)]
pub struct GroupGuard {
    pub max_order: u64,
}

impl Default for GroupGuard {
    fn default() -> Self {
        GroupGuard { max_order: 10_000_000 }
    }
}

/// A group element as a matrix on ambient coordinates (acting on column
/// vectors), with its length when produced by enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    pub matrix: Vec<Vector>,
    pub length: Option<usize>,
}

impl CoxeterElement {
    pub fn identity(n: usize) -> Self {
        CoxeterElement {
            matrix: (0..n).map(|i| Vector::unit(n, i)).collect(),
            length: Some(0),
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        linalg::mat_vec(&self.matrix, v)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| !rs.is_positive_root(&self.apply(b)))
            .count()
    }

    pub fn preserves_form(&self, rs: &RootSystem) -> bool {
        let n = rs.ambient_dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (ei, ej) = (Vector::unit(n, i), Vector::unit(n, j));
                rs.inner(&self.apply(&ei), &self.apply(&ej)) == rs.inner(&ei, &ej)
            })
        })
    }

    pub fn permutes_roots(&self, rs: &RootSystem) -> bool {
        rs.positive_roots().iter().all(|b| rs.is_root(&self.apply(b)))
    }
}

/// Coordinates for the graded orbit walk: `i64` when the Cartan matrix is
/// integral, exact scalars otherwise.
trait Coord: Clone + Eq + Hash + Ord + Send + Sync {
    fn one() -> Self;
    fn minus_times(&self, c: &Self, a: &Self) -> Self;
    fn positive(&self) -> bool;
}

impl Coord for i64 {
    fn one() -> Self {
        1
    }
    fn minus_times(&self, c: &Self, a: &Self) -> Self {
        self - c * a
    }
    fn positive(&self) -> bool {
        *self > 0
    }
}

impl Coord for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
    fn minus_times(&self, c: &Self, a: &Self) -> Self {
        self - &(c * a)
    }
    fn positive(&self) -> bool {
        self.is_positive()
    }
}

/// Level sizes of the orbit of a regular dominant point. With `c` the
/// pairings `<x, α_i^∨>`, left multiplication by `s_j` lengthens `w` exactly
/// when `c_j(wρ) > 0`, so each level is generated from the previous one.
fn level_sizes<T: Coord>(cartan: &[Vec<T>]) -> Vec<u64> {
    let n = cartan.len();
    let mut level: Vec<Vec<T>> = vec![vec![T::one(); n]];
    let mut sizes = Vec::new();
    while !level.is_empty() {
        sizes.push(level.len() as u64);
        let mut next: Vec<Vec<T>> = level
            .par_iter()
            .flat_map_iter(|c| {
                (0..n).filter(|&j| c[j].positive()).map(move |j| {
                    (0..n)
                        .map(|i| c[i].minus_times(&c[j], &cartan[j][i]))
                        .collect::<Vec<T>>()
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    sizes
}

impl RootSystem {
    /// `A[j][i] = 2<α_j, α_i> / <α_i, α_i>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<Scalar>> {
        let g = self.gram();
        (0..self.rank())
            .map(|j| {
                (0..self.rank())
                    .map(|i| &(&g[j][i] * &Scalar::from_int(2)) / &g[i][i])
                    .collect()
            })
            .collect()
    }

    pub(crate) fn check_order(&self, guard: GroupGuard) -> Result<u64> {
        let order = self.kind().order();
        match order.to_u64() {
            Some(o) if o <= guard.max_order => Ok(o),
            _ => Err(Error::GroupTooLarge(format!(
                "|W({})| = {order} exceeds {}",
                self.kind(),
                guard.max_order
            ))),
        }
    }

    /// `W(t) = Σ_w t^{ℓ(w)}`, by breadth-first enumeration graded by length.
    pub fn poincare_polynomial(&self, guard: GroupGuard) -> Result<Polynomial> {
        self.check_order(guard)?;
        let cartan = self.cartan_matrix();
        let integral = self.integral_cartan();
        let sizes = match integral {
            Some(a) => level_sizes(&a),
            None => level_sizes(&cartan),
        };
        Ok(Polynomial::from_counts(&sizes))
    }

    /// The Cartan matrix as integers, for crystallographic types.
    pub(crate) fn integral_cartan(&self) -> Option<Vec<Vec<i64>>> {
        self.cartan_matrix()
            .iter()
            .map(|row| {
                row.iter().map(Scalar::to_i64).collect()
            })
            .collect()
    }

    /// Breadth-first search of a `W`-orbit in pairing coordinates
    /// `c_i = <x, α_i^∨>`, where `s_j` acts by `c_i -= c_j A[j][i]`.
    /// `None` if the Cartan matrix is not integral.
    pub(crate) fn orbit_find_pairings<P>(
        &self,
        start: &[i64],
        guard: GroupGuard,
        pred: P,
    ) -> Option<Result<Option<Vec<i64>>>>
    where
        P: Fn(&[i64]) -> bool,
    {
        let a = self.integral_cartan()?;
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(start.to_vec());
        queue.push_back(start.to_vec());
        while let Some(c) = queue.pop_front() {
            if pred(&c) {
                return Some(Ok(Some(c)));
            }
            for j in 0..n {
                if c[j] == 0 {
                    continue;
                }
                let d: Vec<i64> = (0..n).map(|i| c[i] - c[j] * a[j][i]).collect();
                if seen.insert(d.clone()) {
                    if seen.len() as u64 > guard.max_order {
                        return Some(Err(Error::GroupTooLarge(format!(
                            "orbit of {} exceeds {} points",
                            self.kind(),
                            guard.max_order
                        ))));
                    }
                    queue.push_back(d);
                }
            }
        }
        Some(Ok(None))
    }

    /// All elements as matrices with their lengths, in order of length.
    pub fn elements(&self, guard: GroupGuard) -> Result<Vec<CoxeterElement>> {
        self.check_order(guard)?;
        let n = self.ambient_dim();
        let gens: Vec<Vec<Vector>> = (0..self.rank())
            .map(|i| {
                let cols: Vec<Vector> = (0..n).map(|k| self.reflect_simple(i, &Vector::unit(n, k))).collect();
                transpose(&cols)
            })
            .collect();
        let id = CoxeterElement::identity(n);
        let mut seen: HashSet<Vec<Vector>> = HashSet::new();
        seen.insert(id.matrix.clone());
        let mut all = vec![id];
        let mut start = 0;
        let mut len = 0;
        while start < all.len() {
            let end = all.len();
            len += 1;
            for k in start..end {
                for g in &gens {
                    let m: Vec<Vector> = g.iter().map(|row| linalg::vec_mat(row, &all[k].matrix)).collect();
                    if seen.insert(m.clone()) {
                        all.push(CoxeterElement {
                            matrix: m,
                            length: Some(len),
                        });
                    }
                }
            }
            start = end;
        }
        Ok(all)
    }
}

fn transpose(cols: &[Vector]) -> Vec<Vector> {
    let n = cols.len();
    let m = cols.first().map_or(0, Vector::dim);
    (0..m).map(|i| Vector((0..n).map(|j| cols[j].0[i].clone()).collect())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::f_product;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_label(s).unwrap()
    }

    #[test]
    fn small_examples() {
        let g = GroupGuard::default();
        assert_eq!(rs("A1").poincare_polynomial(g).unwrap(), Polynomial::from_i64s(&[1, 1]));
        assert_eq!(rs("A2").poincare_polynomial(g).unwrap(), Polynomial::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(rs("B2").poincare_polynomial(g).unwrap(), Polynomial::from_i64s(&[1, 2, 2, 2, 1]));
    }

    #[test]
    fn solomon_for_all_small_types() {
        let g = GroupGuard::default();
        for s in ["A4", "B4", "C3", "D4", "D5", "F4", "H3", "H4", "I2(5)", "I2(6)", "E6"] {
            let r = rs(s);
            let w = r.poincare_polynomial(g).unwrap();
            assert!(w.is_palindromic(), "{s}");
            assert_eq!(w.degree(), Some(r.positive_roots().len()), "{s}");
            assert_eq!(w, f_product(&r.exponents()), "{s}");
        }
    }

    #[test]
    fn e8_is_refused() {
        assert!(matches!(
            rs("E8").poincare_polynomial(GroupGuard::default()),
            Err(Error::GroupTooLarge(_))
        ));
    }

    #[test]
    fn length_is_inversion_count() {
        for (s, order) in [("A3", 24), ("B3", 48)] {
            let r = rs(s);
            let els = r.elements(GroupGuard::default()).unwrap();
            assert_eq!(els.len(), order);
            for w in &els {
                assert_eq!(w.length, Some(w.inversions(&r)));
                assert!(w.preserves_form(&r));
                assert!(w.permutes_roots(&r));
            }
        }
    }

    #[test]
    fn golden_group_elements() {
        let r = rs("I2(5)");
        let els = r.elements(GroupGuard::default()).unwrap();
        assert_eq!(els.len(), 10);
        assert!(els.iter().all(|w| w.preserves_form(&r)));
    }
}
