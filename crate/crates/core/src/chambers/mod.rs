//! Regions of a central arrangement and the rank-generating function of the
//! poset of regions.
//!
//! Regions are found by incremental insertion, with the regions cut by each
//! new hyperplane read off from the chambers of a restriction, one rank
//! down. Every region keeps an exact interior witness. The LP oracle in
//! [`lp`] is independent of this and decides walls.

mod insert;
mod lp;
mod signs;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{Scalar, Vector};

pub use lp::feasible_interior_point;
pub use signs::SignVector;

/// A region with an interior witness point in the ambient coordinates of
/// its arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub signs: SignVector,
    pub witness: Vector,
}

/// Size limits for enumeration.
#[derive(Clone, Copy, Debug)]
pub struct ChamberGuard {
    pub max_hyperplanes: usize,
    pub max_chambers: usize,
}

impl Default for ChamberGuard {
    fn default() -> Self {
        ChamberGuard {
            max_hyperplanes: 130,
            max_chambers: 5_000_000,
        }
    }
}

/// All regions of an arrangement, sorted by sign vector (`+` before `-`).
#[derive(Clone, Debug)]
pub struct ChamberSet {
    hyperplanes: usize,
    chambers: Vec<Chamber>,
    index: HashMap<SignVector, usize>,
    /// Sign bits of every chamber, `words` u64s each, for Hamming ranks.
    packed: Vec<u64>,
    words: usize,
}

impl ChamberSet {
    fn from_chambers(hyperplanes: usize, mut chambers: Vec<Chamber>) -> Self {
        chambers.sort_by(|a, b| a.signs.cmp(&b.signs));
        let index = chambers
            .iter()
            .enumerate()
            .map(|(i, c)| (c.signs.clone(), i))
            .collect();
        let words = hyperplanes.div_ceil(64).max(1);
        let mut packed = Vec::with_capacity(words * chambers.len());
        for c in &chambers {
            let w = c.signs.words();
            packed.extend_from_slice(w);
            packed.extend(std::iter::repeat_n(0, words - w.len()));
        }
        ChamberSet {
            hyperplanes,
            chambers,
            index,
            packed,
            words,
        }
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn hyperplanes(&self) -> usize {
        self.hyperplanes
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn get(&self, i: usize) -> &Chamber {
        &self.chambers[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Chamber> {
        self.chambers.iter()
    }

    pub fn position(&self, signs: &SignVector) -> Option<usize> {
        self.index.get(signs).copied()
    }

    /// The chamber containing `x`, if `x` lies off every hyperplane.
    pub fn locate(&self, arrangement: &Arrangement, x: &Vector) -> Option<usize> {
        let s = arrangement.signs_at(x);
        if s.contains(&0) {
            return None;
        }
        self.position(&SignVector::from_signs(&s))
    }

    /// Index of `-R`.
    pub fn antipode(&self, i: usize) -> Option<usize> {
        self.position(&self.chambers[i].signs.negate())
    }

    fn packed(&self, i: usize) -> &[u64] {
        &self.packed[i * self.words..(i + 1) * self.words]
    }

    /// `|S(B, R)|` for every chamber `R`, indexed like the set.
    pub fn ranks(&self, base: usize) -> Vec<u32> {
        let b = self.packed(base);
        (0..self.len())
            .map(|i| {
                self.packed(i)
                    .iter()
                    .zip(b)
                    .map(|(x, y)| (x ^ y).count_ones())
                    .sum()
            })
            .collect()
    }

    /// `ζ(P(A, B), t)` for the chamber with index `base`.
    pub fn zeta(&self, base: usize) -> Polynomial {
        let mut counts = vec![0u64; self.hyperplanes + 1];
        let b = self.packed(base);
        for i in 0..self.len() {
            let d: u32 = self
                .packed(i)
                .iter()
                .zip(b)
                .map(|(x, y)| (x ^ y).count_ones())
                .sum();
            counts[d as usize] += 1;
        }
        Polynomial::from_counts(&counts)
    }

    /// `ζ` for the given base region.
    pub fn zeta_of(&self, base: &Chamber) -> Result<Polynomial> {
        let i = self.position(&base.signs).ok_or(Error::BaseNotAChamber)?;
        Ok(self.zeta(i))
    }

    /// Distinct `ζ` over the given bases with multiplicities.
    pub fn zeta_census(&self, bases: &[usize]) -> BTreeMap<Polynomial, usize> {
        let zetas: Vec<Polynomial> = bases.par_iter().map(|&b| self.zeta(b)).collect();
        let mut census = BTreeMap::new();
        for z in zetas {
            *census.entry(z).or_insert(0) += 1;
        }
        census
    }

    /// Walls of chamber `i` found by lookup: flipping one sign lands on
    /// another chamber exactly when that hyperplane is a wall.
    pub fn adjacent(&self, i: usize) -> Vec<(usize, usize)> {
        let s = &self.chambers[i].signs;
        (0..self.hyperplanes)
            .filter_map(|h| self.position(&s.flip(h)).map(|j| (h, j)))
            .collect()
    }

    /// One line per chamber: sign string, then witness coordinates.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for c in &self.chambers {
            out.push_str(&c.signs.to_string());
            for x in &c.witness.0 {
                out.push(' ');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Enumerates all regions of `arrangement`.
pub fn enumerate_chambers(arrangement: &Arrangement, guard: ChamberGuard) -> Result<ChamberSet> {
    let m = arrangement.len();
    if m > guard.max_hyperplanes {
        return Err(Error::TooManyChambers(format!(
            "{m} hyperplanes exceeds limit {}",
            guard.max_hyperplanes
        )));
    }
    let ess = arrangement.essential();
    let (r, limit) = (ess.rank(), guard.max_chambers);
    let fast = match insert::integral(&ess.normals) {
        Some(ints) => insert::insert_all(r, &ints, limit)?,
        None => None,
    };
    let regions: Vec<(Vec<i8>, Vector)> = match fast {
        Some(regions) => regions.into_iter().map(|(s, w)| (s, insert::from_integral(&w))).collect(),
        None => {
            let normals: Vec<Vec<Scalar>> = ess.normals.iter().map(|v| v.0.clone()).collect();
            let regions = insert::insert_all(r, &normals, limit)?.expect("exact arithmetic does not overflow");
            regions.into_iter().map(|(s, w)| (s, Vector(w))).collect()
        }
    };
    let chambers = regions
        .into_iter()
        .map(|(s, w)| Chamber {
            signs: SignVector::from_signs(&s),
            witness: ess.lift(&w),
        })
        .collect();
    Ok(ChamberSet::from_chambers(m, chambers))
}

/// Indices of the hyperplanes separating `r1` and `r2`.
pub fn separating_set(r1: &Chamber, r2: &Chamber) -> Vec<usize> {
    r1.signs.difference(&r2.signs)
}

/// Walls of `chamber`: hyperplanes whose sign can be flipped alone while
/// staying realizable. Decided with the feasibility oracle.
pub fn walls(arrangement: &Arrangement, chamber: &Chamber) -> Vec<usize> {
    let ess = arrangement.essential();
    let signs: Vec<i8> = (0..arrangement.len()).map(|i| chamber.signs.get(i)).collect();
    (0..arrangement.len())
        .into_par_iter()
        .filter(|&h| {
            let mut s = signs.clone();
            s[h] = -s[h];
            feasible_interior_point(ess.rank(), &ess.normals, &s).is_some()
        })
        .collect()
}

/// `ζ(P(A, B), t)` computed from scratch.
pub fn zeta(arrangement: &Arrangement, base: &Chamber) -> Result<Polynomial> {
    enumerate_chambers(arrangement, ChamberGuard::default())?.zeta_of(base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn arr(dim: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_normals(dim, Field::Rational, rows.iter().map(|r| Vector::from_ints(r))).unwrap()
    }

    fn a2() -> Arrangement {
        arr(3, &[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]])
    }

    #[test]
    fn counts() {
        let g = ChamberGuard::default();
        assert_eq!(enumerate_chambers(&Arrangement::empty(3, Field::Rational), g).unwrap().len(), 1);
        assert_eq!(enumerate_chambers(&arr(2, &[&[1, 1]]), g).unwrap().len(), 2);
        assert_eq!(enumerate_chambers(&a2(), g).unwrap().len(), 6);
    }

    #[test]
    fn witnesses_are_interior() {
        let a = a2();
        let set = enumerate_chambers(&a, ChamberGuard::default()).unwrap();
        for c in set.iter() {
            let s = a.signs_at(&c.witness);
            assert_eq!(SignVector::from_signs(&s), c.signs);
        }
    }

    #[test]
    fn golden_arrangements() {
        use crate::roots::RootSystem;
        for (w, n) in [("I2(5)", 10), ("H3", 120)] {
            let a = RootSystem::from_label(w).unwrap().coxeter_arrangement();
            let set = enumerate_chambers(&a, ChamberGuard::default()).unwrap();
            assert_eq!(set.len(), n, "{w}");
            let ess = a.essential();
            for c in set.iter() {
                assert_eq!(SignVector::from_signs(&a.signs_at(&c.witness)), c.signs);
                let s: Vec<i8> = (0..a.len()).map(|i| c.signs.get(i)).collect();
                assert!(feasible_interior_point(ess.rank(), &ess.normals, &s).is_some());
            }
        }
    }

    #[test]
    fn zeta_examples() {
        let g = ChamberGuard::default();
        let empty = enumerate_chambers(&Arrangement::empty(2, Field::Rational), g).unwrap();
        assert_eq!(empty.zeta(0), Polynomial::one());
        let one = enumerate_chambers(&arr(2, &[&[1, 0]]), g).unwrap();
        assert_eq!(one.zeta(0), Polynomial::from_i64s(&[1, 1]));
        assert_eq!(one.zeta(1), Polynomial::from_i64s(&[1, 1]));
        let set = enumerate_chambers(&a2(), g).unwrap();
        for b in 0..set.len() {
            assert_eq!(set.zeta(b), Polynomial::from_i64s(&[1, 2, 2, 1]));
        }
    }

    #[test]
    fn separating_examples() {
        let set = enumerate_chambers(&a2(), ChamberGuard::default()).unwrap();
        let r = set.get(0);
        assert!(separating_set(r, r).is_empty());
        let anti = set.get(set.antipode(0).unwrap());
        assert_eq!(separating_set(r, anti), vec![0, 1, 2]);
        for (h, j) in set.adjacent(0) {
            assert_eq!(separating_set(r, set.get(j)), vec![h]);
        }
    }

    #[test]
    fn walls_examples() {
        let line = arr(2, &[&[1, 0]]);
        let set = enumerate_chambers(&line, ChamberGuard::default()).unwrap();
        for c in set.iter() {
            assert_eq!(walls(&line, c), vec![0]);
        }
        let boolean = arr(2, &[&[1, 0], &[0, 1]]);
        let set = enumerate_chambers(&boolean, ChamberGuard::default()).unwrap();
        for c in set.iter() {
            assert_eq!(walls(&boolean, c), vec![0, 1]);
        }
        let a = a2();
        let set = enumerate_chambers(&a, ChamberGuard::default()).unwrap();
        // dominant chamber: x1 > x2 > x3
        let dom = set.locate(&a, &Vector::from_ints(&[2, 1, 0])).unwrap();
        let w = walls(&a, set.get(dom));
        assert_eq!(w.len(), 2);
        let simple: Vec<usize> = [&[1, -1, 0][..], &[0, 1, -1]]
            .iter()
            .map(|n| a.index_of(&Vector::from_ints(n)).unwrap())
            .collect();
        let mut simple = simple;
        simple.sort();
        assert_eq!(w, simple);
        assert_eq!(set.adjacent(dom).iter().map(|&(h, _)| h).collect::<Vec<_>>(), simple);
    }

    #[test]
    fn base_must_be_a_chamber() {
        let set = enumerate_chambers(&a2(), ChamberGuard::default()).unwrap();
        // x1 > x2, x2 > x3, x1 < x3 is not realizable
        let bogus = Chamber {
            signs: SignVector::from_signs(&[1, 1, -1]),
            witness: Vector::zeros(3),
        };
        let bogus_signs = {
            let a = a2();
            let idx: Vec<usize> = [&[1, -1, 0][..], &[0, 1, -1], &[1, 0, -1]]
                .iter()
                .map(|n| a.index_of(&Vector::from_ints(n)).unwrap())
                .collect();
            let mut s = [0i8; 3];
            s[idx[0]] = 1;
            s[idx[1]] = 1;
            s[idx[2]] = -1;
            SignVector::from_signs(&s)
        };
        let bogus = Chamber { signs: bogus_signs, ..bogus };
        assert!(matches!(set.zeta_of(&bogus), Err(Error::BaseNotAChamber)));
    }

    #[test]
    fn guard() {
        let g = ChamberGuard {
            max_hyperplanes: 130,
            max_chambers: 4,
        };
        assert!(matches!(enumerate_chambers(&a2(), g), Err(Error::TooManyChambers(_))));
    }
}
