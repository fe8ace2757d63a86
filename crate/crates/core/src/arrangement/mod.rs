//! Central hyperplane arrangements over Q or Q(√5).
//!
//! An [`Arrangement`] stores canonical normals, deduplicated and sorted, so
//! the same set of hyperplanes always produces the same hyperplane order.
//! Every sign vector in the crate is indexed by that order.

mod io;
mod iso;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::Rref;
use crate::poly::Polynomial;
use crate::scalar::{canonicalize_normal, Field, Scalar, Vector};

pub use iso::{find_isomorphism, Isomorphism};

/// A central arrangement of hyperplanes `{x : <n, x> = 0}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    dim: usize,
    field: Field,
    normals: Vec<Vector>,
}

/// An element of the intersection lattice.
///
/// The subspace is stored through the reduced row-echelon basis of the span
/// of the normals containing it, which makes equality and hashing exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    rref: Rref,
    hyperplanes: Vec<usize>,
}

impl Flat {
    pub fn rank(&self) -> usize {
        self.rref.rank()
    }

    pub fn dim(&self) -> usize {
        self.rref.ncols - self.rref.rank()
    }

    /// Indices of the hyperplanes containing this flat, ascending.
    pub fn hyperplanes(&self) -> &[usize] {
        &self.hyperplanes
    }

    pub fn complement(&self) -> &Rref {
        &self.rref
    }

    /// Basis of the subspace itself. Coordinates of a point of the flat with
    /// respect to this basis are its entries at [`Flat::free_columns`].
    pub fn basis(&self) -> Vec<Vector> {
        self.rref.nullspace()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        self.rref.free_columns()
    }

    pub fn contains_point(&self, x: &Vector) -> bool {
        self.rref.rows.iter().all(|r| r.dot(x).is_zero())
    }

    /// Coordinates of a point of the flat in the basis of [`Flat::basis`].
    pub fn coordinates(&self, x: &Vector) -> Option<Vector> {
        self.contains_point(x)
            .then(|| Vector(self.free_columns().into_iter().map(|c| x.0[c].clone()).collect()))
    }
}

/// The intersection lattice with Möbius values `μ(V, X)`.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Flat>,
    by_rank: Vec<Vec<usize>>,
    mobius: Vec<i64>,
}

impl FlatLattice {
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Indices into [`FlatLattice::flats`] of the flats of rank `r`.
    pub fn rank_level(&self, r: usize) -> &[usize] {
        self.by_rank.get(r).map_or(&[], Vec::as_slice)
    }

    pub fn mobius(&self, i: usize) -> i64 {
        self.mobius[i]
    }

    pub fn max_rank(&self) -> usize {
        self.by_rank.len() - 1
    }
}

/// Size limits for lattice construction.
#[derive(Clone, Copy, Debug)]
pub struct LatticeGuard {
    pub max_rank: usize,
    pub max_hyperplanes: usize,
}

impl Default for LatticeGuard {
    fn default() -> Self {
        LatticeGuard {
            max_rank: 6,
            max_hyperplanes: 70,
        }
    }
}

/// Exponents of a free arrangement, read off the characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponents {
    /// Nonzero exponents, ascending.
    pub values: Vec<u32>,
    /// Dimension of the center, reported separately from `values`.
    pub nonessential: usize,
}

impl Exponents {
    pub fn sum(&self) -> u64 {
        self.values.iter().map(|&e| e as u64).sum()
    }

    /// `∏ (e_i + 1)`.
    pub fn chamber_count(&self) -> BigInt {
        self.values.iter().map(|&e| BigInt::from(e) + 1).product()
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The essential part of an arrangement: normals restricted to the pivot
/// columns of their row space, which is a complement of the center.
#[derive(Clone, Debug)]
pub struct Essential {
    pub ambient_dim: usize,
    pub pivots: Vec<usize>,
    pub normals: Vec<Vector>,
}

impl Essential {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Embeds a point of the essential space into the ambient space, with
    /// zeros off the pivot columns. Signs of all normals are preserved.
    pub fn lift(&self, y: &Vector) -> Vector {
        let mut x = Vector::zeros(self.ambient_dim);
        for (v, &p) in y.0.iter().zip(&self.pivots) {
            x.0[p] = v.clone();
        }
        x
    }

    pub fn project(&self, x: &Vector) -> Vector {
        Vector(self.pivots.iter().map(|&p| x.0[p].clone()).collect())
    }
}

impl Arrangement {
    /// Canonicalizes, deduplicates and sorts the given normals.
    pub fn from_normals<I>(dim: usize, field: Field, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut normals = Vec::new();
        for v in vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
            if !v.0.iter().all(|x| field.contains(x)) {
                return Err(Error::MixedField);
            }
            normals.push(canonicalize_normal(&v)?);
        }
        normals.sort();
        normals.dedup();
        Ok(Arrangement { dim, field, normals })
    }

    /// The empty arrangement in dimension `dim`.
    pub fn empty(dim: usize, field: Field) -> Self {
        Arrangement {
            dim,
            field,
            normals: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn normals(&self) -> &[Vector] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn index_of(&self, normal: &Vector) -> Option<usize> {
        let c = canonicalize_normal(normal).ok()?;
        self.normals.binary_search(&c).ok()
    }

    /// Rank of the arrangement: codimension of its center.
    pub fn rank(&self) -> usize {
        Rref::new(self.dim, &self.normals).rank()
    }

    pub fn essential(&self) -> Essential {
        let rref = Rref::new(self.dim, &self.normals);
        let normals = self
            .normals
            .iter()
            .map(|n| Vector(rref.pivots.iter().map(|&p| n.0[p].clone()).collect()))
            .collect();
        Essential {
            ambient_dim: self.dim,
            pivots: rref.pivots,
            normals,
        }
    }

    /// The essentialized arrangement, living in dimension `rank()`.
    pub fn essentialize(&self) -> Arrangement {
        let ess = self.essential();
        Arrangement::from_normals(ess.rank(), self.field, ess.normals)
            .expect("essential normals are nonzero")
    }

    /// Signs of all normals at `x`.
    pub fn signs_at(&self, x: &Vector) -> Vec<i8> {
        self.normals.iter().map(|n| n.dot(x).sign()).collect()
    }

    fn flat_from_rref(&self, rref: Rref) -> Flat {
        let hyperplanes = (0..self.len())
            .filter(|&i| rref.contains(&self.normals[i]))
            .collect();
        Flat { rref, hyperplanes }
    }

    /// The intersection of the given hyperplanes.
    pub fn flat_of(&self, indices: &[usize]) -> Flat {
        let rows: Vec<Vector> = indices.iter().map(|&i| self.normals[i].clone()).collect();
        self.flat_from_rref(Rref::new(self.dim, &rows))
    }

    /// The whole space.
    pub fn top(&self) -> Flat {
        self.flat_of(&[])
    }

    /// The center `T(A)`.
    pub fn center(&self) -> Flat {
        self.flat_of(&(0..self.len()).collect::<Vec<_>>())
    }

    /// The subspace cut out by `equations`, provided it is a member of the
    /// lattice.
    pub fn flat_from_equations(&self, equations: &[Vector]) -> Result<Flat> {
        for e in equations {
            if e.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: e.dim(),
                });
            }
        }
        let flat = self.flat_from_rref(Rref::new(self.dim, equations));
        self.check_flat(&flat)?;
        Ok(flat)
    }

    /// Checks that `flat` is the intersection of exactly its hyperplanes.
    pub fn check_flat(&self, flat: &Flat) -> Result<()> {
        if flat.rref.ncols != self.dim {
            return Err(Error::FlatNotInLattice);
        }
        let rows: Vec<Vector> = flat
            .hyperplanes
            .iter()
            .map(|&i| self.normals.get(i).cloned().ok_or(Error::FlatNotInLattice))
            .collect::<Result<_>>()?;
        if Rref::new(self.dim, &rows) != flat.rref {
            return Err(Error::FlatNotInLattice);
        }
        let expected: Vec<usize> = (0..self.len())
            .filter(|&i| flat.rref.contains(&self.normals[i]))
            .collect();
        if expected != flat.hyperplanes {
            return Err(Error::FlatNotInLattice);
        }
        Ok(())
    }

    /// `A_X`: the hyperplanes containing `X`, in the same ambient space.
    pub fn localize(&self, flat: &Flat) -> Result<Arrangement> {
        self.check_flat(flat)?;
        Ok(Arrangement {
            dim: self.dim,
            field: self.field,
            normals: flat.hyperplanes.iter().map(|&i| self.normals[i].clone()).collect(),
        })
    }

    /// `A^X`: the hyperplanes `X ∩ H` for `H` not containing `X`, written in
    /// the coordinates of [`Flat::basis`].
    pub fn restrict(&self, flat: &Flat) -> Result<Arrangement> {
        self.check_flat(flat)?;
        let basis = flat.basis();
        let restricted = (0..self.len())
            .filter(|i| flat.hyperplanes.binary_search(i).is_err())
            .map(|i| Vector(basis.iter().map(|b| self.normals[i].dot(b)).collect()));
        Arrangement::from_normals(basis.len(), self.field, restricted)
    }

    /// All flats, built level by level from the hyperplanes.
    pub fn intersection_lattice(&self, guard: LatticeGuard) -> Result<FlatLattice> {
        if self.len() > guard.max_hyperplanes {
            return Err(Error::LatticeTooLarge(format!(
                "{} hyperplanes exceeds limit {}",
                self.len(),
                guard.max_hyperplanes
            )));
        }
        let rank = self.rank();
        if rank > guard.max_rank {
            return Err(Error::LatticeTooLarge(format!(
                "rank {rank} exceeds limit {}",
                guard.max_rank
            )));
        }
        let mut flats = vec![self.top()];
        let mut by_rank = vec![vec![0]];
        for r in 0..rank {
            // The covers of x: x ∨ h for h not on x, where h and h' give the
            // same cover whenever h' lies on x ∨ h.
            let covers: Vec<Vec<Flat>> = by_rank[r]
                .par_iter()
                .map(|&xi| {
                    let x = &flats[xi];
                    let mut done = vec![false; self.len()];
                    for &h in &x.hyperplanes {
                        done[h] = true;
                    }
                    let mut out = Vec::new();
                    for h in 0..self.len() {
                        if done[h] {
                            continue;
                        }
                        let mut rref = x.rref.clone();
                        rref.insert(&self.normals[h]);
                        let hyperplanes: Vec<usize> = (0..self.len())
                            .filter(|&i| {
                                x.hyperplanes.binary_search(&i).is_ok() || i == h || rref.contains(&self.normals[i])
                            })
                            .collect();
                        for &i in &hyperplanes {
                            done[i] = true;
                        }
                        out.push(Flat { rref, hyperplanes });
                    }
                    out
                })
                .collect();
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let mut level = Vec::new();
            for f in covers.into_iter().flatten() {
                if seen.insert(f.hyperplanes.clone()) {
                    level.push(flats.len());
                    flats.push(f);
                }
            }
            by_rank.push(level);
        }
        let words = self.len().div_ceil(64).max(1);
        let masks: Vec<Vec<u64>> = flats
            .iter()
            .map(|f| {
                let mut m = vec![0u64; words];
                for &h in &f.hyperplanes {
                    m[h / 64] |= 1 << (h % 64);
                }
                m
            })
            .collect();
        let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
        let mut mobius = vec![0i64; flats.len()];
        mobius[0] = 1;
        for r in 1..by_rank.len() {
            let values: Vec<i64> = by_rank[r]
                .par_iter()
                .map(|&xi| {
                    let s: i64 = by_rank[..r]
                        .iter()
                        .flatten()
                        .filter(|&&yi| subset(&masks[yi], &masks[xi]))
                        .map(|&yi| mobius[yi])
                        .sum();
                    -s
                })
                .collect();
            for (&xi, v) in by_rank[r].iter().zip(values) {
                mobius[xi] = v;
            }
        }
        Ok(FlatLattice {
            flats,
            by_rank,
            mobius,
        })
    }

    /// `χ(A, t) = Σ_X μ(V, X) t^{dim X}`.
    pub fn characteristic_polynomial(&self, guard: LatticeGuard) -> Result<Polynomial> {
        let lattice = self.intersection_lattice(guard)?;
        let mut coeffs = vec![BigInt::from(0); self.dim + 1];
        for (i, flat) in lattice.flats.iter().enumerate() {
            coeffs[flat.dim()] += lattice.mobius[i];
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Integer roots of `χ(A, t)` with multiplicity. Zero roots are counted
    /// in `nonessential`, not in `values`.
    pub fn exponents(&self, guard: LatticeGuard) -> Result<Exponents> {
        let chi = self.characteristic_polynomial(guard)?;
        exponents_of_characteristic(&chi, self.len())
    }
}

/// Splits `chi` into linear factors `(t - e)` with `0 ≤ e ≤ max_root`.
pub fn exponents_of_characteristic(chi: &Polynomial, max_root: usize) -> Result<Exponents> {
    let mut rest = chi.clone();
    let mut values = Vec::new();
    let mut nonessential = 0;
    while let Some(q) = rest.divide_by_root(&BigInt::from(0)) {
        nonessential += 1;
        rest = q;
    }
    for e in 1..=max_root {
        while let Some(q) = rest.divide_by_root(&BigInt::from(e)) {
            values.push(e as u32);
            rest = q;
        }
        if rest.degree() == Some(0) {
            break;
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::NotIntegerSplit(chi.to_string()));
    }
    Ok(Exponents {
        values,
        nonessential,
    })
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Arrangement")
            .field("dim", &self.dim)
            .field("field", &self.field)
            .field("normals", &self.normals)
            .finish()
    }
}

/// Convenience: a point whose coordinates are small integers.
pub fn int_point(xs: &[i64]) -> Vector {
    Vector(xs.iter().map(|&x| Scalar::from_int(x)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(dim: usize, rows: &[&[i64]]) -> Arrangement {
        Arrangement::from_normals(dim, Field::Rational, rows.iter().map(|r| Vector::from_ints(r))).unwrap()
    }

    fn a2_ambient() -> Arrangement {
        arr(3, &[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]])
    }

    fn boolean(n: usize) -> Arrangement {
        Arrangement::from_normals(n, Field::Rational, (0..n).map(|i| Vector::unit(n, i))).unwrap()
    }

    #[test]
    fn from_normals_dedups() {
        let a = arr(2, &[&[1, 0], &[2, 0], &[0, 1]]);
        assert_eq!(a.len(), 2);
        let e = Arrangement::from_normals(3, Field::Rational, Vec::new()).unwrap();
        assert_eq!(e.len(), 0);
        assert_eq!(a2_ambient().len(), 3);
        assert!(matches!(
            Arrangement::from_normals(2, Field::Rational, [Vector::zeros(2)]),
            Err(Error::ZeroVector)
        ));
        assert!(matches!(
            Arrangement::from_normals(2, Field::Rational, [Vector(vec![Scalar::sqrt5(), Scalar::one()])]),
            Err(Error::MixedField)
        ));
        assert!(matches!(
            Arrangement::from_normals(2, Field::Rational, [Vector::from_ints(&[1, 0, 0])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn localize_examples() {
        let a = a2_ambient();
        assert_eq!(a.localize(&a.top()).unwrap().len(), 0);
        assert_eq!(a.localize(&a.center()).unwrap(), a);
        let a3 = arr(
            4,
            &[&[1, -1, 0, 0], &[1, 0, -1, 0], &[1, 0, 0, -1], &[0, 1, -1, 0], &[0, 1, 0, -1], &[0, 0, 1, -1]],
        );
        let x = a3
            .flat_from_equations(&[Vector::from_ints(&[1, -1, 0, 0]), Vector::from_ints(&[0, 1, -1, 0])])
            .unwrap();
        assert_eq!(a3.localize(&x).unwrap().len(), 3);
        // not a member: x1 = 0 is not an intersection of A3 hyperplanes
        assert!(matches!(
            a3.flat_from_equations(&[Vector::from_ints(&[1, 0, 0, 0])]),
            Err(Error::FlatNotInLattice)
        ));
    }

    #[test]
    fn restrict_boolean() {
        let b = boolean(3);
        let x = b.flat_of(&[0]);
        let r = b.restrict(&x).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn lattice_examples() {
        let g = LatticeGuard::default();
        assert_eq!(boolean(2).intersection_lattice(g).unwrap().len(), 4);
        assert_eq!(a2_ambient().essentialize().intersection_lattice(g).unwrap().len(), 5);
        assert_eq!(Arrangement::empty(3, Field::Rational).intersection_lattice(g).unwrap().len(), 1);
    }

    #[test]
    fn characteristic_examples() {
        let g = LatticeGuard::default();
        for n in 1..=4 {
            let expected = (0..n).fold(Polynomial::one(), |acc, _| &acc * &Polynomial::from_i64s(&[-1, 1]));
            assert_eq!(boolean(n).characteristic_polynomial(g).unwrap(), expected);
        }
        assert_eq!(
            a2_ambient().essentialize().characteristic_polynomial(g).unwrap(),
            Polynomial::from_i64s(&[2, -3, 1])
        );
        assert_eq!(
            Arrangement::empty(3, Field::Rational).characteristic_polynomial(g).unwrap(),
            Polynomial::monomial(3)
        );
    }

    #[test]
    fn exponents_examples() {
        let g = LatticeGuard::default();
        let b2 = arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        assert_eq!(b2.exponents(g).unwrap().values, vec![1, 3]);
        let e = Arrangement::empty(3, Field::Rational).exponents(g).unwrap();
        assert!(e.values.is_empty());
        assert_eq!(e.nonessential, 3);
        let a2 = a2_ambient().exponents(g).unwrap();
        assert_eq!(a2.values, vec![1, 2]);
        assert_eq!(a2.nonessential, 1);
    }

    #[test]
    fn not_integer_split() {
        // four generic lines through the origin in the plane: χ = t² - 4t + 3 = (t-1)(t-3) splits,
        // but five generic planes in 3-space do not.
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]]);
        assert!(matches!(a.exponents(LatticeGuard::default()), Err(Error::NotIntegerSplit(_))));
    }

    #[test]
    fn lattice_guard() {
        let g = LatticeGuard {
            max_rank: 2,
            max_hyperplanes: 70,
        };
        assert!(matches!(boolean(3).intersection_lattice(g), Err(Error::LatticeTooLarge(_))));
    }
}
