//! Region enumeration by hyperplane insertion.
//!
//! The regions of `H_1..H_k` cut by `H_{k+1}` correspond to the chambers of
//! `H_1..H_k` restricted to `H_{k+1}`, so a generic point `y` of `H_{k+1}`
//! from the recursion locates a cut region and `2^j y ± n` witness its two
//! halves. Regions that are not cut keep their witness. Everything is done
//! with ring operations and positive rescaling, so the same code runs over
//! checked `i128` and over exact scalars.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{canonicalize_normal, Scalar, Vector};

pub(super) trait Num: Clone + Eq + Hash + Send + Sync + Sized {
    fn zero() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn sign(&self) -> i8;
    /// Divides by a positive common factor to keep entries short.
    fn reduce(v: Vec<Self>) -> Vec<Self>;

    /// The representative of the line through `v` used for deduplication.
    fn canonical(v: Vec<Self>) -> Option<Vec<Self>> {
        let v = Self::reduce(v);
        let lead = v.iter().map(Num::sign).find(|&s| s != 0).expect("distinct hyperplanes restrict to hyperplanes");
        if lead < 0 {
            v.iter().map(Num::neg).collect()
        } else {
            Some(v)
        }
    }

    fn abs(&self) -> Option<Self> {
        if self.sign() < 0 {
            self.neg()
        } else {
            Some(self.clone())
        }
    }
}

impl Num for i128 {
    fn zero() -> Self {
        0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn sign(&self) -> i8 {
        self.signum() as i8
    }
    fn reduce(v: Vec<Self>) -> Vec<Self> {
        let g = v.iter().fold(0i128, |g, x| g.gcd(x));
        if g > 1 {
            v.into_iter().map(|x| x / g).collect()
        } else {
            v
        }
    }
}

impl Num for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn sign(&self) -> i8 {
        Scalar::sign(self)
    }
    fn reduce(v: Vec<Self>) -> Vec<Self> {
        Vector(v).clear_denominators().0
    }
    fn canonical(v: Vec<Self>) -> Option<Vec<Self>> {
        Some(canonicalize_normal(&Vector(v)).expect("distinct hyperplanes restrict to hyperplanes").0)
    }
}

fn dot<T: Num>(a: &[T], b: &[T]) -> Option<T> {
    a.iter().zip(b).try_fold(T::zero(), |s, (x, y)| s.add(&x.mul(y)?))
}

fn double<T: Num>(v: &[T], times: u32) -> Option<Vec<T>> {
    let mut v = v.to_vec();
    for _ in 0..times {
        v = v.iter().map(|x| x.add(x)).collect::<Option<_>>()?;
    }
    Some(v)
}

pub(super) type Region<T> = (Vec<i8>, Vec<T>);

/// Regions of the distinct lines `normals` in `dim` coordinates, or
/// `Ok(None)` if an `i128` overflowed.
pub(super) fn insert_all<T: Num>(dim: usize, normals: &[Vec<T>], limit: usize) -> Result<Option<Vec<Region<T>>>> {
    let mut regions: Vec<Region<T>> = vec![(Vec::new(), vec![T::zero(); dim])];
    for (k, n) in normals.iter().enumerate() {
        let prior = &normals[..k];
        let Some(restricted) = restrict_to(n, prior) else {
            return Ok(None);
        };
        let inside = if restricted.is_empty() {
            vec![(Vec::new(), vec![T::zero(); dim - 1])]
        } else {
            match insert_all(dim - 1, &restricted, limit)? {
                Some(r) => r,
                None => return Ok(None),
            }
        };
        let cut: Option<HashMap<Vec<i8>, Vec<T>>> = inside
            .into_par_iter()
            .map(|(_, y)| {
                let y = lift(n, &y)?;
                let s = prior.iter().map(|p| Some(dot(p, &y)?.sign())).collect::<Option<Vec<i8>>>()?;
                debug_assert!(!s.contains(&0));
                Some((s, y))
            })
            .collect();
        let Some(cut) = cut else {
            return Ok(None);
        };
        let next: Option<Vec<Vec<Region<T>>>> = regions
            .into_par_iter()
            .map(|(signs, w)| {
                let with = |s: i8| {
                    let mut v = signs.clone();
                    v.push(s);
                    v
                };
                match cut.get(&signs) {
                    Some(y) => {
                        let j = step(prior, y, n)?;
                        let y = double(y, j)?;
                        let up = y.iter().zip(n).map(|(a, b)| a.add(b)).collect::<Option<Vec<T>>>()?;
                        let down = y
                            .iter()
                            .zip(n)
                            .map(|(a, b)| a.add(&b.neg()?))
                            .collect::<Option<Vec<T>>>()?;
                        Some(vec![(with(1), T::reduce(up)), (with(-1), T::reduce(down))])
                    }
                    None => {
                        let s = dot(n, &w)?.sign();
                        debug_assert_ne!(s, 0);
                        Some(vec![(with(s), w)])
                    }
                }
            })
            .collect();
        let Some(next) = next else {
            return Ok(None);
        };
        regions = next.into_iter().flatten().collect();
        if regions.len() > limit {
            return Err(Error::TooManyChambers(format!(
                "more than {limit} regions after {} of {} hyperplanes",
                k + 1,
                normals.len()
            )));
        }
    }
    Ok(Some(regions))
}

/// Distinct canonical normals of `prior` restricted to `n^⊥`, in the
/// coordinates left after dropping the first nonzero entry `p` of `n`.
fn restrict_to<T: Num>(n: &[T], prior: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let p = n.iter().position(|x| x.sign() != 0).expect("normals are nonzero");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in prior {
        // n_p v - v_p n vanishes at coordinate p.
        let mut r = Vec::with_capacity(n.len() - 1);
        for j in (0..n.len()).filter(|&j| j != p) {
            r.push(n[p].mul(&v[j])?.add(&v[p].mul(&n[j])?.neg()?)?);
        }
        let r = T::canonical(r)?;
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    Some(out)
}

/// A positive multiple of the point of `n^⊥` with coordinates `y` off `p`.
fn lift<T: Num>(n: &[T], y: &[T]) -> Option<Vec<T>> {
    let p = n.iter().position(|x| x.sign() != 0).expect("normals are nonzero");
    let np = n[p].abs()?;
    let mut t = T::zero();
    let mut x = Vec::with_capacity(n.len());
    for (j, yj) in (0..n.len()).filter(|&j| j != p).zip(y) {
        t = t.add(&n[j].mul(yj)?)?;
        x.push(np.mul(yj)?);
    }
    // x_p = -sign(n_p) Σ n_j y_j, so that <n, x> = 0.
    x.insert(p, if n[p].sign() > 0 { t.neg()? } else { t });
    Some(T::reduce(x))
}

/// The least `j` with `2^j |<n_i, y>| > |<n_i, n>|` for all `i`.
fn step<T: Num>(prior: &[Vec<T>], y: &[T], n: &[T]) -> Option<u32> {
    let mut j = 0;
    for ni in prior {
        let b = dot(ni, n)?.abs()?;
        let mut a = dot(ni, y)?.abs()?;
        for _ in 0..j {
            a = a.add(&a)?;
        }
        while b.add(&a.neg()?)?.sign() >= 0 {
            a = a.add(&a)?;
            j += 1;
        }
    }
    Some(j)
}

/// Integer copies of rational normals, scaled to be primitive.
pub(super) fn integral(normals: &[Vector]) -> Option<Vec<Vec<i128>>> {
    normals
        .iter()
        .map(|v| v.clear_denominators().0.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect()
}

pub(super) fn from_integral(v: &[i128]) -> Vector {
    Vector(v.iter().map(|&x| Scalar::from_bigint(x.into())).collect())
}
