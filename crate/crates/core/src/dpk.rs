//! The arrangements `D_p^k` between type `D_p` (`k = 0`) and type `B_p`
//! (`k = p`): hyperplanes `x_i ± x_j` for `i < j` together with the
//! coordinate hyperplanes `x_{p-k+1}, ..., x_p`.
//!
//! Regions are encoded by signed permutations `x` of `1..p` with
//! `x_i ≠ -1` for `i ≤ p - k`; the code itself is an interior point of its
//! region. The base region is the one containing `(p, p-1, ..., 1)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::poly::{f_product, Polynomial};
use crate::scalar::{Field, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DpkParams {
    p: usize,
    k: usize,
}

impl DpkParams {
    pub fn new(p: usize, k: usize) -> Result<Self> {
        if p == 0 || k > p || p > 20 {
            return Err(Error::OutOfRange(format!("need 1 <= p <= 20 and 0 <= k <= p, got p={p}, k={k}")));
        }
        Ok(DpkParams { p, k })
    }

    pub fn p(self) -> usize {
        self.p
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// Positions `i ≤ p - k` (0-based `i < p - k`) carry no coordinate
    /// hyperplane.
    fn free_sign(self, i: usize) -> bool {
        i < self.p - self.k
    }

    /// `|M_p^k| = 2^{p-1} (p-1)! (p+k)`.
    pub fn code_count(self) -> u128 {
        let p = self.p as u128;
        (1..p).product::<u128>() * (1u128 << (p - 1)) * (p + self.k as u128)
    }

    /// `{1, 3, ..., 2p-3} ∪ {p+k-1}`.
    pub fn exponents(self) -> Vec<u32> {
        let p = self.p as u32;
        let mut e: Vec<u32> = (1..p).map(|i| 2 * i - 1).collect();
        e.push(p + self.k as u32 - 1);
        e.sort_unstable();
        e
    }

    pub fn hyperplane_count(self) -> usize {
        self.p * (self.p - 1) + self.k
    }
}

impl fmt::Display for DpkParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D:{}:{}", self.p, self.k)
    }
}

impl FromStr for DpkParams {
    type Err = Error;

    /// `D:p:k`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(s, "expected D:p:k");
        let mut it = s.trim().split(':');
        if it.next() != Some("D") {
            return Err(bad());
        }
        let p = it.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        let k = it.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        if it.next().is_some() {
            return Err(bad());
        }
        DpkParams::new(p, k)
    }
}

/// A hyperplane of `D_p^k`, 0-based indices with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DpkHyperplane {
    Minus(usize, usize),
    Plus(usize, usize),
    Coordinate(usize),
}

impl DpkHyperplane {
    fn pair(i: usize, j: usize, plus: bool) -> Self {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        if plus {
            DpkHyperplane::Plus(a, b)
        } else {
            DpkHyperplane::Minus(a, b)
        }
    }

    pub fn normal(self, p: usize) -> Vector {
        let mut v = vec![0i64; p];
        match self {
            DpkHyperplane::Minus(i, j) => {
                v[i] = 1;
                v[j] = -1;
            }
            DpkHyperplane::Plus(i, j) => {
                v[i] = 1;
                v[j] = 1;
            }
            DpkHyperplane::Coordinate(i) => v[i] = 1,
        }
        Vector::from_ints(&v)
    }

    fn value(self, x: &[i32]) -> i32 {
        match self {
            DpkHyperplane::Minus(i, j) => x[i] - x[j],
            DpkHyperplane::Plus(i, j) => x[i] + x[j],
            DpkHyperplane::Coordinate(i) => x[i],
        }
    }
}

impl fmt::Display for DpkHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DpkHyperplane::Minus(i, j) => write!(f, "x{}-x{}", i + 1, j + 1),
            DpkHyperplane::Plus(i, j) => write!(f, "x{}+x{}", i + 1, j + 1),
            DpkHyperplane::Coordinate(i) => write!(f, "x{}", i + 1),
        }
    }
}

pub fn hyperplanes(params: DpkParams) -> Vec<DpkHyperplane> {
    let p = params.p;
    let mut out = Vec::with_capacity(params.hyperplane_count());
    for i in 0..p {
        for j in i + 1..p {
            out.push(DpkHyperplane::Minus(i, j));
            out.push(DpkHyperplane::Plus(i, j));
        }
    }
    out.extend((p - params.k..p).map(DpkHyperplane::Coordinate));
    out
}

/// `D_p^k` as an arrangement in `Q^p`.
pub fn build_dpk(params: DpkParams) -> Arrangement {
    Arrangement::from_normals(
        params.p,
        Field::Rational,
        hyperplanes(params).into_iter().map(|h| h.normal(params.p)),
    )
    .expect("nonzero normals")
}

/// Element of `M_p^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionCode(pub Vec<i32>);

impl RegionCode {
    pub fn base(p: usize) -> Self {
        RegionCode((1..=p as i32).rev().collect())
    }

    pub fn validate(&self, params: DpkParams) -> Result<()> {
        let p = params.p;
        let bad = |why: &str| Err(Error::CodeInvalid(format!("{self} for {params}: {why}")));
        if self.0.len() != p {
            return bad("wrong length");
        }
        let mut seen = vec![false; p + 1];
        for (i, &x) in self.0.iter().enumerate() {
            let m = x.unsigned_abs() as usize;
            if m == 0 || m > p || seen[m] {
                return bad("not a signed permutation");
            }
            seen[m] = true;
            if x == -1 && params.free_sign(i) {
                return bad("-1 in a position without a coordinate hyperplane");
            }
        }
        Ok(())
    }

    pub fn to_vector(&self) -> Vector {
        Vector::from_ints(&self.0.iter().map(|&x| x as i64).collect::<Vec<_>>())
    }

    fn normalized(mut self, params: DpkParams) -> Self {
        for i in 0..params.p {
            if self.0[i] == -1 && params.free_sign(i) {
                self.0[i] = 1;
            }
        }
        self
    }
}

impl fmt::Display for RegionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for RegionCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        inner
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::parse(s, format!("bad entry {w:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(RegionCode)
    }
}

/// Limit on the number of codes visited.
#[derive(Clone, Copy, Debug)]
pub struct CodeGuard {
    pub max_codes: u128,
}

impl Default for CodeGuard {
    fn default() -> Self {
        CodeGuard { max_codes: 20_000_000 }
    }
}

fn check_guard(params: DpkParams, guard: CodeGuard) -> Result<()> {
    let n = params.code_count();
    if n > guard.max_codes {
        return Err(Error::TooManyCodes(format!("{params} has {n} codes, limit {}", guard.max_codes)));
    }
    Ok(())
}

/// Calls `f` on every code whose first entry is `first`, in lexicographic
/// order.
fn for_each_code_from<F: FnMut(&[i32])>(params: DpkParams, first: i32, f: &mut F) {
    fn rec<F: FnMut(&[i32])>(params: DpkParams, x: &mut Vec<i32>, used: &mut Vec<bool>, f: &mut F) {
        let i = x.len();
        if i == params.p {
            f(x);
            return;
        }
        for v in first_values(params, i) {
            let m = v.unsigned_abs() as usize;
            if used[m] {
                continue;
            }
            used[m] = true;
            x.push(v);
            rec(params, x, used, f);
            x.pop();
            used[m] = false;
        }
    }
    let mut used = vec![false; params.p + 1];
    used[first.unsigned_abs() as usize] = true;
    let mut x = vec![first];
    rec(params, &mut x, &mut used, f);
}

/// Admissible entries at position `i`, ascending.
fn first_values(params: DpkParams, i: usize) -> Vec<i32> {
    let p = params.p as i32;
    (-p..=p)
        .filter(|&v| v != 0 && !(v == -1 && params.free_sign(i)))
        .collect()
}

/// All of `M_p^k` in lexicographic order.
pub fn enumerate_codes(params: DpkParams, guard: CodeGuard) -> Result<Vec<RegionCode>> {
    check_guard(params, guard)?;
    let mut out = Vec::new();
    for first in first_values(params, 0) {
        for_each_code_from(params, first, &mut |x| out.push(RegionCode(x.to_vec())));
    }
    Ok(out)
}

fn rank_unchecked(hs: &[DpkHyperplane], base: &[i32], x: &[i32]) -> usize {
    hs.iter()
        .filter(|h| (h.value(base) > 0) != (h.value(x) > 0))
        .count()
}

/// `|S(B_p, R_x)|` by direct sign evaluation against `(p, ..., 1)`.
pub fn rank_of_code(params: DpkParams, x: &RegionCode) -> Result<usize> {
    x.validate(params)?;
    Ok(rank_unchecked(&hyperplanes(params), &RegionCode::base(params.p).0, &x.0))
}

/// Codes adjacent to `x` across a wall, with that wall.
///
/// The region of `x` is cut out by the order of the values `±x_i` (and the
/// signs of `x_i` for `i > p - k`). Its walls are the consecutive pairs of
/// that order: magnitudes `m` and `m + 1` swap keeping their signs, and for
/// `i > p - k` the entry `±1` changes sign. For `i ≤ p - k` an entry of
/// magnitude 1 may be read with either sign.
pub fn neighbors(params: DpkParams, x: &RegionCode) -> Result<Vec<(DpkHyperplane, RegionCode)>> {
    x.validate(params)?;
    let p = params.p;
    let mut pos = vec![0usize; p + 1];
    for (i, &v) in x.0.iter().enumerate() {
        pos[v.unsigned_abs() as usize] = i;
    }
    let mut out = Vec::new();
    let one = pos[1];
    let readings: Vec<i32> = if params.free_sign(one) { vec![1, -1] } else { vec![x.0[one]] };
    for &r in &readings {
        let mut y = x.0.clone();
        y[one] = r;
        if !params.free_sign(one) {
            let mut z = y.clone();
            z[one] = -z[one];
            out.push((DpkHyperplane::Coordinate(one), RegionCode(z)));
        }
        for m in 1..p {
            if m > 1 && r != readings[0] {
                break;
            }
            let (i, j) = (pos[m], pos[m + 1]);
            let (si, sj) = (y[i].signum(), y[j].signum());
            let mut z = y.clone();
            z[i] = si * (m as i32 + 1);
            z[j] = sj * m as i32;
            out.push((DpkHyperplane::pair(i, j, si != sj), RegionCode(z).normalized(params)));
        }
    }
    out.sort();
    Ok(out)
}

/// `ζ = Σ_{x ∈ M_p^k} t^{rk(R_x)}` by enumeration.
pub fn zeta_bruteforce(params: DpkParams, guard: CodeGuard) -> Result<Polynomial> {
    check_guard(params, guard)?;
    Ok(rank_histogram(params, |_| true))
}

fn rank_histogram<P: Fn(&[i32]) -> bool + Sync>(params: DpkParams, keep: P) -> Polynomial {
    let hs = hyperplanes(params);
    let base = RegionCode::base(params.p).0;
    let size = hs.len() + 1;
    let counts = first_values(params, 0)
        .into_par_iter()
        .map(|first| {
            let mut c = vec![0u64; size];
            for_each_code_from(params, first, &mut |x| {
                if keep(x) {
                    c[rank_unchecked(&hs, &base, x)] += 1;
                }
            });
            c
        })
        .reduce(
            || vec![0u64; size],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Polynomial::from_counts(&counts)
}

/// `F(1, 3, ..., 2p-3, p+k-1)`.
///
/// For `p ≥ 3` this is the product formula (the band `1 ≤ k ≤ p - 3` by the
/// slice recursion, the endpoints by supersolvability and inductive
/// factoredness of the corresponding restrictions). For `p ≤ 2` the value is
/// computed by enumeration.
pub fn zeta_closed(params: DpkParams) -> Polynomial {
    if params.p < 3 {
        return rank_histogram(params, |_| true);
    }
    f_product(&params.exponents())
}

/// The sum defining `Δ_p^k`, term by term. Panics if the product identity
/// `Δ_p^k = F(p+k-1, 2p-3)` fails.
pub fn delta(p: usize, k: usize) -> Result<Polynomial> {
    if p < 3 || k > p {
        return Err(Error::OutOfRange(format!("delta needs p >= 3 and 0 <= k <= p, got p={p}, k={k}")));
    }
    let t = Polynomial::monomial;
    let f2 = Polynomial::geometric((p + k - 2) as u32);
    let f3 = Polynomial::geometric((p + k - 3) as u32);
    let mut sum = Polynomial::zero();
    for i in 1..=p - k {
        sum = sum + &(&t(i - 1) + &t(2 * p - i - 1)) * &f2;
    }
    for i in p - k + 1..=p {
        sum = sum + &(&t(i - 1) + &t(2 * p - i)) * &f3;
    }
    assert_eq!(sum, f_product(&[(p + k - 1) as u32, (2 * p - 3) as u32]));
    Ok(sum)
}

/// `Σ_{x : x_i = ±p} t^{rk(R_x)}` by enumeration (`i` is 1-based).
pub fn slice_sum(params: DpkParams, i: usize, positive: bool) -> Result<Polynomial> {
    if params.p < 2 || i == 0 || i > params.p {
        return Err(Error::OutOfRange(format!("slice {i} of {params}")));
    }
    let target = if positive { params.p as i32 } else { -(params.p as i32) };
    Ok(rank_histogram(params, |x| x[i - 1] == target))
}

/// The closed form of [`slice_sum`]: `t^a · ζ(D_{p-1}^{k'})` with `k' = k`
/// for `i ≤ p - k` and `k - 1` otherwise, and `a = i - 1` for `x_i = p`,
/// `a = 2p - i - 1` or `2p - i` for `x_i = -p`.
pub fn slice_closed(params: DpkParams, i: usize, positive: bool) -> Result<Polynomial> {
    let (p, k) = (params.p, params.k);
    if p < 2 || i == 0 || i > p {
        return Err(Error::OutOfRange(format!("slice {i} of {params}")));
    }
    let low = i <= p - k;
    let smaller = DpkParams::new(p - 1, if low { k } else { k - 1 })?;
    let shift = match (positive, low) {
        (true, _) => i - 1,
        (false, true) => 2 * p - i - 1,
        (false, false) => 2 * p - i,
    };
    Ok(zeta_closed(smaller).shift(shift))
}

/// One row of the family table.
#[derive(Clone, Debug)]
pub struct DpkReport {
    pub params: DpkParams,
    pub hyperplanes: usize,
    pub exponents: Vec<u32>,
    pub zeta_matches: bool,
    pub walls_consistent: bool,
}

impl DpkReport {
    pub const HEADER: &'static str = "p\tk\thyperplanes\texponents\tzeta_matches\twalls_consistent";
}

impl fmt::Display for DpkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.params.p,
            self.params.k,
            self.hyperplanes,
            e.join(" "),
            self.zeta_matches,
            self.walls_consistent
        )
    }
}

/// Checks that the wall rules are symmetric and change the rank by one.
pub fn check_walls(params: DpkParams, guard: CodeGuard) -> Result<bool> {
    let codes = enumerate_codes(params, guard)?;
    let hs = hyperplanes(params);
    let base = RegionCode::base(params.p).0;
    let ok = codes.par_iter().all(|x| {
        let r = rank_unchecked(&hs, &base, &x.0);
        neighbors(params, x).is_ok_and(|ns| {
            ns.iter().all(|(h, y)| {
                let back = neighbors(params, y).is_ok_and(|b| b.iter().any(|(g, z)| g == h && z == x));
                back && rank_unchecked(&hs, &base, &y.0).abs_diff(r) == 1
            })
        })
    });
    Ok(ok)
}

pub fn report(params: DpkParams, guard: CodeGuard) -> Result<DpkReport> {
    let zeta = zeta_bruteforce(params, guard)?;
    Ok(DpkReport {
        params,
        hyperplanes: build_dpk(params).len(),
        exponents: params.exponents(),
        zeta_matches: zeta == zeta_closed(params),
        walls_consistent: check_walls(params, guard)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chambers::{enumerate_chambers, separating_set, ChamberGuard};

    fn params(p: usize, k: usize) -> DpkParams {
        DpkParams::new(p, k).unwrap()
    }

    fn code(s: &str) -> RegionCode {
        s.parse().unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(build_dpk(params(3, 0)).len(), 6);
        assert_eq!(build_dpk(params(3, 3)).len(), 9);
        assert_eq!(build_dpk(params(4, 1)).len(), 13);
        let g = CodeGuard::default();
        assert_eq!(enumerate_codes(params(3, 0), g).unwrap().len(), 24);
        assert_eq!(enumerate_codes(params(3, 3), g).unwrap().len(), 48);
        assert_eq!(enumerate_codes(params(1, 0), g).unwrap(), vec![code("(1)")]);
        for p in 1..=5 {
            for k in 0..=p {
                let n = enumerate_codes(params(p, k), g).unwrap().len() as u128;
                assert_eq!(n, params(p, k).code_count());
            }
        }
        assert!(DpkParams::new(3, 4).is_err());
        assert!(matches!(
            enumerate_codes(params(9, 0), CodeGuard { max_codes: 1000 }),
            Err(Error::TooManyCodes(_))
        ));
    }

    #[test]
    fn ranks() {
        let p = params(4, 1);
        assert_eq!(rank_of_code(p, &RegionCode::base(4)).unwrap(), 0);
        assert_eq!(rank_of_code(p, &code("(-4,3,2,1)")).unwrap(), 6);
        assert_eq!(rank_of_code(p, &code("(3,2,1,4)")).unwrap(), 3);
        assert!(matches!(rank_of_code(p, &code("(-1,3,2,4)")), Err(Error::CodeInvalid(_))));
        assert!(matches!(rank_of_code(p, &code("(1,1,2,3)")), Err(Error::CodeInvalid(_))));
    }

    #[test]
    fn neighbor_examples() {
        let n = neighbors(params(2, 0), &code("(2,1)")).unwrap();
        assert!(n.contains(&(DpkHyperplane::Minus(0, 1), code("(1,2)"))));
        let n = neighbors(params(2, 2), &code("(2,1)")).unwrap();
        let ys: Vec<RegionCode> = n.into_iter().map(|(_, y)| y).collect();
        assert_eq!(ys.len(), 2);
        assert!(ys.contains(&code("(1,2)")) && ys.contains(&code("(2,-1)")));
        let n = neighbors(params(3, 0), &code("(3,-2,1)")).unwrap();
        assert!(n.contains(&(DpkHyperplane::Plus(1, 2), code("(3,1,2)"))));
    }

    #[test]
    fn zeta_examples() {
        let g = CodeGuard::default();
        assert_eq!(zeta_bruteforce(params(1, 1), g).unwrap(), Polynomial::from_i64s(&[1, 1]));
        assert_eq!(zeta_bruteforce(params(3, 0), g).unwrap(), f_product(&[1, 3, 2]));
        assert_eq!(zeta_bruteforce(params(4, 1), g).unwrap(), zeta_closed(params(4, 1)));
        assert_eq!(zeta_closed(params(3, 0)), f_product(&[1, 2, 3]));
        assert_eq!(zeta_closed(params(4, 1)), f_product(&[1, 3, 4, 5]));
        assert_eq!(zeta_closed(params(5, 2)), f_product(&[1, 3, 5, 6, 7]));
    }

    #[test]
    fn closed_form_matches_enumeration() {
        let g = CodeGuard::default();
        for p in 2..=6 {
            for k in 0..=p {
                let q = params(p, k);
                assert_eq!(zeta_bruteforce(q, g).unwrap(), f_product(&q.exponents()), "{q}");
            }
        }
    }

    #[test]
    fn delta_identity() {
        assert_eq!(delta(3, 0).unwrap(), f_product(&[2, 3]));
        assert_eq!(delta(4, 1).unwrap(), f_product(&[4, 5]));
        assert_eq!(delta(5, 3).unwrap(), f_product(&[7, 7]));
        for p in 3..=8 {
            for k in 0..=p {
                delta(p, k).unwrap();
            }
        }
        assert!(matches!(delta(2, 0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn slices() {
        let t = Polynomial::monomial;
        assert_eq!(slice_sum(params(3, 0), 1, true).unwrap(), f_product(&[1, 1]));
        assert_eq!(slice_sum(params(3, 1), 3, false).unwrap(), &t(3) * &f_product(&[1, 1]));
        assert_eq!(slice_sum(params(4, 2), 2, false).unwrap(), &t(5) * &f_product(&[1, 3, 4]));
        let g = CodeGuard::default();
        for p in 3..=5 {
            for k in 0..=p {
                let q = params(p, k);
                let mut total = Polynomial::zero();
                for i in 1..=p {
                    for sign in [true, false] {
                        let s = slice_sum(q, i, sign).unwrap();
                        assert_eq!(s, slice_closed(q, i, sign).unwrap(), "{q} i={i} {sign}");
                        total = total + s;
                    }
                }
                assert_eq!(total, zeta_bruteforce(q, g).unwrap());
            }
        }
    }

    #[test]
    fn walls_are_consistent() {
        for p in 1..=5 {
            for k in 0..=p {
                assert!(check_walls(params(p, k), CodeGuard::default()).unwrap());
            }
        }
    }

    #[test]
    fn codes_match_chambers() {
        for p in 1..=4 {
            for k in 0..=p {
                let q = params(p, k);
                let arr = build_dpk(q);
                let set = enumerate_chambers(&arr, ChamberGuard::default()).unwrap();
                let codes = enumerate_codes(q, CodeGuard::default()).unwrap();
                assert_eq!(codes.len(), set.len(), "{q}");
                let base = set.locate(&arr, &RegionCode::base(p).to_vector()).unwrap();
                let mut hit = vec![false; set.len()];
                for x in &codes {
                    let c = set.locate(&arr, &x.to_vector()).unwrap();
                    assert!(!hit[c]);
                    hit[c] = true;
                    let sep = separating_set(set.get(base), set.get(c)).len();
                    assert_eq!(sep, rank_of_code(q, x).unwrap());
                    let walls: Vec<usize> = set.adjacent(c).into_iter().map(|(h, _)| h).collect();
                    let ns = neighbors(q, x).unwrap();
                    assert_eq!(ns.len(), walls.len(), "{q} {x}");
                    for (h, y) in ns {
                        let idx = arr
                            .index_of(&crate::scalar::canonicalize_normal(&h.normal(p)).unwrap())
                            .unwrap();
                        let d = set.locate(&arr, &y.to_vector()).unwrap();
                        assert_eq!(separating_set(set.get(c), set.get(d)), vec![idx]);
                    }
                }
            }
        }
    }
}
