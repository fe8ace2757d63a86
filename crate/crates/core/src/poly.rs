//! Univariate integer polynomials and the products `F(e_1, ..., e_m)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Polynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Polynomial whose coefficient of `t^i` is `counts[i]`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Polynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::monomial(0)
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    /// `1 + t + ... + t^e`.
    pub fn geometric(e: u32) -> Self {
        Polynomial {
            coeffs: vec![BigInt::one(); e as usize + 1],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// True if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Divides by `(t - r)` if `r` is a root.
    pub fn divide_by_root(&self, r: &BigInt) -> Option<Polynomial> {
        if self.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return v.is_zero().then(|| Polynomial::new(quotient));
            }
            quotient[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Space-separated coefficients, low degree first.
    pub fn to_coefficient_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |a, b| &a * &b)
    }
}

/// Pretty form, e.g. `1 + 2t + 2t^2 + t^3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the coefficient-list form `c0 c1 c2 ...`.
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|w| {
                w.parse::<BigInt>()
                    .map_err(|_| Error::parse("polynomial", format!("bad coefficient {w:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }
}

/// `F(e_1, ..., e_m) = ∏ (1 + t + ... + t^{e_i})`; the empty product is 1.
pub fn f_product(exponents: &[u32]) -> Polynomial {
    exponents.iter().map(|&e| Polynomial::geometric(e)).product()
}

/// True iff `zeta` equals `f_product(exponents)` exactly.
///
/// The value at 1 and the degree are compared first; they are necessary
/// conditions and rule out most mismatches without building the product.
pub fn factors_as(zeta: &Polynomial, exponents: &[u32]) -> bool {
    let total: u64 = exponents.iter().map(|&e| e as u64).sum();
    if zeta.degree() != Some(total as usize) {
        return false;
    }
    let count: BigInt = exponents.iter().map(|&e| BigInt::from(e) + 1).product();
    if zeta.value_at_one() != count {
        return false;
    }
    *zeta == f_product(exponents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn f_product_examples() {
        assert_eq!(f_product(&[]), Polynomial::one());
        assert_eq!(f_product(&[1, 2]), Polynomial::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(f_product(&[1, 3]), Polynomial::from_i64s(&[1, 2, 2, 2, 1]));
    }

    #[test]
    fn doubling_identity() {
        // F(j-1)(1 + t^j) = F(2j-1)
        for j in 1..=10u32 {
            let lhs = &f_product(&[j - 1]) * &(&Polynomial::one() + &Polynomial::monomial(j as usize));
            assert_eq!(lhs, f_product(&[2 * j - 1]), "j = {j}");
        }
    }

    #[test]
    fn factors_as_examples() {
        let z = Polynomial::from_i64s(&[1, 2, 2, 1]);
        assert!(factors_as(&z, &[1, 2]));
        assert!(factors_as(&z, &[2, 1]));
        assert!(!factors_as(&z, &[1, 1, 1]));
        // right degree and value at one, wrong shape
        let w = Polynomial::from_i64s(&[1, 1, 4, 0, 0, 0]);
        assert!(!factors_as(&w, &[1, 2]));
    }

    #[test]
    fn display_forms() {
        let p = Polynomial::from_i64s(&[1, 2, 2, 1]);
        assert_eq!(p.to_string(), "1 + 2t + 2t^2 + t^3");
        assert_eq!(p.to_coefficient_string(), "1 2 2 1");
        assert_eq!("1 2 2 1".parse::<Polynomial>().unwrap(), p);
        let chi = Polynomial::from_i64s(&[2, -3, 1]);
        assert_eq!(chi.to_string(), "2 - 3t + t^2");
        assert_eq!(Polynomial::from_i64s(&[0, -1]).to_string(), "-t");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn root_division() {
        // (t-1)(t-2)
        let chi = Polynomial::from_i64s(&[2, -3, 1]);
        let q = chi.divide_by_root(&BigInt::from(2)).unwrap();
        assert_eq!(q, Polynomial::from_i64s(&[-1, 1]));
        assert!(chi.divide_by_root(&BigInt::from(3)).is_none());
    }

    proptest! {
        #[test]
        fn f_product_invariants(exps in proptest::collection::vec(0u32..7, 0..5)) {
            let f = f_product(&exps);
            let total: usize = exps.iter().map(|&e| e as usize).sum();
            prop_assert_eq!(f.degree(), Some(total));
            let count: BigInt = exps.iter().map(|&e| BigInt::from(e + 1)).product();
            prop_assert_eq!(f.value_at_one(), count);
            prop_assert!(f.is_palindromic());
            prop_assert!(factors_as(&f, &exps));
        }
    }
}
