//! Exact ordered-field arithmetic over the rationals and over Q(√5).
//!
//! A [`Scalar`] is a value `a + b·√5` with `a`, `b` arbitrary-precision
//! rationals. Values with `b = 0` are always stored in the rational variant,
//! so structural equality is value equality and hashing is sound.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Element of Q or Q(√5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// `a + b√5` with `b ≠ 0`.
    Quadratic(BigRational, BigRational),
}

/// The field an arrangement lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals.
    Rational,
    /// The real quadratic field Q(√5).
    Golden,
}

impl Field {
    pub fn contains(self, s: &Scalar) -> bool {
        self == Field::Golden || s.is_rational()
    }

    /// The smaller field of the two that contains both.
    pub fn join(self, other: Field) -> Field {
        self.max(other)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Golden => f.write_str("Qr5"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(Field::Rational),
            "Qr5" => Ok(Field::Golden),
            _ => Err(Error::parse("field", format!("unknown field {s:?}"))),
        }
    }
}

impl Scalar {
    /// Builds `a + b√5`, choosing the rational variant when `b = 0`.
    pub fn new(a: BigRational, b: BigRational) -> Self {
        if b.is_zero() {
            Scalar::Rational(a)
        } else {
            Scalar::Quadratic(a, b)
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(n))
    }

    /// √5.
    pub fn sqrt5() -> Self {
        Scalar::Quadratic(BigRational::zero(), BigRational::one())
    }

    /// The golden ratio (1 + √5)/2.
    pub fn golden_ratio() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        Scalar::Quadratic(half.clone(), half)
    }

    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(a) if a.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(a) if a.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn rational_part(&self) -> &BigRational {
        match self {
            Scalar::Rational(a) | Scalar::Quadratic(a, _) => a,
        }
    }

    /// Coefficient of √5.
    pub fn sqrt5_part(&self) -> BigRational {
        match self {
            Scalar::Rational(_) => BigRational::zero(),
            Scalar::Quadratic(_, b) => b.clone(),
        }
    }

    pub fn field(&self) -> Field {
        if self.is_rational() {
            Field::Rational
        } else {
            Field::Golden
        }
    }

    /// Exact sign of `a + b√5` under the embedding with √5 > 0.
    pub fn sign(&self) -> i8 {
        match self {
            Scalar::Rational(a) => rational_sign(a),
            Scalar::Quadratic(a, b) => {
                let sa = rational_sign(a);
                let sb = rational_sign(b);
                if sa == 0 || sa == sb {
                    return sb;
                }
                // Opposite signs: the larger of a² and 5b² wins; they are
                // never equal because √5 is irrational.
                let a2 = a * a;
                let b2 = b * b * BigRational::from_integer(5.into());
                if a2 > b2 {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a - b√5`.
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.clone()),
            Scalar::Quadratic(a, b) => Scalar::Quadratic(a.clone(), -b),
        }
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> BigRational {
        match self {
            Scalar::Rational(a) => a * a,
            Scalar::Quadratic(a, b) => a * a - b * b * BigRational::from_integer(5.into()),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Quadratic(a, b) => {
                let n = self.norm();
                Scalar::new(a / &n, -(b / &n))
            }
        }
    }

    /// Floating-point approximation, for display and diagnostics only.
    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(a) if a.is_integer() => a.to_integer().to_i64(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.rational_part().to_f64().unwrap_or(f64::NAN);
        let b = self.sqrt5_part().to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }

    fn add_ref(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(c)) => Scalar::Rational(a + c),
            _ => Scalar::new(
                self.rational_part() + rhs.rational_part(),
                self.sqrt5_part() + rhs.sqrt5_part(),
            ),
        }
    }

    fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(c)) => Scalar::Rational(a - c),
            _ => Scalar::new(
                self.rational_part() - rhs.rational_part(),
                self.sqrt5_part() - rhs.sqrt5_part(),
            ),
        }
    }

    fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(c)) => Scalar::Rational(a * c),
            (Scalar::Rational(a), Scalar::Quadratic(c, d))
            | (Scalar::Quadratic(c, d), Scalar::Rational(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Quadratic(a * c, a * d)
                }
            }
            (Scalar::Quadratic(a, b), Scalar::Quadratic(c, d)) => {
                let five = BigRational::from_integer(5.into());
                Scalar::new(a * c + b * d * five, a * d + b * c)
            }
        }
    }

    fn div_ref(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (_, Scalar::Rational(c)) => match self {
                Scalar::Rational(a) => Scalar::Rational(a / c),
                Scalar::Quadratic(a, b) => Scalar::Quadratic(a / c, b / c),
            },
            _ => self.mul_ref(&rhs.recip()),
        }
    }
}

fn rational_sign(a: &BigRational) -> i8 {
    if a.is_zero() {
        0
    } else if a.is_positive() {
        1
    } else {
        -1
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(a: BigRational) -> Self {
        Scalar::Rational(a)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            _ => self.sub_ref(other).sign().cmp(&0),
        }
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $inner:ident) => {
        impl<'a> $Trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $Trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl<'a> $Trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl<'a> $Trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Quadratic(a, b) => Scalar::Quadratic(-a, -b),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => write!(f, "{a}"),
            Scalar::Quadratic(a, b) => {
                if !a.is_zero() {
                    write!(f, "{a}")?;
                    f.write_str(if b.is_positive() { "+" } else { "-" })?;
                } else if b.is_negative() {
                    f.write_str("-")?;
                }
                let mag = b.abs();
                if mag.is_one() {
                    f.write_str("r5")
                } else {
                    write!(f, "{mag}*r5")
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(format!("{s:?}"), "expected p or p/q");
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() || q.is_negative() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p`, `p/q`, or `p/q+r/s*r5` where either addend may be omitted
    /// and `r5` stands for √5.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("scalar", "empty"));
        }
        let Some(pre) = s.strip_suffix("r5") else {
            return parse_rational(s).map(Scalar::Rational);
        };
        let (head, coef) = if let Some(p) = pre.strip_suffix('*') {
            match p.rfind(['+', '-']).filter(|&i| i > 0) {
                Some(i) => (&p[..i], &p[i..]),
                None => ("", p),
            }
        } else {
            match pre.chars().last() {
                None => ("", "1"),
                Some('+') => (&pre[..pre.len() - 1], "1"),
                Some('-') => (&pre[..pre.len() - 1], "-1"),
                Some(_) => return Err(Error::parse(format!("{s:?}"), "malformed sqrt(5) term")),
            }
        };
        let a = if head.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(head)?
        };
        let b = parse_rational(coef)?;
        Ok(Scalar::new(a, b))
    }
}

/// A coordinate vector over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn field(&self) -> Field {
        if self.0.iter().all(Scalar::is_rational) {
            Field::Rational
        } else {
            Field::Golden
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Scalar::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// `self + s·other`.
    pub fn axpy(&self, s: &Scalar, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if b.is_zero() { a.clone() } else { a + &(s * b) })
                .collect(),
        )
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }

    /// Multiplies by the positive rational that clears all denominators and
    /// removes the integer content of both the rational and √5 parts.
    pub fn clear_denominators(&self) -> Vector {
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for x in &self.0 {
            for part in [x.rational_part().clone(), x.sqrt5_part()] {
                if !part.is_zero() {
                    lcm = lcm.lcm(part.denom());
                }
            }
        }
        for x in &self.0 {
            for part in [x.rational_part().clone(), x.sqrt5_part()] {
                if !part.is_zero() {
                    let n = (part * BigRational::from_integer(lcm.clone())).to_integer();
                    gcd = gcd.gcd(&n);
                }
            }
        }
        if gcd.is_zero() {
            return self.clone();
        }
        let factor = Scalar::Rational(BigRational::new(lcm, gcd));
        self.scale(&factor)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

/// The unique representative of the line spanned by `v`: first nonzero
/// coordinate a positive integer, all coordinates in lowest integral terms.
///
/// Two vectors span the same line (over the field of their coordinates) iff
/// their canonical forms are equal.
pub fn canonicalize_normal(v: &Vector) -> Result<Vector> {
    let lead = v.first_nonzero().ok_or(Error::ZeroVector)?;
    let inv = v.0[lead].recip();
    Ok(v.scale(&inv).clear_denominators())
}

/// Sign of a scalar as `-1`, `0` or `+1`.
pub fn sign(s: &Scalar) -> i8 {
    s.sign()
}
