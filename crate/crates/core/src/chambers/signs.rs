use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sign vector of a region, one `+`/`-` per hyperplane.
///
/// Stored as packed bits (`1` means `-`), most significant bit first, so the
/// derived order is lexicographic with `+` before `-`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    words: Vec<u64>,
    len: usize,
}

const fn mask(i: usize) -> u64 {
    1 << (63 - i % 64)
}

impl SignVector {
    pub fn all_positive(len: usize) -> Self {
        SignVector {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// From entries in `{1, -1}`.
    pub fn from_signs(signs: &[i8]) -> Self {
        let mut v = Self::all_positive(signs.len());
        for (i, &s) in signs.iter().enumerate() {
            debug_assert!(s == 1 || s == -1);
            if s < 0 {
                v.words[i / 64] |= mask(i);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> i8 {
        assert!(i < self.len);
        if self.words[i / 64] & mask(i) != 0 {
            -1
        } else {
            1
        }
    }

    pub fn to_signs(&self) -> Vec<i8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn flip(&self, i: usize) -> Self {
        assert!(i < self.len);
        let mut v = self.clone();
        v.words[i / 64] ^= mask(i);
        v
    }

    pub fn negate(&self) -> Self {
        let mut v = self.clone();
        for i in 0..v.words.len() {
            v.words[i] = !v.words[i];
        }
        if self.len % 64 != 0 {
            let last = v.words.len() - 1;
            v.words[last] &= !0u64 << (64 - self.len % 64);
        }
        v
    }

    /// Positions where the two vectors differ.
    pub fn difference(&self, other: &SignVector) -> Vec<usize> {
        assert_eq!(self.len, other.len);
        (0..self.len)
            .filter(|&i| (self.words[i / 64] ^ other.words[i / 64]) & mask(i) != 0)
            .collect()
    }

    pub fn distance(&self, other: &SignVector) -> u32 {
        self.words.iter().zip(&other.words).map(|(a, b)| (a ^ b).count_ones()).sum()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) > 0 { '+' } else { '-' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::parse("sign vector", format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Ok(SignVector::from_signs(&signs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn order_and_display() {
        let a: SignVector = "++-".parse().unwrap();
        let b: SignVector = "+-+".parse().unwrap();
        assert!(a < b);
        assert!(SignVector::all_positive(3) < a);
        assert_eq!(a.to_string(), "++-");
        assert_eq!(a.negate().to_string(), "--+");
        assert_eq!(a.difference(&b), vec![1, 2]);
        assert!("+x".parse::<SignVector>().is_err());
    }

    proptest! {
        #[test]
        fn packing(signs in prop::collection::vec(prop::bool::ANY, 0..150)) {
            let s: Vec<i8> = signs.iter().map(|&b| if b { -1 } else { 1 }).collect();
            let v = SignVector::from_signs(&s);
            prop_assert_eq!(v.to_signs(), s.clone());
            prop_assert_eq!(v.to_string().parse::<SignVector>().unwrap(), v.clone());
            prop_assert_eq!(v.negate().negate(), v.clone());
            prop_assert_eq!(v.distance(&v.negate()) as usize, s.len());
            let t: String = v.to_string();
            let w = SignVector::from_signs(&s.iter().map(|x| -x).collect::<Vec<_>>());
            prop_assert_eq!(v.cmp(&w), t.cmp(&w.to_string()));
        }
    }
}
