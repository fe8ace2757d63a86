use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Vector};

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::C(n) | CoxeterType::D(n) => n,
            CoxeterType::E(n) | CoxeterType::H(n) => n,
            CoxeterType::F4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    pub(crate) fn validate(self) -> Result<Self> {
        let ok = match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::C(n) => n >= 1,
            CoxeterType::D(n) => n >= 2,
            CoxeterType::E(n) => (6..=8).contains(&n),
            CoxeterType::F4 => true,
            CoxeterType::H(n) => n == 3 || n == 4,
            CoxeterType::I2(m) => (2..=6).contains(&m),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    /// Exponents of the group, ascending.
    pub fn exponents(self) -> Vec<u32> {
        let n = self.rank() as u32;
        match self {
            CoxeterType::A(_) => (1..=n).collect(),
            CoxeterType::B(_) | CoxeterType::C(_) => (1..=n).map(|i| 2 * i - 1).collect(),
            CoxeterType::D(_) => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            CoxeterType::E(6) => vec![1, 4, 5, 7, 8, 11],
            CoxeterType::E(7) => vec![1, 5, 7, 9, 11, 13, 17],
            CoxeterType::E(_) => vec![1, 7, 11, 13, 17, 19, 23, 29],
            CoxeterType::F4 => vec![1, 5, 7, 11],
            CoxeterType::H(3) => vec![1, 5, 9],
            CoxeterType::H(_) => vec![1, 11, 19, 29],
            CoxeterType::I2(m) => {
                let mut e = vec![1, m - 1];
                e.sort_unstable();
                e
            }
        }
    }

    pub fn order(self) -> BigInt {
        self.exponents().iter().map(|&e| BigInt::from(e + 1)).product()
    }

    /// Components of the same Coxeter graph in a fixed normal form:
    /// `C_n` becomes `B_n`, and small coincidences (`D3 = A3`, `I2(4) = B2`,
    /// ...) are resolved.
    pub fn graph_class(self) -> Vec<CoxeterType> {
        use CoxeterType::*;
        match self {
            B(1) | C(1) => vec![A(1)],
            C(n) => vec![B(n)],
            D(2) | I2(2) => vec![A(1), A(1)],
            D(3) => vec![A(3)],
            I2(3) => vec![A(2)],
            I2(4) => vec![B(2)],
            t => vec![t],
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::C(n) => write!(f, "C{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H(n) => write!(f, "H{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(s.to_string());
        let s = s.trim();
        if let Some(m) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return CoxeterType::I2(m.parse().map_err(|_| bad())?).validate();
        }
        if s == "G2" {
            return Ok(CoxeterType::I2(6));
        }
        let (head, n) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let n: usize = n.parse().map_err(|_| bad())?;
        let t = match head {
            "A" => CoxeterType::A(n),
            "B" => CoxeterType::B(n),
            "C" => CoxeterType::C(n),
            "D" => CoxeterType::D(n),
            "E" => CoxeterType::E(n),
            "F" if n == 4 => CoxeterType::F4,
            "H" => CoxeterType::H(n),
            _ => return Err(bad()),
        };
        t.validate()
    }
}

/// A possibly reducible type: an unordered product of irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeLabel(Vec<CoxeterType>);

impl TypeLabel {
    pub fn new(mut parts: Vec<CoxeterType>) -> Self {
        parts.sort_unstable();
        TypeLabel(parts)
    }

    pub fn parts(&self) -> &[CoxeterType] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank()).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1
    }

    /// Normal form used to compare labels by Coxeter graph.
    pub fn graph_class(&self) -> TypeLabel {
        TypeLabel::new(self.0.iter().flat_map(|t| t.graph_class()).collect())
    }

    pub fn same_graph(&self, other: &TypeLabel) -> bool {
        self.graph_class() == other.graph_class()
    }

    pub fn exponents(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.0.iter().flat_map(|t| t.exponents()).collect();
        e.sort_unstable();
        e
    }

    pub fn order(&self) -> BigInt {
        self.0.iter().map(|t| t.order()).product()
    }
}

impl From<CoxeterType> for TypeLabel {
    fn from(t: CoxeterType) -> Self {
        TypeLabel(vec![t])
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Accepts `A1xA2` as well as the juxtaposed form `A1A2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(TypeLabel::default());
        }
        let mut parts = Vec::new();
        for chunk in s.split('x') {
            let mut start = 0;
            let bytes: Vec<char> = chunk.chars().collect();
            let mut i = 1;
            while i <= bytes.len() {
                let at_boundary = i == bytes.len() || (bytes[i].is_ascii_uppercase() && bytes[i - 1] != '(');
                if at_boundary {
                    let piece: String = bytes[start..i].iter().collect();
                    parts.push(piece.parse::<CoxeterType>()?);
                    start = i;
                }
                i += 1;
            }
        }
        Ok(TypeLabel::new(parts))
    }
}

/// Coxeter-graph edge label `m` for two simple roots, from
/// `cos² = <a,b>² / (<a,a><b,b>)`.
pub(crate) fn edge_label(cos2: &Scalar) -> u32 {
    let r = |p, q| Scalar::from_ratio(p, q);
    let golden = r(3, 8) + &Scalar::sqrt5() * &r(1, 8);
    if cos2.is_zero() {
        2
    } else if *cos2 == r(1, 4) {
        3
    } else if *cos2 == r(1, 2) {
        4
    } else if *cos2 == r(3, 4) {
        6
    } else if *cos2 == golden {
        5
    } else {
        panic!("not a simple system: cos^2 = {cos2}")
    }
}

/// Recognizes the type of the Coxeter graph with the given edge labels
/// (`labels[i][j]`, 2 meaning no edge).
pub(crate) fn recognize_graph(labels: &[Vec<u32>]) -> TypeLabel {
    let n = labels.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if !seen[w] && labels[v][w] != 2 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        parts.push(recognize_component(labels, &comp));
    }
    TypeLabel::new(parts)
}

fn recognize_component(labels: &[Vec<u32>], comp: &[usize]) -> CoxeterType {
    let n = comp.len();
    let edges: Vec<(usize, usize, u32)> = comp
        .iter()
        .enumerate()
        .flat_map(|(a, &v)| {
            comp[a + 1..]
                .iter()
                .filter(move |&&w| labels[v][w] != 2)
                .map(move |&w| (v, w, labels[v][w]))
        })
        .collect();
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let unknown = || panic!("Coxeter graph is not of finite type");
    if n == 1 {
        return CoxeterType::A(1);
    }
    if edges.len() != n - 1 {
        unknown();
    }
    let max = edges.iter().map(|e| e.2).max().unwrap_or(3);
    match max {
        5 => match n {
            2 => CoxeterType::I2(5),
            3 => CoxeterType::H(3),
            4 => CoxeterType::H(4),
            _ => unknown(),
        },
        6 if n == 2 => CoxeterType::I2(6),
        4 => {
            if n == 4 {
                let (a, b, _) = edges.iter().find(|e| e.2 == 4).copied().unwrap();
                if degree(a) == 2 && degree(b) == 2 {
                    return CoxeterType::F4;
                }
            }
            CoxeterType::B(n)
        }
        3 => {
            let Some(&branch) = comp.iter().find(|&&v| degree(v) == 3) else {
                return CoxeterType::A(n);
            };
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b, _)| match (a == branch, b == branch) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    loop {
                        let next = edges.iter().find_map(|&(a, b, _)| {
                            if a == cur && b != prev {
                                Some(b)
                            } else if b == cur && a != prev {
                                Some(a)
                            } else {
                                None
                            }
                        });
                        match next {
                            Some(x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => CoxeterType::D(n),
                [1, 2, 2] => CoxeterType::E(6),
                [1, 2, 3] => CoxeterType::E(7),
                [1, 2, 4] => CoxeterType::E(8),
                _ => unknown(),
            }
        }
        _ => unknown(),
    }
}

/// Recognizes the type generated by a set of simple roots under the inner
/// product `inner`.
pub(crate) fn recognize<F>(roots: &[Vector], inner: F) -> TypeLabel
where
    F: Fn(&Vector, &Vector) -> Scalar,
{
    let norms: Vec<Scalar> = roots.iter().map(|a| inner(a, a)).collect();
    let labels: Vec<Vec<u32>> = (0..roots.len())
        .map(|i| {
            (0..roots.len())
                .map(|j| {
                    if i == j {
                        return 1;
                    }
                    let p = inner(&roots[i], &roots[j]);
                    let cos2 = &(&p * &p) / &(&norms[i] * &norms[j]);
                    edge_label(&cos2)
                })
                .collect()
        })
        .collect();
    recognize_graph(&labels)
}
