//! Finite root systems in explicit coordinates.
//!
//! Crystallographic types use the usual coordinates in `R^n` (`A_n` in
//! `R^{n+1}`, `E6`, `E7` inside the `E8` lattice in `R^8`) with the standard
//! dot product. The non-crystallographic types `H3`, `H4`, `I2(5)` are given
//! in simple-root coordinates with the inner product defined by their Gram
//! matrix over `Q(√5)`. Either way the reflecting hyperplane of a root `α`
//! is `{x : <α, x> = 0}`, whose normal for the dot product is `Mα` where `M`
//! is the form.
//!
//! Simple roots are numbered as in Bourbaki, starting at 0 here.

mod group;
mod label;

use std::collections::{HashMap, HashSet, VecDeque};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Field, Scalar, Vector};

pub use group::{CoxeterElement, GroupGuard};
pub use label::{CoxeterType, TypeLabel};

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: CoxeterType,
    field: Field,
    /// Inner product matrix on ambient coordinates.
    form: Vec<Vector>,
    simple: Vec<Vector>,
    /// Sorted by height, then lexicographically.
    positive: Vec<Vector>,
    positive_index: HashMap<Vector, usize>,
    /// `<α_i, α_j>` for simple roots.
    gram: Vec<Vec<Scalar>>,
}

fn ints(xs: &[i64]) -> Vector {
    Vector::from_ints(xs)
}

fn half(xs: &[i64]) -> Vector {
    Vector(xs.iter().map(|&x| Scalar::from_ratio(x, 2)).collect())
}

fn diff(n: usize, i: usize, j: usize) -> Vector {
    let mut v = Vector::zeros(n);
    v.0[i] = Scalar::one();
    v.0[j] = Scalar::from_int(-1);
    v
}

fn identity(n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::unit(n, i)).collect()
}

/// Gram matrix of a Coxeter graph given by edge labels on consecutive nodes
/// of a path, for labels in `{3, 5}`. Roots have squared length 2.
fn path_gram(labels: &[u32]) -> Vec<Vector> {
    let n = labels.len() + 1;
    let mut g = vec![Vector::zeros(n); n];
    for (i, row) in g.iter_mut().enumerate() {
        row.0[i] = Scalar::from_int(2);
    }
    for (i, &m) in labels.iter().enumerate() {
        let c = match m {
            3 => Scalar::from_int(-1),
            5 => -Scalar::golden_ratio(),
            _ => unreachable!(),
        };
        g[i].0[i + 1] = c.clone();
        g[i + 1].0[i] = c;
    }
    g
}

impl RootSystem {
    pub fn build(kind: CoxeterType) -> Result<Self> {
        use CoxeterType::*;
        let kind = kind.validate()?;
        let (simple, form) = match kind {
            A(n) => {
                let d = n + 1;
                ((0..n).map(|i| diff(d, i, i + 1)).collect(), identity(d))
            }
            B(n) | C(n) | D(n) => {
                let mut s: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                let last = match kind {
                    B(_) => Vector::unit(n, n - 1),
                    C(_) => Vector::unit(n, n - 1).scale(&Scalar::from_int(2)),
                    _ => {
                        let mut v = Vector::zeros(n);
                        v.0[n - 2] = Scalar::one();
                        v.0[n - 1] = Scalar::one();
                        v
                    }
                };
                s.push(last);
                (s, identity(n))
            }
            E(n) => {
                let all = [
                    half(&[1, -1, -1, -1, -1, -1, -1, 1]),
                    ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
                    ints(&[-1, 1, 0, 0, 0, 0, 0, 0]),
                    ints(&[0, -1, 1, 0, 0, 0, 0, 0]),
                    ints(&[0, 0, -1, 1, 0, 0, 0, 0]),
                    ints(&[0, 0, 0, -1, 1, 0, 0, 0]),
                    ints(&[0, 0, 0, 0, -1, 1, 0, 0]),
                    ints(&[0, 0, 0, 0, 0, -1, 1, 0]),
                ];
                (all[..n].to_vec(), identity(8))
            }
            F4 => (
                vec![
                    ints(&[0, 1, -1, 0]),
                    ints(&[0, 0, 1, -1]),
                    ints(&[0, 0, 0, 1]),
                    half(&[1, -1, -1, -1]),
                ],
                identity(4),
            ),
            H(3) => (identity(3), path_gram(&[5, 3])),
            H(_) => (identity(4), path_gram(&[5, 3, 3])),
            I2(2) => (identity(2), identity(2)),
            I2(3) => (identity(2), path_gram(&[3])),
            I2(4) => (vec![ints(&[1, -1]), ints(&[0, 1])], identity(2)),
            I2(5) => (identity(2), path_gram(&[5])),
            I2(_) => (vec![ints(&[1, -1, 0]), ints(&[-2, 1, 1])], identity(3)),
        };
        Ok(Self::from_simple_roots(kind, simple, form))
    }

    fn from_simple_roots(kind: CoxeterType, simple: Vec<Vector>, form: Vec<Vector>) -> Self {
        let field = form
            .iter()
            .chain(&simple)
            .fold(Field::Rational, |f, v| f.join(v.field()));
        let mut rs = RootSystem {
            kind,
            field,
            form,
            simple,
            positive: Vec::new(),
            positive_index: HashMap::new(),
            gram: Vec::new(),
        };
        rs.gram = rs
            .simple
            .iter()
            .map(|a| rs.simple.iter().map(|b| rs.inner(a, b)).collect())
            .collect();

        // s_i permutes the positive roots other than α_i, so closing Δ under
        // that rule yields exactly Φ⁺.
        let mut seen: HashSet<Vector> = rs.simple.iter().cloned().collect();
        let mut queue: VecDeque<Vector> = rs.simple.iter().cloned().collect();
        let mut positive = Vec::new();
        while let Some(beta) = queue.pop_front() {
            for i in 0..rs.simple.len() {
                if beta == rs.simple[i] {
                    continue;
                }
                let image = rs.reflect_simple(i, &beta);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
            positive.push(beta);
        }
        let mut keyed: Vec<(Scalar, Vector)> = positive
            .into_iter()
            .map(|b| {
                let h = rs.coefficients(&b).into_iter().fold(Scalar::zero(), |s, c| s + c);
                (h, b)
            })
            .collect();
        keyed.sort();
        rs.positive = keyed.into_iter().map(|(_, b)| b).collect();
        rs.positive_index = rs.positive.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        rs
    }

    /// Parses a label such as `E6` and builds the system.
    pub fn from_label(label: &str) -> Result<Self> {
        Self::build(label.parse()?)
    }

    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive
    }

    /// `Φ = Φ⁺ ∪ -Φ⁺`.
    pub fn roots(&self) -> Vec<Vector> {
        self.positive.iter().flat_map(|b| [b.clone(), b.neg()]).collect()
    }

    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    pub fn form(&self) -> &[Vector] {
        &self.form
    }

    pub fn inner(&self, u: &Vector, v: &Vector) -> Scalar {
        u.dot(&linalg::mat_vec(&self.form, v))
    }

    /// Dot-product normal of the hyperplane `α^⊥`.
    pub fn normal(&self, alpha: &Vector) -> Vector {
        linalg::mat_vec(&self.form, alpha)
    }

    /// `s_α(x) = x - 2<x,α>/<α,α> α`.
    pub fn reflect(&self, alpha: &Vector, x: &Vector) -> Vector {
        let c = &(&self.inner(x, alpha) * &Scalar::from_int(2)) / &self.inner(alpha, alpha);
        if c.is_zero() {
            return x.clone();
        }
        x.axpy(&-c, alpha)
    }

    pub fn reflect_simple(&self, i: usize, x: &Vector) -> Vector {
        self.reflect(&self.simple[i], x)
    }

    /// Coefficients of `v` in the simple roots.
    pub fn coefficients(&self, v: &Vector) -> Vec<Scalar> {
        linalg::coefficients(&self.simple, v).expect("vector in the span of the roots")
    }

    pub fn positive_index(&self, root: &Vector) -> Option<usize> {
        self.positive_index.get(root).copied()
    }

    pub fn is_positive_root(&self, v: &Vector) -> bool {
        self.positive_index.contains_key(v)
    }

    pub fn is_root(&self, v: &Vector) -> bool {
        self.is_positive_root(v) || self.is_positive_root(&v.neg())
    }

    /// The point `x` in the span of the roots with `<α_i, x> = target[i]`.
    pub fn point_with_pairings(&self, target: &[Scalar]) -> Vector {
        let rows: Vec<Vector> = self.gram.iter().map(|r| Vector(r.clone())).collect();
        let inv = linalg::inverse(&rows).expect("Gram matrix is invertible");
        let c = linalg::mat_vec(&inv, &Vector(target.to_vec()));
        linalg::vec_mat(&c, &self.simple)
    }

    /// A point in the dominant chamber: `<α_i, x> = 1` for all `i`.
    pub fn dominant_point(&self) -> Vector {
        self.point_with_pairings(&vec![Scalar::one(); self.rank()])
    }

    /// `λ_J`: pairing 0 with `α_j` for `j ∈ J` and 1 with the others.
    pub fn parabolic_point(&self, subset: &[usize]) -> Vector {
        let t: Vec<Scalar> = (0..self.rank())
            .map(|i| if subset.contains(&i) { Scalar::zero() } else { Scalar::one() })
            .collect();
        self.point_with_pairings(&t)
    }

    /// The reflection arrangement `{α^⊥ : α ∈ Φ⁺}` in ambient coordinates.
    pub fn coxeter_arrangement(&self) -> Arrangement {
        Arrangement::from_normals(
            self.ambient_dim(),
            self.field,
            self.positive.iter().map(|a| self.normal(a)),
        )
        .expect("root normals are nonzero")
    }

    /// Arrangement index of each positive root's hyperplane.
    pub fn hyperplane_of_root(&self, arrangement: &Arrangement) -> Vec<usize> {
        self.positive
            .iter()
            .map(|a| {
                let n = crate::scalar::canonicalize_normal(&self.normal(a)).expect("nonzero");
                arrangement.index_of(&n).expect("root hyperplane present")
            })
            .collect()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.kind.exponents()
    }

    /// Type generated by the simple roots with the given indices.
    pub fn subset_type(&self, subset: &[usize]) -> TypeLabel {
        let roots: Vec<Vector> = subset.iter().map(|&i| self.simple[i].clone()).collect();
        self.recognize(&roots)
    }

    /// Type of the Coxeter graph of a set of simple roots of some
    /// subsystem.
    pub fn recognize(&self, simple: &[Vector]) -> TypeLabel {
        label::recognize(simple, |a, b| self.inner(a, b))
    }

    /// All `J ⊆ Δ` (0-based) whose simple roots generate type `t`, in
    /// lexicographic order.
    pub fn simple_subsets_of_type(&self, t: &TypeLabel) -> Vec<Vec<usize>> {
        let k = t.rank();
        let n = self.rank();
        let want = t.graph_class();
        if k > n {
            return Vec::new();
        }
        let mut out: Vec<Vec<usize>> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|j| self.subset_type(j).graph_class() == want)
            .collect();
        out.sort();
        out
    }

    /// Simple roots of the subsystem whose positive roots are `positive`
    /// (a subset of `Φ⁺` closed under its own reflections): the roots `β`
    /// whose reflection permutes the others.
    pub fn simple_system_of(&self, positive: &[Vector]) -> Vec<Vector> {
        let set: HashSet<&Vector> = positive.iter().collect();
        positive
            .iter()
            .filter(|b| {
                positive
                    .iter()
                    .filter(|g| g != b)
                    .all(|g| set.contains(&self.reflect(b, g)))
            })
            .cloned()
            .collect()
    }

    /// Breadth-first search of the W-orbit of `start` for a point satisfying
    /// `pred`.
    pub fn orbit_find<P>(&self, start: &Vector, guard: GroupGuard, pred: P) -> Result<Option<Vector>>
    where
        P: Fn(&Vector) -> bool,
    {
        let mut seen: HashSet<Vector> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start.clone());
        while let Some(x) = queue.pop_front() {
            if pred(&x) {
                return Ok(Some(x));
            }
            for i in 0..self.rank() {
                let y = self.reflect_simple(i, &x);
                if seen.insert(y.clone()) {
                    if seen.len() as u64 > guard.max_order {
                        return Err(Error::GroupTooLarge(format!(
                            "orbit of {} exceeds {} points",
                            self.kind, guard.max_order
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_label(s).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (s, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A4", 10),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("H3", 15),
            ("H4", 60),
            ("I2(2)", 2),
            ("I2(3)", 3),
            ("I2(4)", 4),
            ("I2(5)", 5),
            ("I2(6)", 6),
        ] {
            let r = rs(s);
            assert_eq!(r.positive_roots().len(), n, "{s}");
            assert_eq!(r.roots().len(), 2 * n, "{s}");
            let e: u32 = r.exponents().iter().sum();
            assert_eq!(e as usize, n, "{s}");
        }
        assert_eq!(rs("H3").field(), Field::Golden);
        assert_eq!(rs("E8").field(), Field::Rational);
    }

    #[test]
    fn simple_reflections_permute() {
        for s in ["A3", "B3", "D4", "F4", "H3", "I2(5)", "I2(6)", "E6"] {
            let r = rs(s);
            for (i, a) in r.simple_roots().iter().enumerate() {
                assert_eq!(r.reflect_simple(i, a), a.neg());
                for b in r.positive_roots() {
                    if b != a {
                        assert!(r.is_positive_root(&r.reflect_simple(i, b)), "{s}");
                    }
                }
                for b in r.positive_roots() {
                    assert!(r.coefficients(b).iter().all(|c| !c.is_negative()));
                }
            }
        }
    }

    #[test]
    fn types_recognized() {
        for s in ["A4", "B3", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(6)"] {
            let r = rs(s);
            let all: Vec<usize> = (0..r.rank()).collect();
            assert_eq!(r.subset_type(&all), s.parse::<TypeLabel>().unwrap().graph_class(), "{s}");
        }
        assert!(rs("C3").subset_type(&[0, 1, 2]).same_graph(&"B3".parse().unwrap()));
    }

    #[test]
    fn simple_subsets() {
        let t = |s: &str| s.parse::<TypeLabel>().unwrap();
        assert_eq!(rs("A2").simple_subsets_of_type(&t("A1")).len(), 2);
        assert_eq!(rs("A3").simple_subsets_of_type(&t("A1xA1")), vec![vec![0, 2]]);
        assert_eq!(rs("A3").simple_subsets_of_type(&t("A2")).len(), 2);
        // Bourbaki E6: {2,4,5} is A3 and {1,5,6} is A1xA2 (1-based)
        let e6 = rs("E6");
        assert_eq!(e6.subset_type(&[1, 3, 4]).to_string(), "A3");
        assert_eq!(e6.subset_type(&[0, 4, 5]).to_string(), "A1xA2");
        assert!(e6.simple_subsets_of_type(&t("D5")).contains(&vec![1, 2, 3, 4, 5]));
    }

    #[test]
    fn arrangements() {
        let a2 = rs("A2").coxeter_arrangement();
        assert_eq!(a2.len(), 3);
        assert_eq!(a2.essentialize().dim(), 2);
        assert_eq!(rs("B3").coxeter_arrangement().len(), 9);
        assert_eq!(rs("E8").coxeter_arrangement().len(), 120);
        let h3 = rs("H3").coxeter_arrangement();
        assert_eq!(h3.len(), 15);
        assert_eq!(h3.field(), Field::Golden);
    }

    #[test]
    fn dominant_point_is_dominant() {
        for s in ["A3", "E7", "H4", "I2(6)"] {
            let r = rs(s);
            let x = r.dominant_point();
            for a in r.positive_roots() {
                assert!(r.inner(a, &x).is_positive());
            }
            let lam = r.parabolic_point(&[0]);
            assert!(r.inner(&r.simple_roots()[0], &lam).is_zero());
        }
    }

    #[test]
    fn subsystem_simple_roots() {
        let r = rs("A3");
        // positive roots of the parabolic A2 on α1, α2
        let sub: Vec<Vector> = r
            .positive_roots()
            .iter()
            .filter(|b| r.coefficients(b)[2].is_zero())
            .cloned()
            .collect();
        assert_eq!(sub.len(), 3);
        let simple = r.simple_system_of(&sub);
        assert_eq!(simple.len(), 2);
        assert_eq!(r.recognize(&simple).to_string(), "A2");
    }
}
