//! Factorization of `ζ` for restrictions of reflection arrangements.
//!
//! A restriction is named `W/T`: `W` the ambient type and `T` the type of
//! the stabilizer of the flat `X`, which is fixed by pinning a set of simple
//! roots (or arbitrary positive roots) whose hyperplanes cut out `X`.

mod candidates;
mod presets;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::arrangement::{Arrangement, Flat, LatticeGuard};
use crate::chambers::{enumerate_chambers, ChamberGuard, ChamberSet, SignVector};
use crate::error::{Error, Result};
use crate::linalg::Rref;
use crate::poly::{factors_as, Polynomial};
use crate::roots::{GroupGuard, RootSystem, TypeLabel};
use crate::scalar::Vector;

pub use candidates::candidate_bases_via_restricted_roots;
pub use presets::{split_name, Corpus, Preset, RootSpec, Verdict};

/// `A(W)^X` together with the data it was built from.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub name: String,
    pub root_system: RootSystem,
    pub arrangement: Arrangement,
    pub flat: Flat,
    pub restricted: Arrangement,
    /// Type of the stabilizer of `X`, computed from the roots vanishing on it.
    pub stabilizer: TypeLabel,
    /// Simple roots of the stabilizer.
    pub stabilizer_simple: Vec<Vector>,
}

/// Restricts `A(W)` to the common kernel of `roots`.
pub fn restrict_by_roots(name: &str, rs: &RootSystem, roots: &[Vector]) -> Result<Restriction> {
    let arrangement = rs.coxeter_arrangement();
    let equations: Vec<Vector> = roots.iter().map(|a| rs.normal(a)).collect();
    let flat = arrangement.flat_from_equations(&equations)?;
    let restricted = arrangement.restrict(&flat)?;
    // The stabilizer is generated by the reflections in the roots
    // orthogonal to X, i.e. the roots in the span of `roots`.
    let span = Rref::new(rs.ambient_dim(), roots);
    let sub: Vec<Vector> = rs
        .positive_roots()
        .iter()
        .filter(|b| span.contains(b))
        .cloned()
        .collect();
    let stabilizer_simple = rs.simple_system_of(&sub);
    let stabilizer = rs.recognize(&stabilizer_simple);
    Ok(Restriction {
        name: name.to_string(),
        root_system: rs.clone(),
        arrangement,
        flat,
        restricted,
        stabilizer,
        stabilizer_simple,
    })
}

/// Builds the restriction described by a preset and checks the declared
/// stabilizer type.
pub fn restriction_by_name(preset: &Preset) -> Result<Restriction> {
    let rs = RootSystem::build(preset.group)?;
    let roots = preset.roots(&rs)?;
    let r = restrict_by_roots(&preset.name, &rs, &roots)?;
    if !r.stabilizer.same_graph(&preset.stabilizer) {
        return Err(Error::PresetTypeMismatch {
            name: preset.name.clone(),
            roots: match &preset.spec {
                RootSpec::Simple(j) => j.clone(),
                RootSpec::Coefficients(_) => Vec::new(),
            },
            expected: preset.stabilizer.to_string(),
        });
    }
    Ok(r)
}

/// Limits for a factorization search.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub chambers: ChamberGuard,
    pub lattice: LatticeGuard,
    pub group: GroupGuard,
    /// Try the restricted-root candidates before the exhaustive search.
    pub reduced_first: bool,
}

/// How the base search ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Witness found among the restricted-root candidates.
    Candidates,
    /// Witness found, or all bases exhausted, in the full search.
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub name: String,
    pub rank: usize,
    pub hyperplanes: usize,
    pub exponents: Vec<u32>,
    pub chambers: usize,
    pub bases_tried: usize,
    pub mode: SearchMode,
    pub witness: Option<SignVector>,
    pub witness_zeta: Option<Polynomial>,
    /// Distinct `ζ` over all bases with multiplicities (one base per
    /// antipodal pair), recorded when no witness exists.
    pub zetas: BTreeMap<Polynomial, usize>,
    pub seconds: f64,
}

impl FactorizationReport {
    pub fn factors(&self) -> bool {
        self.witness.is_some()
    }

    pub fn verdict(&self) -> Verdict {
        if self.factors() {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn exponent_string(&self) -> String {
        let e: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        e.join(" ")
    }

    pub fn summary(&self) -> String {
        if self.factors() {
            format!("factors: yes; exponents {}; witness found", self.exponent_string())
        } else {
            format!("factors: no (all bases exhausted); exponents {}", self.exponent_string())
        }
    }

    pub const ROW_HEADER: &'static str = "name\trank\thyperplanes\texponents\tchambers\tverdict\twitness\tseconds";

    /// One tab-separated row; `seconds` is `-` unless `timing` is set, so
    /// that output is reproducible.
    pub fn row(&self, timing: bool) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.name,
            self.rank,
            self.hyperplanes,
            self.exponent_string(),
            self.chambers,
            self.verdict(),
            self.witness.as_ref().map_or("-".to_string(), |w| w.to_string()),
            if timing { format!("{:.3}", self.seconds) } else { "-".to_string() }
        )
    }
}

impl fmt::Display for FactorizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arrangement: {}", self.name)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "hyperplanes: {}", self.hyperplanes)?;
        writeln!(f, "exponents: {}", self.exponent_string())?;
        writeln!(f, "chambers: {}", self.chambers)?;
        writeln!(f, "bases tried: {}", self.bases_tried)?;
        if let (Some(w), Some(z)) = (&self.witness, &self.witness_zeta) {
            writeln!(f, "witness: {w}")?;
            writeln!(f, "zeta: {z}")?;
        } else {
            for (z, n) in &self.zetas {
                writeln!(f, "zeta x{n}: {z}")?;
            }
        }
        write!(f, "{}", self.summary())
    }
}

/// Indices of one chamber from each antipodal pair, in canonical order.
pub fn antipodal_representatives(set: &ChamberSet) -> Vec<usize> {
    (0..set.len())
        .filter(|&i| set.antipode(i).is_none_or(|j| i <= j))
        .collect()
}

/// First base among `bases` (canonical order) whose `ζ` is the product
/// `F(exponents)`.
pub fn first_factoring_base(set: &ChamberSet, exponents: &[u32], bases: &[usize]) -> Option<(usize, Polynomial)> {
    bases.par_iter().find_map_first(|&b| {
        let z = set.zeta(b);
        factors_as(&z, exponents).then_some((b, z))
    })
}

/// Searches all base regions of `a` (one per antipodal pair) for one whose
/// `ζ` factors according to the exponents of `a`.
pub fn search_factoring_base(name: &str, a: &Arrangement, opts: &SearchOptions) -> Result<FactorizationReport> {
    let start = Instant::now();
    let set = enumerate_chambers(a, opts.chambers)?;
    search_with_candidates(name, a, &set, opts, None, start)
}

fn search_with_candidates(
    name: &str,
    a: &Arrangement,
    set: &ChamberSet,
    opts: &SearchOptions,
    candidates: Option<Vec<usize>>,
    start: Instant,
) -> Result<FactorizationReport> {
    let exponents = a.exponents(opts.lattice)?;
    let mut report = FactorizationReport {
        name: name.to_string(),
        rank: a.rank(),
        hyperplanes: a.len(),
        exponents: exponents.values.clone(),
        chambers: set.len(),
        bases_tried: 0,
        mode: SearchMode::Exhaustive,
        witness: None,
        witness_zeta: None,
        zetas: BTreeMap::new(),
        seconds: 0.0,
    };
    let exps = &exponents.values;
    if let Some(c) = candidates {
        report.bases_tried += c.len();
        if let Some((b, z)) = first_factoring_base(&set, exps, &c) {
            report.mode = SearchMode::Candidates;
            report.witness = Some(set.get(b).signs.clone());
            report.witness_zeta = Some(z);
            report.seconds = start.elapsed().as_secs_f64();
            return Ok(report);
        }
    }
    let bases = antipodal_representatives(&set);
    match first_factoring_base(&set, exps, &bases) {
        Some((b, z)) => {
            report.bases_tried += bases.iter().position(|&x| x == b).unwrap() + 1;
            report.witness = Some(set.get(b).signs.clone());
            report.witness_zeta = Some(z);
        }
        None => {
            report.bases_tried += bases.len();
            report.zetas = set.zeta_census(&bases);
        }
    }
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Factorization search for a restriction, optionally trying the
/// restricted-root candidates first. A negative verdict always comes from
/// the exhaustive search.
pub fn check_restriction(r: &Restriction, opts: &SearchOptions) -> Result<FactorizationReport> {
    let start = Instant::now();
    let set = enumerate_chambers(&r.restricted, opts.chambers)?;
    let candidates = if opts.reduced_first {
        match candidate_bases_via_restricted_roots(r, &set, opts.group) {
            Ok(c) => Some(c),
            Err(e) if e.is_guard() => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    search_with_candidates(&r.name, &r.restricted, &set, opts, candidates, start)
}

/// Outcome of one corpus row.
#[derive(Clone, Debug)]
pub enum RowOutcome {
    Done(FactorizationReport),
    Skipped(String),
    Failed { message: String, guard: bool },
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub name: String,
    pub expected: Verdict,
    pub outcome: RowOutcome,
}

impl TableRow {
    /// False only when a computed verdict disagrees with the expected one.
    pub fn matches(&self) -> bool {
        match &self.outcome {
            RowOutcome::Done(r) => r.verdict() == self.expected,
            _ => true,
        }
    }

    pub fn row(&self, timing: bool) -> String {
        match &self.outcome {
            RowOutcome::Done(r) => format!(
                "{}\t{}\t{}",
                r.row(timing),
                self.expected,
                if self.matches() { "ok" } else { "MISMATCH" }
            ),
            RowOutcome::Skipped(why) => format!("{}\t-\t-\t-\t-\tskipped\t-\t-\t{}\t{}", self.name, self.expected, why),
            RowOutcome::Failed { message, .. } => {
                format!("{}\t-\t-\t-\t-\terror\t-\t-\t{}\t{}", self.name, self.expected, message)
            }
        }
    }

    pub const HEADER: &'static str =
        "name\trank\thyperplanes\texponents\tchambers\tverdict\twitness\tseconds\texpected\tstatus";
}

/// Runs every preset of the corpus.
pub fn theorem_table(corpus: &Corpus, opts: &SearchOptions) -> Vec<TableRow> {
    corpus
        .presets()
        .iter()
        .map(|p| {
            let outcome = match &p.skip {
                Some(why) => RowOutcome::Skipped(why.clone()),
                None => match restriction_by_name(p).and_then(|r| check_restriction(&r, opts)) {
                    Ok(rep) => RowOutcome::Done(rep),
                    Err(e) => RowOutcome::Failed {
                        message: e.to_string(),
                        guard: e.is_guard(),
                    },
                },
            };
            TableRow {
                name: p.name.clone(),
                expected: p.expected,
                outcome,
            }
        })
        .collect()
}

/// `ζ(A(W)_X, B*)` for `X` cut out by the simple roots `subset`, with `B*`
/// the chamber of the localization containing the dominant chamber, and
/// the exponents of the parabolic subgroup.
pub fn localization_zeta(rs: &RootSystem, subset: &[usize]) -> Result<(Polynomial, Vec<u32>)> {
    let a = rs.coxeter_arrangement();
    let eqs: Vec<Vector> = subset.iter().map(|&i| rs.normal(&rs.simple_roots()[i])).collect();
    let flat = a.flat_from_equations(&eqs)?;
    let local = a.localize(&flat)?;
    let set = enumerate_chambers(&local, ChamberGuard::default())?;
    let base = set
        .locate(&local, &rs.dominant_point())
        .ok_or(Error::BaseNotAChamber)?;
    Ok((set.zeta(base), rs.subset_type(subset).exponents()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dpk::{build_dpk, DpkParams};
    use crate::poly::f_product;

    fn preset(name: &str, simple: &[usize]) -> Preset {
        Preset::new(name, RootSpec::Simple(simple.to_vec()), Verdict::Yes).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let r = restriction_by_name(&preset("A4/A1", &[1])).unwrap();
        assert_eq!(r.restricted.len(), 6);
        let a3 = RootSystem::from_label("A3").unwrap().coxeter_arrangement();
        assert!(crate::arrangement::find_isomorphism(&r.restricted, &a3).is_some());

        let r = restriction_by_name(&preset("D4/A1", &[1])).unwrap();
        assert_eq!(r.restricted.len(), 7);
        let d31 = build_dpk(DpkParams::new(3, 1).unwrap());
        assert!(crate::arrangement::find_isomorphism(&r.restricted, &d31).is_some());

        let r = restriction_by_name(&preset("E6/A3", &[2, 4, 5])).unwrap();
        assert_eq!(r.restricted.rank(), 3);
        let e = r.restricted.exponents(LatticeGuard::default()).unwrap();
        assert_eq!(e.sum() as usize, r.restricted.len());

        let bad = preset("E6/A3", &[1, 2, 3]);
        assert!(matches!(restriction_by_name(&bad), Err(Error::PresetTypeMismatch { .. })));
    }

    #[test]
    fn search_examples() {
        let opts = SearchOptions::default();
        let a3 = RootSystem::from_label("A3").unwrap().coxeter_arrangement();
        let rep = search_factoring_base("A3", &a3, &opts).unwrap();
        assert!(rep.factors());
        assert_eq!(rep.witness_zeta.unwrap(), f_product(&[1, 2, 3]));

        let d51 = build_dpk(DpkParams::new(5, 1).unwrap());
        let rep = search_factoring_base("D:5:1", &d51, &opts).unwrap();
        assert!(rep.factors());
        assert_eq!(rep.exponents, vec![1, 3, 5, 5, 7]);
        assert_eq!(rep.summary(), "factors: yes; exponents 1 3 5 5 7; witness found");
    }

    #[test]
    fn rank_two_always_factors() {
        // four generic lines in the plane: exponents {1, 3}, every base gives
        // 1 + 2t + 2t^2 + 2t^3 + t^4
        let a = Arrangement::from_normals(
            2,
            crate::scalar::Field::Rational,
            [[1, 0], [0, 1], [1, 1], [1, 3]].iter().map(|r| Vector::from_ints(r)),
        )
        .unwrap();
        let rep = search_factoring_base("four lines", &a, &SearchOptions::default()).unwrap();
        assert!(rep.factors());
        assert_eq!(rep.bases_tried, 1);
    }

    #[test]
    fn localizations_factor() {
        for w in ["A3", "B3", "D4"] {
            let rs = RootSystem::from_label(w).unwrap();
            let n = rs.rank();
            for m in 0u32..1 << n {
                let j: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
                let (z, e) = localization_zeta(&rs, &j).unwrap();
                assert_eq!(z, f_product(&e), "{w} {j:?}");
            }
        }
    }
}
