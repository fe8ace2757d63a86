use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::roots::{CoxeterType, RootSystem, TypeLabel};
use crate::scalar::{Scalar, Vector};

const BUILTIN: &str = include_str!("../../data/presets.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
        })
    }
}

/// How the flat `X` is pinned down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSpec {
    /// Simple roots, 1-based Bourbaki indices.
    Simple(Vec<usize>),
    /// Positive roots given by integer coefficients in the simple roots.
    Coefficients(Vec<Vec<i64>>),
}

/// A named restriction `W/T` with its expected verdict.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub group: CoxeterType,
    pub stabilizer: TypeLabel,
    pub spec: RootSpec,
    pub expected: Verdict,
    pub skip: Option<String>,
    pub note: Option<String>,
}

/// Splits `E7/(A1A3)''` into `E7` and `A1A3`; primes are dropped and
/// powers such as `A2^2` expanded.
pub fn split_name(name: &str) -> Result<(CoxeterType, TypeLabel)> {
    let (w, t) = name
        .split_once('/')
        .ok_or_else(|| Error::parse(name, "expected W/T"))?;
    let t: String = t.chars().filter(|c| !matches!(c, '(' | ')' | '\'')).collect();
    Ok((w.parse()?, expand_powers(&t).parse()?))
}

/// `A1^2A3` becomes `A1A1A3`.
fn expand_powers(t: &str) -> String {
    let mut out = String::new();
    let mut last = String::new();
    let mut chars = t.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '^' {
            let mut n = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                n.push(*d);
                chars.next();
            }
            for _ in 1..n.parse::<usize>().unwrap_or(1) {
                out.push_str(&last);
            }
            continue;
        }
        if c.is_ascii_uppercase() {
            last.clear();
        }
        last.push(c);
        out.push(c);
    }
    out
}

impl Preset {
    pub fn new(name: &str, spec: RootSpec, expected: Verdict) -> Result<Self> {
        let (group, stabilizer) = split_name(name)?;
        Ok(Preset {
            name: name.to_string(),
            group,
            stabilizer,
            spec,
            expected,
            skip: None,
            note: None,
        })
    }

    /// The roots whose hyperplanes cut out `X`.
    pub fn roots(&self, rs: &RootSystem) -> Result<Vec<Vector>> {
        let n = rs.rank();
        let bad = |why: String| Error::parse(format!("preset {}", self.name), why);
        match &self.spec {
            RootSpec::Simple(j) => j
                .iter()
                .map(|&i| {
                    if i == 0 || i > n {
                        Err(bad(format!("simple root index {i} outside 1..={n}")))
                    } else {
                        Ok(rs.simple_roots()[i - 1].clone())
                    }
                })
                .collect(),
            RootSpec::Coefficients(cs) => cs
                .iter()
                .map(|c| {
                    if c.len() != n {
                        return Err(bad(format!("root needs {n} coefficients")));
                    }
                    let mut v = Vector::zeros(rs.ambient_dim());
                    for (ci, a) in c.iter().zip(rs.simple_roots()) {
                        v = v.axpy(&Scalar::from_int(*ci), a);
                    }
                    if !rs.is_root(&v) {
                        return Err(bad(format!("{c:?} is not a root")));
                    }
                    Ok(v)
                })
                .collect(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPreset {
    name: String,
    simple: Option<Vec<usize>>,
    roots: Option<Vec<Vec<i64>>>,
    expected: Verdict,
    skip: Option<String>,
    note: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCorpus {
    preset: Vec<RawPreset>,
}

/// A list of presets, usually read from `data/presets.toml`.
#[derive(Clone, Debug)]
pub struct Corpus {
    presets: Vec<Preset>,
}

impl Corpus {
    pub fn builtin() -> Self {
        BUILTIN.parse().expect("built-in preset table is valid")
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        std::fs::read_to_string(path)?.parse()
    }

    pub fn presets(&self) -> &[Preset] {
        &self.presets
    }

    pub fn get(&self, name: &str) -> Option<&Preset> {
        self.presets.iter().find(|p| p.name == name)
    }

    /// Keeps the presets whose name is in `names` (all if empty).
    pub fn select(&self, names: &[String]) -> Result<Corpus> {
        if names.is_empty() {
            return Ok(self.clone());
        }
        let presets = names
            .iter()
            .map(|n| {
                self.get(n)
                    .cloned()
                    .ok_or_else(|| Error::parse(n.as_str(), "no such preset"))
            })
            .collect::<Result<_>>()?;
        Ok(Corpus { presets })
    }
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let raw: RawCorpus = toml::from_str(text).map_err(|e| Error::parse("preset table", e.to_string()))?;
        let presets = raw
            .preset
            .into_iter()
            .map(|r| {
                let spec = match (r.simple, r.roots) {
                    (Some(s), None) => RootSpec::Simple(s),
                    (None, Some(c)) => RootSpec::Coefficients(c),
                    _ => {
                        return Err(Error::parse(
                            format!("preset {}", r.name),
                            "give exactly one of `simple` and `roots`",
                        ))
                    }
                };
                let mut p = Preset::new(&r.name, spec, r.expected)?;
                p.skip = r.skip;
                p.note = r.note;
                Ok(p)
            })
            .collect::<Result<_>>()?;
        Ok(Corpus { presets })
    }
}
