//! Text format for arrangement files.
//!
//! ```text
//! # comment
//! dim 3 field Q
//! 1 -1 0
//! 0 1 -1
//! ```
//!
//! Each normal is one line of whitespace-separated scalars (`p`, `p/q`,
//! `p/q+r/s*r5`). Everything after `#` on a line is ignored.

use std::fmt;
use std::str::FromStr;

use super::Arrangement;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar, Vector};

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {} field {}", self.dim, self.field)?;
        for n in &self.normals {
            writeln!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Arrangement {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::parse("line 1", "missing header `dim n field Q|Qr5`"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (dim, field) = match words.as_slice() {
            ["dim", n, "field", fld] => {
                let dim: usize = n
                    .parse()
                    .map_err(|_| Error::parse(format!("line {lineno}"), format!("bad dimension {n:?}")))?;
                let field: Field = fld
                    .parse()
                    .map_err(|_| Error::parse(format!("line {lineno}"), format!("bad field {fld:?}")))?;
                (dim, field)
            }
            _ => {
                return Err(Error::parse(
                    format!("line {lineno}"),
                    "expected header `dim n field Q|Qr5`",
                ))
            }
        };
        let mut normals = Vec::new();
        for (lineno, line) in lines {
            let coords = line
                .split_whitespace()
                .map(|w| {
                    w.parse::<Scalar>()
                        .map_err(|e| Error::parse(format!("line {lineno}"), e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != dim {
                return Err(Error::parse(
                    format!("line {lineno}"),
                    format!("expected {dim} coordinates, found {}", coords.len()),
                ));
            }
            let v = Vector(coords);
            if !v.0.iter().all(|x| field.contains(x)) {
                return Err(Error::parse(format!("line {lineno}"), "sqrt(5) coordinate in a Q arrangement"));
            }
            if v.is_zero() {
                return Err(Error::parse(format!("line {lineno}"), "zero normal"));
            }
            normals.push(v);
        }
        Arrangement::from_normals(dim, field, normals)
    }
}

impl Arrangement {
    pub fn read_file(path: &std::path::Path) -> Result<Self> {
        std::fs::read_to_string(path)?.parse()
    }

    pub fn write_file(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_string())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# golden\ndim 2 field Qr5\n1 1/2+1/2*r5   # a line\n\n0 1\n";
        let a: Arrangement = text.parse().unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.field(), Field::Golden);
        let again: Arrangement = a.to_string().parse().unwrap();
        assert_eq!(again, a);
    }

    #[test]
    fn errors_name_the_line() {
        let err = "dim 2 field Q\n1 0\n1 r5\n".parse::<Arrangement>().unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = "dim 2 field Q\n1 0 0\n".parse::<Arrangement>().unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!("field Q\n".parse::<Arrangement>().is_err());
        assert!("".parse::<Arrangement>().is_err());
        assert!("dim 2 field Q\n0 0\n".parse::<Arrangement>().is_err());
    }
}
