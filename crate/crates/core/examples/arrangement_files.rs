//! Reading and writing arrangement files, and the restriction and
//! localization of an arrangement at a flat given by equations.
//!
//!     cargo run --release --example arrangement_files

use coxeter_restrict::arrangement::{Arrangement, LatticeGuard};
use coxeter_restrict::scalar::Vector;

const B3: &str = "\
# the type-B arrangement in three coordinates
dim 3 field Q
1 0 0
0 1 0
0 0 1
1 -1 0
1 1 0
1 0 -1
1 0 1
0 1 -1
0 1 1
";

fn main() -> coxeter_restrict::Result<()> {
    let a: Arrangement = B3.parse()?;
    let dir = std::env::temp_dir().join("coxrestrict-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("b3.arr");
    a.write_file(&path)?;
    let back = Arrangement::read_file(&path)?;
    println!("round trip through {}: {}", path.display(), back == a);

    // The flat x = y.
    let flat = a.flat_from_equations(&[Vector::from_ints(&[1, -1, 0])])?;
    let restricted = a.restrict(&flat)?;
    let localized = a.localize(&flat)?;
    println!("restriction to x = y:\n{restricted}");
    println!("localization at x = y has {} hyperplanes", localized.len());
    println!("exponents of the restriction: {}", restricted.exponents(LatticeGuard::default())?);
    Ok(())
}
