//! Localizing a reflection arrangement at a parabolic flat gives the
//! reflection arrangement of the parabolic subgroup; from the chamber
//! containing the dominant one its rank-generating function factors.
//!
//!     cargo run --release --example localization [TYPE]

use coxeter_restrict::poly::f_product;
use coxeter_restrict::roots::RootSystem;
use coxeter_restrict::theorem::localization_zeta;

fn main() -> coxeter_restrict::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D4".into());
    let rs = RootSystem::from_label(&name)?;
    let n = rs.rank();
    for mask in 1u32..(1 << n) {
        let j: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let (zeta, exps) = localization_zeta(&rs, &j)?;
        let ok = zeta == f_product(&exps);
        println!("{:?} {:>8}  {zeta}  {}", j, rs.subset_type(&j).to_string(), if ok { "factors" } else { "DOES NOT FACTOR" });
    }
    Ok(())
}
