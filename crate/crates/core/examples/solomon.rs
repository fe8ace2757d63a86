//! The dominant chamber of a reflection arrangement: its rank-generating
//! function equals the Poincaré polynomial of the group, which is the
//! product of `1 + t + ... + t^e` over the exponents.
//!
//!     cargo run --release --example solomon [TYPE ...]

use coxeter_restrict::chambers::{enumerate_chambers, ChamberGuard};
use coxeter_restrict::poly::f_product;
use coxeter_restrict::roots::{GroupGuard, RootSystem};

fn main() -> coxeter_restrict::Result<()> {
    let mut types: Vec<String> = std::env::args().skip(1).collect();
    if types.is_empty() {
        types = ["A3", "B3", "D4", "H3", "I2(5)", "F4"].map(String::from).to_vec();
    }
    for name in &types {
        let rs = RootSystem::from_label(name)?;
        let a = rs.coxeter_arrangement();
        let set = enumerate_chambers(&a, ChamberGuard::default())?;
        let dominant = set.locate(&a, &rs.dominant_point()).expect("dominant point is generic");
        let zeta = set.zeta(dominant);
        let w = rs.poincare_polynomial(GroupGuard::default())?;
        let f = f_product(&rs.exponents());
        println!("{name}: {} chambers", set.len());
        println!("  zeta  = {zeta}");
        println!("  W(t) = {w}");
        println!("  equal: {}", zeta == w && w == f);
    }
    Ok(())
}
