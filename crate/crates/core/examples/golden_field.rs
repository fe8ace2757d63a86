//! Exact arithmetic in Q(√5): sign decisions, canonical normals, and the
//! non-crystallographic root systems built on them.
//!
//!     cargo run --release --example golden_field

use coxeter_restrict::chambers::{enumerate_chambers, ChamberGuard};
use coxeter_restrict::roots::RootSystem;
use coxeter_restrict::scalar::{canonicalize_normal, Scalar, Vector};

fn main() -> coxeter_restrict::Result<()> {
    for text in ["-1+1/2*r5", "9/4-r5", "0", "1/2+1/2*r5"] {
        let s: Scalar = text.parse()?;
        println!("{text:>12}  sign {:+}  approx {:.6}", s.sign(), s.to_f64());
    }
    let phi = Scalar::golden_ratio();
    println!("phi^2 - phi - 1 = {}", &(&(&phi * &phi) - &phi) - &Scalar::one());

    let v = Vector(vec![Scalar::zero(), -&phi, Scalar::from_int(2)]);
    println!("canonical form of ({v}) is ({})", canonicalize_normal(&v)?);

    for w in ["I2(5)", "H3", "H4"] {
        let rs = RootSystem::from_label(w)?;
        let a = rs.coxeter_arrangement();
        let n = enumerate_chambers(&a, ChamberGuard::default())?.len();
        println!("{w}: {} positive roots, {} chambers", rs.positive_roots().len(), n);
    }
    Ok(())
}
