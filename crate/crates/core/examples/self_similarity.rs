//! Restricting the braid arrangement `A(A_n)` or the type-B arrangement
//! `A(B_n)` to one of its hyperplanes gives an arrangement linearly
//! isomorphic to the same type one rank down.
//!
//!     cargo run --release --example self_similarity

use coxeter_restrict::arrangement::find_isomorphism;
use coxeter_restrict::roots::RootSystem;

fn main() -> coxeter_restrict::Result<()> {
    for (w, n) in [("A", 4), ("B", 3)] {
        let big = RootSystem::from_label(&format!("{w}{n}"))?.coxeter_arrangement();
        let small = RootSystem::from_label(&format!("{w}{}", n - 1))?.coxeter_arrangement();
        println!("{w}{n}: {} hyperplanes; {w}{}: {}", big.len(), n - 1, small.len());
        for h in 0..big.len() {
            let restricted = big.restrict(&big.flat_of(&[h]))?;
            let iso = find_isomorphism(&restricted, &small);
            println!(
                "  restrict to ({}): {} hyperplanes, isomorphic: {}",
                big.normals()[h],
                restricted.len(),
                iso.is_some()
            );
        }
    }
    Ok(())
}
