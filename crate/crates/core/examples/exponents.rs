//! Characteristic polynomials from the intersection lattice and the
//! exponents they split into, for reflection arrangements and restrictions.
//!
//!     cargo run --release --example exponents [SOURCE ...]
//!
//! A source is `W` or `W/T`, e.g. `E6/A1A2`.

use coxeter_restrict::arrangement::LatticeGuard;
use coxeter_restrict::roots::RootSystem;
use coxeter_restrict::theorem::{restrict_by_roots, split_name};

fn main() -> coxeter_restrict::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["B4", "H3", "D5/A1", "E6/A3", "E7/A2A2"].map(String::from).to_vec();
    }
    for name in &names {
        let a = if name.contains('/') {
            let (w, t) = split_name(name)?;
            let rs = RootSystem::build(w)?;
            let j = rs.simple_subsets_of_type(&t).into_iter().next().expect("type occurs");
            let roots: Vec<_> = j.iter().map(|&i| rs.simple_roots()[i].clone()).collect();
            restrict_by_roots(name, &rs, &roots)?.restricted
        } else {
            RootSystem::from_label(name)?.coxeter_arrangement()
        };
        let lattice = a.intersection_lattice(LatticeGuard::default())?;
        let chi = a.characteristic_polynomial(LatticeGuard::default())?;
        let e = a.exponents(LatticeGuard::default())?;
        println!("{name}: {} hyperplanes, {} flats", a.len(), lattice.len());
        println!("  chi(t) = {chi}");
        println!("  exponents {e}; sum {}", e.sum());
    }
    Ok(())
}
