//! All rank-generating functions of a restriction, one base per antipodal
//! pair, and whether any of them factors by the exponents.
//!
//!     cargo run --release --example base_search [W/T]

use coxeter_restrict::chambers::enumerate_chambers;
use coxeter_restrict::poly::factors_as;
use coxeter_restrict::theorem::{antipodal_representatives, restriction_by_name, Corpus, SearchOptions};

fn main() -> coxeter_restrict::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "E8/A1A4".into());
    let corpus = Corpus::builtin();
    let preset = corpus.select(&[name])?.presets()[0].clone();
    let r = restriction_by_name(&preset)?;
    let opts = SearchOptions::default();
    let exps = r.restricted.exponents(opts.lattice)?.values;
    let set = enumerate_chambers(&r.restricted, opts.chambers)?;
    let bases = antipodal_representatives(&set);
    println!(
        "{}: {} hyperplanes, exponents {:?}, {} chambers, {} bases",
        preset.name,
        r.restricted.len(),
        exps,
        set.len(),
        bases.len()
    );
    for (zeta, count) in set.zeta_census(&bases) {
        let mark = if factors_as(&zeta, &exps) { "factors" } else { "" };
        println!("{count:>5}  {zeta}  {mark}");
    }
    Ok(())
}
