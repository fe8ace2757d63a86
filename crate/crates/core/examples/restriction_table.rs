//! Runs the built-in corpus of named restrictions and prints one row per
//! preset, comparing the computed verdict with the expected one.
//!
//!     cargo run --release --example restriction_table [NAME ...]

use std::time::Instant;

use coxeter_restrict::theorem::{theorem_table, Corpus, SearchOptions, TableRow};

fn main() -> coxeter_restrict::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let corpus = Corpus::builtin().select(&names)?;
    let opts = SearchOptions {
        reduced_first: true,
        ..SearchOptions::default()
    };
    println!("{}", TableRow::HEADER);
    let start = Instant::now();
    let mut bad = 0;
    for p in corpus.presets() {
        let one = Corpus::builtin().select(&[p.name.clone()])?;
        for row in theorem_table(&one, &opts) {
            println!("{}", row.row(true));
            bad += usize::from(!row.matches());
        }
    }
    eprintln!("{} rows, {bad} mismatches, {:.1}s", corpus.presets().len(), start.elapsed().as_secs_f64());
    Ok(())
}
