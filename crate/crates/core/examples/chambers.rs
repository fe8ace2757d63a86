//! Chambers of an arrangement with their sign vectors, witnesses and walls,
//! and the rank of every chamber above a chosen base.
//!
//!     cargo run --release --example chambers [FILE]
//!
//! Without a file the three lines `x = 0`, `y = 0`, `x = y` are used.

use coxeter_restrict::arrangement::Arrangement;
use coxeter_restrict::chambers::{enumerate_chambers, walls, ChamberGuard};

const DEFAULT: &str = "\
# three lines through the origin
dim 2 field Q
1 0
0 1
1 -1
";

fn main() -> coxeter_restrict::Result<()> {
    let a: Arrangement = match std::env::args().nth(1) {
        Some(path) => Arrangement::read_file(path.as_ref())?,
        None => DEFAULT.parse()?,
    };
    let set = enumerate_chambers(&a, ChamberGuard::default())?;
    println!("{} hyperplanes, rank {}, {} chambers", a.len(), a.rank(), set.len());
    let ranks = set.ranks(0);
    for (i, c) in set.iter().enumerate() {
        println!(
            "{}  witness ({})  rank {}  walls {:?}  antipode {:?}",
            c.signs,
            c.witness,
            ranks[i],
            walls(&a, c),
            set.antipode(i)
        );
    }
    println!("zeta from the first chamber: {}", set.zeta(0));
    Ok(())
}
