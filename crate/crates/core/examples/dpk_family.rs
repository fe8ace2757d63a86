//! The arrangements `D_p^k` between type D (`k = 0`) and type B (`k = p`):
//! brute force over region codes against the closed form, the slice sums
//! and the identity for `Δ_p^k`.
//!
//!     cargo run --release --example dpk_family [P_MAX]

use coxeter_restrict::dpk::{self, CodeGuard, DpkParams, DpkReport};
use coxeter_restrict::poly::f_product;

fn main() -> coxeter_restrict::Result<()> {
    let p_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    println!("{}", DpkReport::HEADER);
    for p in 2..=p_max {
        for k in 0..=p {
            println!("{}", dpk::report(DpkParams::new(p, k)?, CodeGuard::default())?);
        }
    }

    let params = DpkParams::new(4, 2)?;
    println!("\nslices of {params} by the value at position 1:");
    for positive in [true, false] {
        for m in 1..=4 {
            let s = dpk::slice_sum(params, m, positive)?;
            let sign = if positive { '+' } else { '-' };
            println!("  x_1 = {sign}{m}: {s}");
        }
    }

    for (p, k) in [(3, 0), (4, 1), (5, 5)] {
        let d = dpk::delta(p, k)?;
        let expected = f_product(&[(p + k - 1) as u32, (2 * p - 3) as u32]);
        println!("Delta({p},{k}) = {d}  [F({},{}): {}]", p + k - 1, 2 * p - 3, d == expected);
    }
    Ok(())
}
