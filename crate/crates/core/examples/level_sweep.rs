//! Sweeps the number of kept levels and prints the top coefficient
//! `−i (keep + 1) ℓ²`, in natural units and with a doubled field.
//!
//! ```bash
//! cargo run -p landau-ncg --example level_sweep -- 8
//! ```

use landau_ncg::projection::sweep_parallel;
use landau_ncg::{Cutoffs, PhysicalUnits};

fn main() -> landau_ncg::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let c = Cutoffs::new(n, n + 3)?;
    let strong = PhysicalUnits::natural().with_field(2.0)?;
    let natural = sweep_parallel(c, &PhysicalUnits::natural())?;
    let doubled = sweep_parallel(c, &strong)?;
    println!("keep   Im top (B=1)   Im top (B=2)");
    for (a, b) in natural.iter().zip(&doubled) {
        println!(
            "{:>4}   {:>12.6}   {:>12.6}",
            a.keep, a.top_coefficient.im, b.top_coefficient.im
        );
    }
    Ok(())
}
