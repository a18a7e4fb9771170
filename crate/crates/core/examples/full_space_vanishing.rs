//! Without projection the coordinates commute everywhere except on the
//! truncation boundary, where the `n = N` and `j = J` rows carry
//! `−i(N+1)ℓ²` and `+i(J+1)ℓ²`.

use landau_ncg::projection::full_space_scan;
use landau_ncg::{Cutoffs, PhysicalUnits};

fn main() -> landau_ncg::Result<()> {
    let c = Cutoffs::new(5, 4)?;
    let scan = full_space_scan(c, &PhysicalUnits::natural())?;
    println!(
        "{} interior diagonal elements, max |[x, y]| = {:.2e}",
        scan.interior.len(),
        scan.max_interior_abs()
    );
    println!("boundary elements:");
    for e in &scan.boundary {
        println!("  (n={}, j={})  {:+.3}i", e.n, e.j, e.value.im);
    }
    Ok(())
}
