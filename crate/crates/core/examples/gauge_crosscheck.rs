//! Recomputes the projected commutator in the Landau gauge on a momentum grid
//! and compares it with the exact symmetric-gauge value while refining the grid.
//!
//! ```bash
//! cargo run -p landau-ncg --release --example gauge_crosscheck
//! ```

use landau_ncg::landau_gauge::{convergence_study, KGrid, DEFAULT_HALF_RANGE};
use landau_ncg::projection::projected_commutator_xy;
use landau_ncg::{Cutoffs, PhysicalUnits};

fn main() -> landau_ncg::Result<()> {
    let u = PhysicalUnits::natural();
    let grid = KGrid::for_units(33, DEFAULT_HALF_RANGE, &u)?;
    let rows = convergence_study(grid, 2, 3, &u)?;
    println!("   M  keep   Landau gauge    symmetric   |error|     order");
    for r in &rows {
        let exact = projected_commutator_xy(Cutoffs::new(r.keep, r.keep + 3)?, r.keep, &u)?;
        let order = r
            .observed_order
            .map(|o| format!("{o:.3}"))
            .unwrap_or_default();
        println!(
            "{:>4}  {:>4}  {:>+12.8}i  {:>+8.4}i  {:>9.2e}  {:>8}",
            r.points, r.keep, r.coefficient.im, exact.top_coefficient.im, r.abs_error, order
        );
    }
    Ok(())
}
