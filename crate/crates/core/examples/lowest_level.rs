//! Projects onto the lowest Landau level and prints `[x, y]`, which comes out
//! as `−iℏc/eB` on every degeneracy state away from the truncation edge.
//!
//! ```bash
//! cargo run -p landau-ncg --example lowest_level
//! ```

use landau_ncg::projection::projected_commutator_xy;
use landau_ncg::{Cutoffs, PhysicalUnits};

fn main() -> landau_ncg::Result<()> {
    for units in [
        PhysicalUnits::natural(),
        PhysicalUnits::new(1.0, 4.0, 1.0, 1.0, 1.0)?,
    ] {
        let report = projected_commutator_xy(Cutoffs::new(3, 6)?, 0, &units)?;
        println!(
            "B = {}: [x, y] = {:+.12}i  (expected {:+.12}i, l^2 = {})",
            units.field(),
            report.top_coefficient.im,
            report.expected_top.im,
            units.magnetic_length_sq(),
        );
        println!(
            "  off-level residual {:.1e}, ok = {}",
            report.max_offtop_residual, report.ok
        );
    }
    Ok(())
}
