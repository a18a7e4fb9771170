//! Diagonalizes the ladder Hamiltonian: each level `ℏω (n + 1/2)` appears
//! `J + 1` times, and `[H, L] = 0`.

use landau_ncg::spectrum::verify_spectrum;
use landau_ncg::{Cutoffs, PhysicalUnits};

fn main() -> landau_ncg::Result<()> {
    let c = Cutoffs::new(4, 3)?;
    for b in [1.0, 2.0] {
        let report = verify_spectrum(c, &PhysicalUnits::natural().with_field(b)?)?;
        println!("B = {b}");
        print!("{}", report.to_table());
    }
    Ok(())
}
