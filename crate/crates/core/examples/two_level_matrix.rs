//! Keeps the two lowest Landau levels and prints the Landau-diagonal of
//! `[x, y]` for each degeneracy state, including the `j = J` edge artifacts.

use landau_ncg::fock::BasisIndex;
use landau_ncg::projection::{kept_block, projected_commutator_matrix};
use landau_ncg::{Cutoffs, PhysicalUnits};

fn main() -> landau_ncg::Result<()> {
    let c = Cutoffs::new(3, 4)?;
    let comm = projected_commutator_matrix(c, 1, &PhysicalUnits::natural())?;
    let block = kept_block(&comm, 1)?;
    println!("kept-block diagonal of [x, y] (n, j):");
    for n in 0..=1 {
        for j in 0..=c.degeneracy_cutoff() {
            let f = c.flatten(BasisIndex::new(n, j))?;
            let z = block.get(f, f);
            let tag = if j == c.degeneracy_cutoff() {
                "  <- degeneracy edge"
            } else {
                ""
            };
            println!("  ({n}, {j})  {:+.3}{:+.3}i{tag}", z.re, z.im);
        }
    }
    Ok(())
}
