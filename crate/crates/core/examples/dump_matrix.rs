//! Serializes an operator to the `{dim, entries}` JSON schema.
//!
//! ```bash
//! cargo run -p landau-ncg --example dump_matrix -- alpha > alpha.json
//! ```

use landau_ncg::ladder::SymmetricGaugeOperators;
use landau_ncg::{Cutoffs, PhysicalUnits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "x".to_owned());
    let ops = SymmetricGaugeOperators::build(Cutoffs::new(1, 1)?, PhysicalUnits::natural())?;
    println!("{}", serde_json::to_string_pretty(ops.by_name(&name)?)?);
    Ok(())
}
