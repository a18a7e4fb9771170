//! Checks the symmetric-gauge construction: canonical commutators, the
//! angular momentum, and the two Hamiltonian assemblies, all on states away
//! from the truncation edge.

use landau_ncg::ladder::{interior_max_abs, HamiltonianForm, SymmetricGaugeOperators};
use landau_ncg::{ladder, Basis, Complex64, Cutoffs, OperatorMatrix, PhysicalUnits};

fn main() -> landau_ncg::Result<()> {
    let c = Cutoffs::new(6, 6)?;
    let u = PhysicalUnits::new(1.0, 2.0, 1.0, 0.5, 1.5)?;
    let ops = SymmetricGaugeOperators::build(c, u)?;
    let ih = OperatorMatrix::identity(Basis::Landau(c)).scale(Complex64::new(0.0, u.hbar()));

    let rows = [
        ("[x, px] - i hbar", ops.x.commutator(&ops.px)?.sub(&ih)?, 1),
        ("[y, py] - i hbar", ops.y.commutator(&ops.py)?.sub(&ih)?, 1),
        ("[x, py]", ops.x.commutator(&ops.py)?, 1),
        ("[y, px]", ops.y.commutator(&ops.px)?, 1),
        (
            "x py - y px - L",
            ops.x
                .matmul(&ops.py)?
                .sub(&ops.y.matmul(&ops.px)?)?
                .sub(&ops.l)?,
            1,
        ),
        (
            "H ladder - H quadratic",
            ops.h
                .sub(&ladder::build_h(c, &u, HamiltonianForm::Quadratic)?)?,
            2,
        ),
    ];
    for (name, m, margin) in rows {
        println!(
            "{name:<24} interior {:.2e}   whole matrix {:.2e}",
            interior_max_abs(&m, c, margin),
            m.max_abs()
        );
    }
    Ok(())
}
