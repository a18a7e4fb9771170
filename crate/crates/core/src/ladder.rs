//! Symmetric-gauge operators on a truncated two-mode Fock space.
//!
//! Mode `a` carries the degeneracy index `j` and mode `b` carries the Landau
//! index `n`. With `α = a + b†` and `ℓ² = ℏc/eB`:
//!
//! ```text
//! x  = ℓ/√2 (α + α†)                y  = iℓ/√2 (α − α†)
//! px = iℏ/(2√2 ℓ) (a† − a + b† − b)  py = ℏ/(2√2 ℓ) (a + a† − b − b†)
//! H  = ℏω (b†b + 1/2)                L  = ℏ (a†a − b†b)
//! ```
//!
//! The momenta follow from inverting the definitions of `a` and `b` in terms
//! of `x ± iy` and `px ± i py`. Every operator is the corner truncation of its
//! infinite matrix, so identities such as `[x, px] = iℏ` hold exactly only
//! between states that sit away from the truncation edge (see [`interior_states`]).

use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{annihilation_matrix, mode_identity, Basis, Cutoffs, OperatorMatrix};
use crate::units::PhysicalUnits;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Degeneracy-mode annihilator `a = 1 ⊗ a_J`.
pub fn build_a(c: Cutoffs) -> Result<OperatorMatrix> {
    mode_identity(c.landau_dim())?.kron(&annihilation_matrix(c.degeneracy_dim())?)
}

/// Landau-mode annihilator `b = b_N ⊗ 1`.
pub fn build_b(c: Cutoffs) -> Result<OperatorMatrix> {
    annihilation_matrix(c.landau_dim())?.kron(&mode_identity(c.degeneracy_dim())?)
}

/// `α = a + b†`.
pub fn build_alpha(c: Cutoffs) -> Result<OperatorMatrix> {
    build_a(c)?.add(&build_b(c)?.dagger())
}

/// Planar coordinates `(x, y)` built from `α`.
pub fn build_xy(c: Cutoffs, u: &PhysicalUnits) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let alpha = build_alpha(c)?;
    let alpha_dag = alpha.dagger();
    let s = u.magnetic_length() / 2f64.sqrt();
    let x = alpha.add(&alpha_dag)?.scale_real(s);
    let y = alpha.sub(&alpha_dag)?.scale(I * s);
    Ok((x, y))
}

/// Canonical momenta `(px, py)`.
pub fn build_momenta(c: Cutoffs, u: &PhysicalUnits) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let a = build_a(c)?;
    let b = build_b(c)?;
    let (ad, bd) = (a.dagger(), b.dagger());
    let s = u.hbar() / (2.0 * 2f64.sqrt() * u.magnetic_length());
    let px = ad.sub(&a)?.add(&bd)?.sub(&b)?.scale(I * s);
    let py = a.add(&ad)?.sub(&b)?.sub(&bd)?.scale_real(s);
    Ok((px, py))
}

/// Planar angular momentum `L = ℏ (a†a − b†b)`, diagonal with entry `ℏ (j − n)`.
pub fn build_l(c: Cutoffs, u: &PhysicalUnits) -> Result<OperatorMatrix> {
    let diag: Vec<f64> = c
        .indices()
        .map(|idx| u.hbar() * (idx.j as f64 - idx.n as f64))
        .collect();
    OperatorMatrix::from_real_diagonal(Basis::Landau(c), &diag)
}

/// How [`build_h`] assembles the Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianForm {
    /// `ℏω (b†b + 1/2)`.
    Ladder,
    /// `(px² + py²)/2m + m/2 (ω/2)² (x² + y²) − (ω/2) L` from the coordinate matrices.
    Quadratic,
}

impl FromStr for HamiltonianForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ladder" => Ok(Self::Ladder),
            "quadratic" => Ok(Self::Quadratic),
            other => Err(Error::UnknownForm(other.to_owned())),
        }
    }
}

pub fn build_h(c: Cutoffs, u: &PhysicalUnits, form: HamiltonianForm) -> Result<OperatorMatrix> {
    let omega = u.cyclotron_frequency();
    match form {
        HamiltonianForm::Ladder => {
            let b = build_b(c)?;
            let number = b.dagger().matmul(&b)?;
            let half = OperatorMatrix::identity(Basis::Landau(c)).scale_real(0.5);
            Ok(number.add(&half)?.scale_real(u.hbar() * omega))
        }
        HamiltonianForm::Quadratic => {
            let (x, y) = build_xy(c, u)?;
            let (px, py) = build_momenta(c, u)?;
            let l = build_l(c, u)?;
            let m = u.mass();
            let half_omega = 0.5 * omega;
            let kinetic = px.matmul(&px)?.add(&py.matmul(&py)?)?.scale_real(0.5 / m);
            let potential = x
                .matmul(&x)?
                .add(&y.matmul(&y)?)?
                .scale_real(0.5 * m * half_omega * half_omega);
            kinetic.add(&potential)?.sub(&l.scale_real(half_omega))
        }
    }
}

/// Every symmetric-gauge operator on one truncated basis.
#[derive(Debug, Clone)]
pub struct SymmetricGaugeOperators {
    pub cutoffs: Cutoffs,
    pub units: PhysicalUnits,
    pub a: OperatorMatrix,
    pub b: OperatorMatrix,
    pub alpha: OperatorMatrix,
    pub x: OperatorMatrix,
    pub y: OperatorMatrix,
    pub px: OperatorMatrix,
    pub py: OperatorMatrix,
    pub h: OperatorMatrix,
    pub l: OperatorMatrix,
}

impl SymmetricGaugeOperators {
    pub fn build(c: Cutoffs, u: PhysicalUnits) -> Result<Self> {
        let (x, y) = build_xy(c, &u)?;
        let (px, py) = build_momenta(c, &u)?;
        Ok(Self {
            cutoffs: c,
            units: u,
            a: build_a(c)?,
            b: build_b(c)?,
            alpha: build_alpha(c)?,
            x,
            y,
            px,
            py,
            h: build_h(c, &u, HamiltonianForm::Ladder)?,
            l: build_l(c, &u)?,
        })
    }

    /// Looks an operator up by its short name (`a`, `b`, `alpha`, `x`, `y`, `px`, `py`, `H`, `L`).
    pub fn by_name(&self, name: &str) -> Result<&OperatorMatrix> {
        Ok(match name {
            "a" => &self.a,
            "b" => &self.b,
            "alpha" => &self.alpha,
            "x" => &self.x,
            "y" => &self.y,
            "px" => &self.px,
            "py" => &self.py,
            "H" | "h" => &self.h,
            "L" | "l" => &self.l,
            other => return Err(Error::UnknownOperator(other.to_owned())),
        })
    }
}

/// Flat indices of states at distance `≥ margin` from both truncation edges
/// (`n ≤ N − margin`, `j ≤ J − margin`).
pub fn interior_states(c: Cutoffs, margin: usize) -> Vec<usize> {
    c.indices()
        .filter(|idx| {
            idx.n + margin <= c.landau_cutoff() && idx.j + margin <= c.degeneracy_cutoff()
        })
        .map(|idx| idx.n * c.degeneracy_dim() + idx.j)
        .collect()
}

/// Largest `|op(r, s)|` with both `r` and `s` interior at the given margin.
pub fn interior_max_abs(op: &OperatorMatrix, c: Cutoffs, margin: usize) -> f64 {
    let states = interior_states(c, margin);
    let mut worst: f64 = 0.0;
    for &r in &states {
        for &s in &states {
            worst = worst.max(op.get(r, s).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{BasisIndex, DEFAULT_TOL};

    fn cut(n: usize, j: usize) -> Cutoffs {
        Cutoffs::new(n, j).unwrap()
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn natural() -> PhysicalUnits {
        PhysicalUnits::natural()
    }

    #[test]
    fn a_counts_degeneracy_quanta() {
        let a = build_a(cut(0, 1)).unwrap();
        assert_eq!(
            a.dagger().matmul(&a).unwrap().diagonal(),
            vec![re(0.0), re(1.0)]
        );
        let c = cut(1, 1);
        let a = build_a(c).unwrap();
        let num = a.dagger().matmul(&a).unwrap();
        assert_eq!(num.diagonal(), vec![re(0.0), re(1.0), re(0.0), re(1.0)]);
        assert!(
            num.sub(
                &OperatorMatrix::from_real_diagonal(Basis::Landau(c), &[0.0, 1.0, 0.0, 1.0])
                    .unwrap()
            )
            .unwrap()
            .max_abs()
                == 0.0
        );
    }

    #[test]
    fn a_annihilates_j_zero() {
        let c = cut(3, 4);
        let a = build_a(c).unwrap();
        for n in 0..=3 {
            let col = c.flatten(BasisIndex::new(n, 0)).unwrap();
            assert!((0..c.dim()).all(|r| a.get(r, col) == re(0.0)));
        }
    }

    #[test]
    fn b_counts_landau_quanta() {
        let b = build_b(cut(1, 0)).unwrap();
        assert_eq!(
            b.dagger().matmul(&b).unwrap().diagonal(),
            vec![re(0.0), re(1.0)]
        );
        let b = build_b(cut(2, 0)).unwrap();
        assert_eq!(b.get(0, 1), re(1.0));
        assert_eq!(b.get(1, 2), re(2f64.sqrt()));
        let c = cut(2, 3);
        let b = build_b(c).unwrap();
        let num = b.dagger().matmul(&b).unwrap();
        for idx in c.indices() {
            let f = c.flatten(idx).unwrap();
            assert!((num.get(f, f) - re(idx.n as f64)).norm() < 1e-14);
        }
    }

    #[test]
    fn mode_commutators() {
        for (n, j) in [(0, 0), (1, 2), (3, 3), (4, 1)] {
            let c = cut(n, j);
            let a = build_a(c).unwrap();
            let b = build_b(c).unwrap();
            assert_eq!(a.commutator(&b).unwrap().max_abs(), 0.0);
            assert_eq!(a.commutator(&b.dagger()).unwrap().max_abs(), 0.0);
            let caa = a.commutator(&a.dagger()).unwrap();
            let cbb = b.commutator(&b.dagger()).unwrap();
            for idx in c.indices() {
                let f = c.flatten(idx).unwrap();
                let ea = if idx.j == j { -(j as f64) } else { 1.0 };
                let eb = if idx.n == n { -(n as f64) } else { 1.0 };
                assert!((caa.get(f, f) - re(ea)).norm() < DEFAULT_TOL);
                assert!((cbb.get(f, f) - re(eb)).norm() < DEFAULT_TOL);
            }
            let diag_a = OperatorMatrix::from_diagonal(Basis::Landau(c), &caa.diagonal()).unwrap();
            assert_eq!(caa, diag_a);
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(build_alpha(cut(0, 0)).unwrap().max_abs(), 0.0);
        let c = cut(1, 0);
        let alpha = build_alpha(c).unwrap();
        assert_eq!(alpha, build_b(c).unwrap().dagger());
        assert_eq!(alpha.get(1, 0), re(1.0));
        // Hand-multiplied 4x4 oracle: c(n, j) = A(j) + Bb(n), A = (1, -1), Bb = (-1, 1).
        let alpha = build_alpha(cut(1, 1)).unwrap();
        let comm = alpha.commutator(&alpha.dagger()).unwrap();
        let expected =
            OperatorMatrix::from_real_diagonal(Basis::Landau(cut(1, 1)), &[0.0, -2.0, 2.0, 0.0])
                .unwrap();
        assert!(comm.approx_eq(&expected, DEFAULT_TOL));
    }

    #[test]
    fn xy_examples() {
        let (x, y) = build_xy(cut(0, 0), &natural()).unwrap();
        assert_eq!(x.max_abs(), 0.0);
        assert_eq!(y.max_abs(), 0.0);
        let c = cut(1, 1);
        let (x, y) = build_xy(c, &natural()).unwrap();
        let comm = x.commutator(&y).unwrap();
        let expected = OperatorMatrix::from_diagonal(
            Basis::Landau(c),
            &[
                re(0.0),
                Complex64::new(0.0, 2.0),
                Complex64::new(0.0, -2.0),
                re(0.0),
            ],
        )
        .unwrap();
        assert!(comm.approx_eq(&expected, DEFAULT_TOL));
    }

    #[test]
    fn coordinate_commutator_is_alpha_commutator() {
        let u = PhysicalUnits::new(1.3, 2.1, 0.7, 1.9, 0.4).unwrap();
        for (n, j) in [(0, 3), (2, 2), (3, 5), (5, 1)] {
            let c = cut(n, j);
            let (x, y) = build_xy(c, &u).unwrap();
            let alpha = build_alpha(c).unwrap();
            let lhs = x.commutator(&y).unwrap();
            let rhs = alpha
                .commutator(&alpha.dagger())
                .unwrap()
                .scale(Complex64::new(0.0, -u.magnetic_length_sq()));
            assert!(lhs.approx_eq(&rhs, 1e-12 * u.magnetic_length_sq().max(1.0)));
        }
    }

    #[test]
    fn hermiticity() {
        let u = PhysicalUnits::new(1.0, 2.0, 3.0, 0.5, 1.5).unwrap();
        for (n, j) in [(0, 0), (1, 4), (3, 3), (6, 2)] {
            let ops = SymmetricGaugeOperators::build(cut(n, j), u).unwrap();
            for name in ["x", "y", "px", "py", "H", "L"] {
                assert_eq!(
                    ops.by_name(name).unwrap().hermitian_deviation(),
                    0.0,
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn canonical_relations_on_interior() {
        let c = cut(4, 4);
        let (x, _) = build_xy(c, &natural()).unwrap();
        let (px, py) = build_momenta(c, &natural()).unwrap();
        let origin = c.flatten(BasisIndex::new(0, 0)).unwrap();
        let xpx = x.commutator(&px).unwrap();
        assert!((xpx.get(origin, origin) - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let xpy = x.commutator(&py).unwrap();
        assert!(xpy.get(origin, origin).norm() < 1e-12);
    }

    #[test]
    fn canonical_relations_with_units() {
        let u = PhysicalUnits::new(0.8, 3.0, 2.0, 1.7, 0.6).unwrap();
        let c = cut(5, 4);
        let (x, y) = build_xy(c, &u).unwrap();
        let (px, py) = build_momenta(c, &u).unwrap();
        let ih = OperatorMatrix::identity(Basis::Landau(c)).scale(Complex64::new(0.0, u.hbar()));
        let checks = [
            x.commutator(&px).unwrap().sub(&ih).unwrap(),
            y.commutator(&py).unwrap().sub(&ih).unwrap(),
            x.commutator(&py).unwrap(),
            y.commutator(&px).unwrap(),
            px.commutator(&py).unwrap(),
        ];
        for m in &checks {
            assert!(interior_max_abs(m, c, 1) < 1e-12);
        }
        // Boundary contamination does exist.
        assert!(checks[0].max_abs() > 0.1);
    }

    #[test]
    fn angular_momentum_matches_coordinate_form() {
        let u = PhysicalUnits::new(1.0, 1.5, 1.0, 0.9, 2.0).unwrap();
        let c = cut(4, 5);
        let (x, y) = build_xy(c, &u).unwrap();
        let (px, py) = build_momenta(c, &u).unwrap();
        let from_coords = x.matmul(&py).unwrap().sub(&y.matmul(&px).unwrap()).unwrap();
        let diff = from_coords.sub(&build_l(c, &u).unwrap()).unwrap();
        assert!(interior_max_abs(&diff, c, 1) < 1e-12);
    }

    #[test]
    fn hamiltonian_examples() {
        let c = cut(2, 0);
        let h = build_h(c, &natural(), HamiltonianForm::Ladder).unwrap();
        assert!(h.approx_eq(
            &OperatorMatrix::from_real_diagonal(Basis::Landau(c), &[0.5, 1.5, 2.5]).unwrap(),
            1e-15
        ));
        let c = cut(3, 4);
        let h = build_h(c, &natural(), HamiltonianForm::Ladder).unwrap();
        assert_eq!(
            h.commutator(&build_l(c, &natural()).unwrap())
                .unwrap()
                .max_abs(),
            0.0
        );
        let c = cut(5, 5);
        let hq = build_h(c, &natural(), HamiltonianForm::Quadratic).unwrap();
        assert!((hq.get(0, 0) - re(0.5)).norm() < 1e-12);
    }

    #[test]
    fn hamiltonian_forms_agree_on_interior() {
        for u in [
            natural(),
            PhysicalUnits::new(1.2, 2.5, 0.8, 1.1, 0.3).unwrap(),
        ] {
            let c = cut(6, 5);
            let hl = build_h(c, &u, HamiltonianForm::Ladder).unwrap();
            let hq = build_h(c, &u, HamiltonianForm::Quadratic).unwrap();
            let diff = hl.sub(&hq).unwrap();
            assert!(interior_max_abs(&diff, c, 2) < 1e-10 * u.level_spacing().max(1.0));
        }
    }

    #[test]
    fn unknown_form_is_rejected() {
        assert_eq!(
            "ladder".parse::<HamiltonianForm>().unwrap(),
            HamiltonianForm::Ladder
        );
        assert!(matches!(
            "cubic".parse::<HamiltonianForm>(),
            Err(Error::UnknownForm(s)) if s == "cubic"
        ));
    }

    #[test]
    fn angular_momentum_examples() {
        let u = PhysicalUnits::new(1.0, 1.0, 1.0, 2.0, 1.0).unwrap();
        let l = build_l(cut(1, 1), &u).unwrap();
        assert_eq!(l.diagonal(), vec![re(0.0), re(2.0), re(-2.0), re(0.0)]);
        for n in 0..5 {
            assert_eq!(build_l(cut(n, n), &u).unwrap().trace(), re(0.0));
        }
        let l = build_l(cut(0, 2), &natural()).unwrap();
        assert_eq!(l.diagonal(), vec![re(0.0), re(1.0), re(2.0)]);
    }

    #[test]
    fn unknown_operator_name() {
        let ops = SymmetricGaugeOperators::build(cut(1, 1), natural()).unwrap();
        assert!(ops.by_name("z").is_err());
    }
}
