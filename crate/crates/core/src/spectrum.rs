//! Landau-level spectrum and degeneracy checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{Cutoffs, OperatorMatrix};
use crate::format::sig15;
use crate::ladder::{build_h, build_l, HamiltonianForm};
use crate::units::PhysicalUnits;

/// Largest `|A − A†|` accepted by [`hermitian_eigenvalues`].
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Ascending eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues(a: &OperatorMatrix) -> Result<Vec<f64>> {
    let deviation = a.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let d = a.dim();
    let m = DMatrix::from_row_slice(d, d, a.entries());
    let mut values: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub landau_cutoff: usize,
    pub degeneracy_cutoff: usize,
    #[serde(serialize_with = "fixed_vec")]
    pub eigenvalues: Vec<f64>,
    #[serde(serialize_with = "fixed_vec")]
    pub expected: Vec<f64>,
    #[serde(serialize_with = "crate::format::fixed")]
    pub max_abs_error: f64,
    /// Level index → number of eigenvalues assigned to it.
    pub degeneracy_table: BTreeMap<usize, usize>,
    /// Largest `|ΔE − ℏω|` between adjacent distinct levels.
    #[serde(serialize_with = "crate::format::fixed")]
    pub max_spacing_error: f64,
    /// Largest entry of `[H, L]`.
    #[serde(serialize_with = "crate::format::fixed")]
    pub h_l_commutator: f64,
    pub ok: bool,
}

fn fixed_vec<S: serde::Serializer>(v: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    v.iter()
        .copied()
        .map(crate::format::Fixed)
        .collect::<Vec<_>>()
        .serialize(s)
}

impl SpectrumReport {
    /// Plain-text table: one row per level.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>5}  {:>22}  {:>12}",
            "level", "energy", "multiplicity"
        );
        let mut offset = 0;
        for (&level, &mult) in &self.degeneracy_table {
            let energy = self.eigenvalues.get(offset).copied().unwrap_or(f64::NAN);
            offset += mult;
            let _ = writeln!(out, "{level:>5}  {:>22}  {mult:>12}", sig15(energy));
        }
        let _ = writeln!(
            out,
            "max |E - hbar w (n + 1/2)| = {}",
            sig15(self.max_abs_error)
        );
        let _ = writeln!(
            out,
            "max spacing error         = {}",
            sig15(self.max_spacing_error)
        );
        let _ = writeln!(
            out,
            "max |[H, L]|              = {}",
            sig15(self.h_l_commutator)
        );
        let _ = writeln!(out, "ok = {}", self.ok);
        out
    }
}

/// Diagonalizes the ladder-form Hamiltonian and compares with `ℏω (n + 1/2)`.
pub fn verify_spectrum(c: Cutoffs, u: &PhysicalUnits) -> Result<SpectrumReport> {
    let h = build_h(c, u, HamiltonianForm::Ladder)?;
    let l = build_l(c, u)?;
    let eigenvalues = hermitian_eigenvalues(&h)?;
    let quantum = u.level_spacing();
    let tol = 1e-12 * (quantum * c.landau_dim() as f64).max(1.0);

    let expected: Vec<f64> = (0..=c.landau_cutoff())
        .flat_map(|n| std::iter::repeat_n(quantum * (n as f64 + 0.5), c.degeneracy_dim()))
        .collect();
    let max_abs_error = eigenvalues
        .iter()
        .zip(&expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    let mut degeneracy_table = BTreeMap::new();
    for &e in &eigenvalues {
        let level = (e / quantum - 0.5).round().max(0.0) as usize;
        *degeneracy_table.entry(level).or_insert(0) += 1;
    }

    let mut distinct: Vec<f64> = Vec::new();
    for &e in &eigenvalues {
        if distinct.last().is_none_or(|&last| e - last > 0.5 * quantum) {
            distinct.push(e);
        }
    }
    let max_spacing_error = distinct
        .windows(2)
        .map(|w| (w[1] - w[0] - quantum).abs())
        .fold(0.0, f64::max);

    let h_l_commutator = h.commutator(&l)?.max_abs();

    let multiplicities_ok = degeneracy_table.len() == c.landau_dim()
        && degeneracy_table
            .iter()
            .enumerate()
            .all(|(i, (&level, &mult))| level == i && mult == c.degeneracy_dim());
    let ok = max_abs_error <= tol
        && max_spacing_error <= tol
        && h_l_commutator == 0.0
        && multiplicities_ok;

    Ok(SpectrumReport {
        landau_cutoff: c.landau_cutoff(),
        degeneracy_cutoff: c.degeneracy_cutoff(),
        eigenvalues,
        expected,
        max_abs_error,
        degeneracy_table,
        max_spacing_error,
        h_l_commutator,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::Basis;
    use crate::ladder::build_xy;
    use num_complex::Complex64;

    fn cut(n: usize, j: usize) -> Cutoffs {
        Cutoffs::new(n, j).unwrap()
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let d = OperatorMatrix::from_real_diagonal(Basis::Mode(3), &[3.0, 1.0, 2.0]).unwrap();
        let e = hermitian_eigenvalues(&d).unwrap();
        for (a, b) in e.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn eigenvalues_of_dense_hermitian() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        let m = OperatorMatrix::from_entries(
            Basis::Mode(2),
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(2.0, 0.0),
            ],
        )
        .unwrap();
        let e = hermitian_eigenvalues(&m).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-13 && (e[1] - 3.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = crate::fock::annihilation_matrix(3).unwrap();
        match hermitian_eigenvalues(&a) {
            Err(Error::NotHermitian { deviation }) => {
                assert!((deviation - 2f64.sqrt()).abs() < 1e-14)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ladder_hamiltonian_eigenvalues() {
        let h = build_h(
            cut(2, 1),
            &PhysicalUnits::natural(),
            HamiltonianForm::Ladder,
        )
        .unwrap();
        let e = hermitian_eigenvalues(&h).unwrap();
        let expected = [0.5, 0.5, 1.5, 1.5, 2.5, 2.5];
        assert_eq!(e.len(), 6);
        for (a, b) in e.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn commutator_over_minus_i_is_hermitian() {
        let (x, y) = build_xy(cut(1, 2), &PhysicalUnits::natural()).unwrap();
        let k = x.commutator(&y).unwrap().scale(Complex64::new(0.0, 1.0));
        let e = hermitian_eigenvalues(&k).unwrap();
        // i[x, y] = [α, α†], diagonal A(j) − [b, b†]_nn with A = (1, 1, −2), [b, b†] = (1, −1).
        let mut expected = vec![0.0, 0.0, -3.0, 2.0, 2.0, -1.0];
        expected.sort_by(f64::total_cmp);
        for (a, b) in e.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-12, "{e:?}");
        }
    }

    #[test]
    fn verify_examples() {
        let r = verify_spectrum(cut(3, 0), &PhysicalUnits::natural()).unwrap();
        assert!(r.ok);
        assert_eq!(
            r.degeneracy_table,
            BTreeMap::from([(0, 1), (1, 1), (2, 1), (3, 1)])
        );
        for (a, b) in r.eigenvalues.iter().zip([0.5, 1.5, 2.5, 3.5]) {
            assert!((a - b).abs() < 1e-12);
        }

        let r = verify_spectrum(cut(0, 4), &PhysicalUnits::natural()).unwrap();
        assert!(r.ok);
        assert_eq!(r.degeneracy_table, BTreeMap::from([(0, 5)]));

        let u = PhysicalUnits::natural().with_field(2.0).unwrap();
        let r = verify_spectrum(cut(3, 0), &u).unwrap();
        assert!(r.ok);
        for (a, b) in r.eigenvalues.iter().zip([1.0, 3.0, 5.0, 7.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn table_lists_every_level() {
        let r = verify_spectrum(cut(2, 1), &PhysicalUnits::natural()).unwrap();
        let t = r.to_table();
        assert_eq!(
            t.lines().filter(|l| l.trim_end().ends_with(" 2")).count(),
            3
        );
        assert!(t.contains("ok = true"));
    }
}
