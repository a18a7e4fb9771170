//! Projection onto the lowest Landau levels and the projected coordinate commutator.
//!
//! Restricting the intermediate-state sums in `x·y` and `y·x` to levels
//! `n ≤ keep` is the same as multiplying the projected operators `PxP·PyP`.
//! Between degeneracy states away from the `j` truncation edge the result is
//! exactly `−i (keep + 1) ℓ²` on the top kept level and zero everywhere else.
//! Elements touching `j = J` are truncation artifacts of the finite
//! degeneracy cutoff and are reported separately.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fock::{Basis, BasisIndex, Cutoffs, OperatorMatrix, DEFAULT_TOL};
use crate::format::{Fixed, FixedComplex};
use crate::ladder::{build_alpha, build_xy};
use crate::units::PhysicalUnits;

/// Diagonal 0/1 matrix selecting the states with `n ≤ keep`.
pub fn projector(c: Cutoffs, keep: usize) -> Result<OperatorMatrix> {
    check_keep(c, keep)?;
    let diag: Vec<f64> = c
        .indices()
        .map(|idx| if idx.n <= keep { 1.0 } else { 0.0 })
        .collect();
    OperatorMatrix::from_real_diagonal(Basis::Landau(c), &diag)
}

fn check_keep(c: Cutoffs, keep: usize) -> Result<()> {
    if keep > c.landau_cutoff() {
        return Err(Error::KeepExceedsCutoff {
            keep,
            cutoff: c.landau_cutoff(),
        });
    }
    Ok(())
}

/// `P · op · P`.
pub fn project(op: &OperatorMatrix, p: &OperatorMatrix) -> Result<OperatorMatrix> {
    p.matmul(op)?.matmul(p)
}

/// Copies the leading `n ≤ keep` block of an operator on `Landau(c)` into a
/// matrix on `Cutoffs(keep, J)`.
pub fn kept_block(op: &OperatorMatrix, keep: usize) -> Result<OperatorMatrix> {
    let Basis::Landau(c) = op.basis() else {
        return Err(Error::BasisMismatch {
            left: format!("{:?}", op.basis()),
            right: "Landau".to_owned(),
        });
    };
    check_keep(c, keep)?;
    let kept = Cutoffs::new(keep, c.degeneracy_cutoff())?;
    Ok(OperatorMatrix::from_fn(Basis::Landau(kept), |r, s| {
        op.get(r, s)
    }))
}

/// `[PxP, PyP]` on the full truncated space.
pub fn projected_commutator_matrix(
    c: Cutoffs,
    keep: usize,
    u: &PhysicalUnits,
) -> Result<OperatorMatrix> {
    let p = projector(c, keep)?;
    let (x, y) = build_xy(c, u)?;
    project(&x, &p)?.commutator(&project(&y, &p)?)
}

/// Second route to the kept-block commutator: `−iℓ² [α_T, α_T†]`, with `α`
/// built directly on the corner-truncated space `Cutoffs(keep, J)`.
pub fn truncated_alpha_commutator(
    keep: usize,
    degeneracy_cutoff: usize,
    u: &PhysicalUnits,
) -> Result<OperatorMatrix> {
    let alpha = build_alpha(Cutoffs::new(keep, degeneracy_cutoff)?)?;
    Ok(alpha
        .commutator(&alpha.dagger())?
        .scale(Complex64::new(0.0, -u.magnetic_length_sq())))
}

/// A kept-block element that touches the degeneracy truncation edge `j = J`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryArtifact {
    pub row: BasisIndex,
    pub col: BasisIndex,
    #[serde(serialize_with = "crate::format::fixed_complex")]
    pub value: Complex64,
}

/// Outcome of a projected-commutator computation.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub cutoffs: Cutoffs,
    pub keep: usize,
    /// Common diagonal value on the top kept level, in absolute units.
    pub top_coefficient: Complex64,
    /// `−i (keep + 1) ℓ²`.
    pub expected_top: Complex64,
    /// Largest modulus of any other interior element of the kept block.
    pub max_offtop_residual: f64,
    pub boundary_artifacts: Vec<BoundaryArtifact>,
    /// False when the top-level diagonal varies across interior `j`.
    pub top_uniform: bool,
    /// Absolute tolerance the checks were held to.
    pub tolerance: f64,
    pub ok: bool,
}

impl CommutatorReport {
    /// `|top − expected| / |expected|`.
    pub fn relative_error(&self) -> f64 {
        (self.top_coefficient - self.expected_top).norm() / self.expected_top.norm()
    }
}

/// Serializes as `{N, J, keep, top_coefficient, max_offtop_residual, boundary_artifacts, ok}`.
impl Serialize for CommutatorReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CommutatorReport", 7)?;
        st.serialize_field("N", &self.cutoffs.landau_cutoff())?;
        st.serialize_field("J", &self.cutoffs.degeneracy_cutoff())?;
        st.serialize_field("keep", &self.keep)?;
        st.serialize_field("top_coefficient", &FixedComplex(self.top_coefficient))?;
        st.serialize_field("max_offtop_residual", &Fixed(self.max_offtop_residual))?;
        st.serialize_field("boundary_artifacts", &self.boundary_artifacts)?;
        st.serialize_field("ok", &self.ok)?;
        st.end()
    }
}

pub fn expected_top(keep: usize, u: &PhysicalUnits) -> Complex64 {
    Complex64::new(0.0, -((keep + 1) as f64) * u.magnetic_length_sq())
}

/// Projects `x` and `y` onto `n ≤ keep` and analyzes `[PxP, PyP]` on the kept block.
pub fn projected_commutator_xy(
    c: Cutoffs,
    keep: usize,
    u: &PhysicalUnits,
) -> Result<CommutatorReport> {
    let comm = projected_commutator_matrix(c, keep, u)?;
    let expected = expected_top(keep, u);
    let tol = DEFAULT_TOL * expected.norm().max(1.0);
    Ok(analyze_kept_block(&comm, c, keep, expected, tol))
}

fn analyze_kept_block(
    comm: &OperatorMatrix,
    c: Cutoffs,
    keep: usize,
    expected: Complex64,
    tol: f64,
) -> CommutatorReport {
    let big_j = c.degeneracy_cutoff();
    let kept: Vec<BasisIndex> = c.indices().filter(|idx| idx.n <= keep).collect();
    let flat = |idx: BasisIndex| idx.n * c.degeneracy_dim() + idx.j;

    let top: Vec<Complex64> = (0..big_j)
        .map(|j| {
            let f = flat(BasisIndex::new(keep, j));
            comm.get(f, f)
        })
        .collect();
    let (top_coefficient, top_uniform) = if top.is_empty() {
        (Complex64::new(f64::NAN, f64::NAN), false)
    } else {
        let mean = top.iter().sum::<Complex64>() / top.len() as f64;
        let spread = top.iter().map(|z| (z - top[0]).norm()).fold(0.0, f64::max);
        (mean, spread <= tol)
    };

    let mut residual: f64 = 0.0;
    let mut artifacts = Vec::new();
    for &r in &kept {
        for &s in &kept {
            let v = comm.get(flat(r), flat(s));
            if r.j == big_j || s.j == big_j {
                if v.norm() > tol {
                    artifacts.push(BoundaryArtifact {
                        row: r,
                        col: s,
                        value: v,
                    });
                }
            } else if !(r == s && r.n == keep) {
                residual = residual.max(v.norm());
            }
        }
    }

    let ok = top_uniform && (top_coefficient - expected).norm() <= tol && residual <= tol;
    CommutatorReport {
        cutoffs: c,
        keep,
        top_coefficient,
        expected_top: expected,
        max_offtop_residual: residual,
        boundary_artifacts: artifacts,
        top_uniform,
        tolerance: tol,
        ok,
    }
}

/// One reported report per `keep = 0..=N`.
pub fn sweep(c: Cutoffs, u: &PhysicalUnits) -> Result<Vec<CommutatorReport>> {
    (0..=c.landau_cutoff())
        .map(|keep| projected_commutator_xy(c, keep, u))
        .collect()
}

/// [`sweep`] with the `keep` values evaluated in parallel; output order is preserved.
pub fn sweep_parallel(c: Cutoffs, u: &PhysicalUnits) -> Result<Vec<CommutatorReport>> {
    (0..=c.landau_cutoff())
        .into_par_iter()
        .map(|keep| projected_commutator_xy(c, keep, u))
        .collect()
}

/// A diagonal element of the unprojected commutator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanEntry {
    pub n: usize,
    pub j: usize,
    #[serde(serialize_with = "crate::format::fixed_complex")]
    pub value: Complex64,
}

/// Diagonal of `[x, y]` on the full truncated space, split by region.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FullSpaceScan {
    /// `n ≤ N − 1` and `j ≤ J − 1`: every value vanishes.
    pub interior: Vec<ScanEntry>,
    /// `n = N` or `j = J`: truncation artifacts.
    pub boundary: Vec<ScanEntry>,
    /// Largest modulus of any off-diagonal element.
    #[serde(serialize_with = "crate::format::fixed")]
    pub max_offdiagonal: f64,
}

impl FullSpaceScan {
    pub fn max_interior_abs(&self) -> f64 {
        self.interior
            .iter()
            .map(|e| e.value.norm())
            .fold(0.0, f64::max)
    }
}

/// Computes `[x, y]` without any projection.
pub fn full_space_scan(c: Cutoffs, u: &PhysicalUnits) -> Result<FullSpaceScan> {
    let (x, y) = build_xy(c, u)?;
    let comm = x.commutator(&y)?;
    let mut interior = Vec::new();
    let mut boundary = Vec::new();
    for (f, idx) in c.indices().enumerate() {
        let entry = ScanEntry {
            n: idx.n,
            j: idx.j,
            value: comm.get(f, f),
        };
        if idx.n < c.landau_cutoff() && idx.j < c.degeneracy_cutoff() {
            interior.push(entry);
        } else {
            boundary.push(entry);
        }
    }
    let d = comm.dim();
    let mut max_offdiagonal: f64 = 0.0;
    for r in 0..d {
        for s in 0..d {
            if r != s {
                max_offdiagonal = max_offdiagonal.max(comm.get(r, s).norm());
            }
        }
    }
    Ok(FullSpaceScan {
        interior,
        boundary,
        max_offdiagonal,
    })
}
