//! Dense complex matrices over truncated single-mode and two-mode Fock bases.
//!
//! Two-mode states `|n, j⟩` are flattened n-major: `flat = n (J + 1) + j`, so
//! the states with `n ≤ keep` form a contiguous leading block.

use std::fmt;

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format::FixedComplex;

/// Largest composite dimension the dense engine accepts.
pub const MAX_DIM: usize = 10_000;

/// Default absolute tolerance for matrix comparisons.
pub const DEFAULT_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Truncation of the two-mode space: Landau levels `n = 0..=N`, degeneracy quanta `j = 0..=J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cutoffs {
    landau: usize,
    degeneracy: usize,
}

impl Cutoffs {
    pub fn new(landau_cutoff: usize, degeneracy_cutoff: usize) -> Result<Self> {
        let dim = landau_cutoff
            .checked_add(1)
            .zip(degeneracy_cutoff.checked_add(1))
            .and_then(|(p, q)| p.checked_mul(q))
            .unwrap_or(usize::MAX);
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim,
                limit: MAX_DIM,
            });
        }
        Ok(Self {
            landau: landau_cutoff,
            degeneracy: degeneracy_cutoff,
        })
    }

    /// `N`, the highest retained Landau level.
    pub fn landau_cutoff(&self) -> usize {
        self.landau
    }

    /// `J`, the highest retained degeneracy quantum.
    pub fn degeneracy_cutoff(&self) -> usize {
        self.degeneracy
    }

    pub fn landau_dim(&self) -> usize {
        self.landau + 1
    }

    pub fn degeneracy_dim(&self) -> usize {
        self.degeneracy + 1
    }

    /// `(N + 1)(J + 1)`.
    pub fn dim(&self) -> usize {
        self.landau_dim() * self.degeneracy_dim()
    }

    pub fn flatten(&self, idx: BasisIndex) -> Result<usize> {
        flatten(idx, *self)
    }

    pub fn unflatten(&self, flat: usize) -> Result<BasisIndex> {
        unflatten(flat, *self)
    }

    /// All basis states in flatten order.
    pub fn indices(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        (0..=self.landau).flat_map(move |n| (0..=self.degeneracy).map(move |j| BasisIndex { n, j }))
    }
}

/// A two-mode basis label: Landau index `n` (b quanta) and degeneracy index `j` (a quanta).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisIndex {
    pub n: usize,
    pub j: usize,
}

impl BasisIndex {
    pub fn new(n: usize, j: usize) -> Self {
        Self { n, j }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.j)
    }
}

pub fn flatten(idx: BasisIndex, c: Cutoffs) -> Result<usize> {
    if idx.n > c.landau {
        return Err(Error::IndexOutOfRange {
            component: "n",
            value: idx.n,
            max: c.landau,
        });
    }
    if idx.j > c.degeneracy {
        return Err(Error::IndexOutOfRange {
            component: "j",
            value: idx.j,
            max: c.degeneracy,
        });
    }
    Ok(idx.n * c.degeneracy_dim() + idx.j)
}

pub fn unflatten(flat: usize, c: Cutoffs) -> Result<BasisIndex> {
    if flat >= c.dim() {
        return Err(Error::FlatIndexOutOfRange { flat, dim: c.dim() });
    }
    Ok(BasisIndex {
        n: flat / c.degeneracy_dim(),
        j: flat % c.degeneracy_dim(),
    })
}

/// The space an [`OperatorMatrix`] acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// A single truncated oscillator mode of the given dimension.
    Mode(usize),
    /// Symmetric-gauge two-mode space `(n, j)`.
    Landau(Cutoffs),
    /// Landau-gauge space: levels `0..levels` times momentum grid points `0..points`.
    LevelGrid { levels: usize, points: usize },
}

impl Basis {
    pub fn dim(&self) -> usize {
        match *self {
            Basis::Mode(d) => d,
            Basis::Landau(c) => c.dim(),
            Basis::LevelGrid { levels, points } => levels * points,
        }
    }
}

/// A dense square complex matrix, row-major, tagged with the basis it acts on.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    basis: Basis,
    data: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn zeros(basis: Basis) -> Self {
        let d = basis.dim();
        Self {
            basis,
            data: vec![ZERO; d * d],
        }
    }

    pub fn identity(basis: Basis) -> Self {
        let mut m = Self::zeros(basis);
        for i in 0..m.dim() {
            m.set(i, i, ONE);
        }
        m
    }

    pub fn from_diagonal(basis: Basis, diag: &[Complex64]) -> Result<Self> {
        if diag.len() != basis.dim() {
            return Err(Error::BadEntryCount {
                len: diag.len(),
                expected: basis.dim(),
            });
        }
        let mut m = Self::zeros(basis);
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, v);
        }
        Ok(m)
    }

    pub fn from_real_diagonal(basis: Basis, diag: &[f64]) -> Result<Self> {
        let diag: Vec<Complex64> = diag.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_diagonal(basis, &diag)
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(basis: Basis, data: Vec<Complex64>) -> Result<Self> {
        let d = basis.dim();
        if data.len() != d * d {
            return Err(Error::BadEntryCount {
                len: data.len(),
                expected: d * d,
            });
        }
        Ok(Self { basis, data })
    }

    pub fn from_fn(basis: Basis, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let d = basis.dim();
        let mut data = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                data.push(f(r, c));
            }
        }
        Self { basis, data }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Reinterprets the matrix on another basis of the same dimension.
    pub fn with_basis(mut self, basis: Basis) -> Result<Self> {
        if basis.dim() != self.dim() {
            return Err(mismatch(&self.basis, &basis));
        }
        self.basis = basis;
        Ok(self)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: Complex64) {
        let d = self.dim();
        self.data[row * d + col] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim()).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(mismatch(&self.basis, &other.basis));
        }
        Ok(())
    }

    /// Largest entry modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= tol)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            basis: self.basis,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            basis: self.basis,
            data,
        })
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            basis: self.basis,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let d = self.dim();
        Self::from_fn(self.basis, |r, c| self.data[c * d + r].conj())
    }

    /// Standard matrix product `self · rhs`.
    ///
    /// Zero entries of `self` are skipped, which keeps products of the
    /// banded ladder operators cheap despite the dense storage.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let d = self.dim();
        let mut out = vec![ZERO; d * d];
        for i in 0..d {
            let out_row = &mut out[i * d..(i + 1) * d];
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                let rhs_row = &rhs.data[k * d..(k + 1) * d];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self {
            basis: self.basis,
            data: out,
        })
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.matmul(rhs)?.sub(&rhs.matmul(self)?)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        let d = self.dim();
        if v.len() != d {
            return Err(Error::BadEntryCount {
                len: v.len(),
                expected: d,
            });
        }
        Ok((0..d)
            .map(|r| {
                self.data[r * d..(r + 1) * d]
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect())
    }

    /// Largest modulus of `A − A†`.
    pub fn hermitian_deviation(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for r in 0..d {
            for c in r..d {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Tensor product with `self` on the outer (Landau) factor and `inner` on the degeneracy factor.
    ///
    /// Composite entry `((n, j), (n', j')) = self(n, n') · inner(j, j')`, consistent
    /// with n-major flattening.
    pub fn kron(&self, inner: &Self) -> Result<Self> {
        let (p, q) = (self.dim(), inner.dim());
        let dim = p * q;
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge {
                dim,
                limit: MAX_DIM,
            });
        }
        let basis = Basis::Landau(Cutoffs::new(p - 1, q - 1)?);
        let mut out = Self::zeros(basis);
        for n in 0..p {
            for n2 in 0..p {
                let a = self.get(n, n2);
                if a == ZERO {
                    continue;
                }
                for j in 0..q {
                    for j2 in 0..q {
                        out.set(n * q + j, n2 * q + j2, a * inner.get(j, j2));
                    }
                }
            }
        }
        Ok(out)
    }
}

fn mismatch(a: &Basis, b: &Basis) -> Error {
    Error::BasisMismatch {
        left: format!("{a:?}"),
        right: format!("{b:?}"),
    }
}

/// Truncated single-mode annihilation operator: `sqrt(m + 1)` at `(m, m + 1)`.
pub fn annihilation_matrix(dim: usize) -> Result<OperatorMatrix> {
    if dim == 0 {
        return Err(Error::EmptyMode);
    }
    let mut a = OperatorMatrix::zeros(Basis::Mode(dim));
    for m in 0..dim - 1 {
        a.set(m, m + 1, Complex64::new(((m + 1) as f64).sqrt(), 0.0));
    }
    Ok(a)
}

/// Single-mode identity of the given dimension.
pub fn mode_identity(dim: usize) -> Result<OperatorMatrix> {
    if dim == 0 {
        return Err(Error::EmptyMode);
    }
    Ok(OperatorMatrix::identity(Basis::Mode(dim)))
}

/// Serializes as `{"dim": D, "entries": [[re, im], ...]}` in row-major order.
impl Serialize for OperatorMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<FixedComplex> = self.data.iter().copied().map(FixedComplex).collect();
        let mut st = s.serialize_struct("OperatorMatrix", 2)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}
