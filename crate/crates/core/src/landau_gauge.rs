//! Landau-gauge cross-check on a discretized momentum grid.
//!
//! States `|n, k⟩` are products of a plane wave in `y` and the oscillator
//! function `φ_n` centered on the guiding center `x_c = c k / (eB)`. On the
//! level ⊗ grid basis:
//!
//! ```text
//! x = 1 ⊗ (c/eB) K  +  X ⊗ 1
//! y = iℏ (1 ⊗ D)    +  (c/eB) P ⊗ 1
//! ```
//!
//! where `K` multiplies by `k_i`, `D` is the second-order central-difference
//! derivative in `k`, and `X`, `P` are the oscillator displacement and momentum
//! matrices `⟨n|x̃|m⟩`, `⟨n|p̃|m⟩`. The momentum term is `+(c/eB) P` with `P`
//! indexed `(n, m)`; written with the transposed index order this is the
//! familiar `−(c/eB) ⟨m|p|n⟩`. This sign is the one for which both gauges
//! produce the same commutator.
//!
//! The matrices act on sampled amplitudes `ψ(k_i)`, so the continuum kernel
//! `δ(k − k')` (discretized as `δ_ij / dk` against the measure `dk`) is the
//! identity here. The central difference spreads the identity produced by
//! `[K, D]` onto the neighbors of each point, so coefficients are read off by
//! applying each level block to a plane-wave probe `e^{iκk}` and dividing by
//! the probe: the deviation from the continuum value is `1 − cos(κ dk)`,
//! i.e. second order in `dk`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{annihilation_matrix, mode_identity, Basis, BasisIndex, Cutoffs, OperatorMatrix};
use crate::projection::{expected_top, BoundaryArtifact, CommutatorReport};
use crate::units::PhysicalUnits;

/// Highest oscillator level [`hermite_wavefunction`] evaluates.
pub const MAX_LEVEL: usize = 500;

/// Grid points closer than this to either end are excluded from assertions.
pub const EDGE_MARGIN: usize = 2;

/// Default half-width of the momentum grid in units of `ℏ/ℓ`.
pub const DEFAULT_HALF_RANGE: f64 = 8.0;

/// Default probe wavenumber in units of `ℓ/ℏ`.
pub const DEFAULT_PROBE: f64 = 0.5;

/// Relative tolerance for the discretized commutator coefficients.
pub const LANDAU_REL_TOL: f64 = 0.01;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Uniform momentum grid `k_i = k_min + i dk`, `i = 0..points`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KGrid {
    points: usize,
    k_min: f64,
    dk: f64,
}

impl KGrid {
    pub fn new(points: usize, k_min: f64, dk: f64) -> Result<Self> {
        if points < 3 {
            return Err(Error::GridTooSmall(points));
        }
        if !(dk.is_finite() && dk > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "spacing must be positive, got {dk}"
            )));
        }
        if !k_min.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "k_min must be finite, got {k_min}"
            )));
        }
        Ok(Self { points, k_min, dk })
    }

    /// `points` samples spanning `[-half_range, half_range]` inclusive.
    pub fn symmetric(points: usize, half_range: f64) -> Result<Self> {
        if points < 3 {
            return Err(Error::GridTooSmall(points));
        }
        if !(half_range.is_finite() && half_range > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "half range must be positive, got {half_range}"
            )));
        }
        Self::new(points, -half_range, 2.0 * half_range / (points - 1) as f64)
    }

    /// Symmetric grid over `±half_range · ℏ/ℓ`.
    pub fn for_units(points: usize, half_range: f64, u: &PhysicalUnits) -> Result<Self> {
        Self::symmetric(points, half_range * u.momentum_scale())
    }

    /// Same span with the spacing halved.
    pub fn refined(&self) -> Result<Self> {
        Self::new(2 * self.points - 1, self.k_min, 0.5 * self.dk)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn k_min(&self) -> f64 {
        self.k_min
    }

    pub fn dk(&self) -> f64 {
        self.dk
    }

    pub fn k(&self, i: usize) -> f64 {
        self.k_min + i as f64 * self.dk
    }

    /// Indices at distance `≥ EDGE_MARGIN` from both ends.
    pub fn interior(&self) -> std::ops::Range<usize> {
        EDGE_MARGIN.min(self.points)..self.points.saturating_sub(EDGE_MARGIN)
    }
}

/// Normalized oscillator eigenfunctions `φ_0..=φ_nmax` at displacement `xi`.
///
/// The oscillator has mass `m` and frequency `ω = eB/mc`, so its length scale
/// is the magnetic length. Uses the normalized upward recurrence
/// `φ_{n+1} = sqrt(2/(n+1)) (xi/ℓ) φ_n − sqrt(n/(n+1)) φ_{n−1}`.
pub fn hermite_wavefunctions(nmax: usize, xi: f64, u: &PhysicalUnits) -> Result<Vec<f64>> {
    if nmax > MAX_LEVEL {
        return Err(Error::LevelTooHigh {
            level: nmax,
            max: MAX_LEVEL,
        });
    }
    let inv_len = 1.0 / u.magnetic_length();
    let s = xi * inv_len;
    let mut out = Vec::with_capacity(nmax + 1);
    out.push((inv_len * inv_len / std::f64::consts::PI).powf(0.25) * (-0.5 * s * s).exp());
    if nmax >= 1 {
        out.push(2f64.sqrt() * s * out[0]);
    }
    for n in 1..nmax {
        let nf = n as f64;
        let next = (2.0 / (nf + 1.0)).sqrt() * s * out[n] - (nf / (nf + 1.0)).sqrt() * out[n - 1];
        out.push(next);
    }
    Ok(out)
}

/// `φ_n(xi)`.
pub fn hermite_wavefunction(n: usize, xi: f64, u: &PhysicalUnits) -> Result<f64> {
    Ok(hermite_wavefunctions(n, xi, u)?[n])
}

/// `⟨n|x̃|m⟩` for `n, m ≤ nmax`: `ℓ/√2 (√m δ_{n,m−1} + √(m+1) δ_{n,m+1})`.
pub fn oscillator_x_elements(nmax: usize, u: &PhysicalUnits) -> Result<OperatorMatrix> {
    let a = annihilation_matrix(nmax + 1)?;
    Ok(a.add(&a.dagger())?
        .scale_real(u.magnetic_length() / 2f64.sqrt()))
}

/// `⟨n|p̃|m⟩` for `n, m ≤ nmax`: `i ℏ/(√2 ℓ) (√(m+1) δ_{n,m+1} − √m δ_{n,m−1})`.
pub fn oscillator_p_elements(nmax: usize, u: &PhysicalUnits) -> Result<OperatorMatrix> {
    let a = annihilation_matrix(nmax + 1)?;
    Ok(a.dagger()
        .sub(&a)?
        .scale(I * (u.hbar() / (2f64.sqrt() * u.magnetic_length()))))
}

/// Multiplication by `k_i`.
pub fn momentum_label_matrix(grid: &KGrid) -> OperatorMatrix {
    let m = grid.points();
    OperatorMatrix::from_fn(Basis::Mode(m), |r, c| {
        if r == c {
            Complex64::new(grid.k(r), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Central-difference `d/dk` with second-order one-sided stencils at both ends.
pub fn derivative_matrix(grid: &KGrid) -> OperatorMatrix {
    let m = grid.points();
    let h = 0.5 / grid.dk();
    let mut d = OperatorMatrix::zeros(Basis::Mode(m));
    let set = |d: &mut OperatorMatrix, r: usize, c: usize, v: f64| {
        d.set(r, c, Complex64::new(v * h, 0.0))
    };
    set(&mut d, 0, 0, -3.0);
    set(&mut d, 0, 1, 4.0);
    set(&mut d, 0, 2, -1.0);
    for i in 1..m - 1 {
        set(&mut d, i, i - 1, -1.0);
        set(&mut d, i, i + 1, 1.0);
    }
    set(&mut d, m - 1, m - 1, 3.0);
    set(&mut d, m - 1, m - 2, -4.0);
    set(&mut d, m - 1, m - 3, 1.0);
    d
}

/// Landau-gauge coordinates on levels `0..=N` times the grid.
#[derive(Debug, Clone)]
pub struct LandauGaugeOperators {
    pub x: OperatorMatrix,
    pub y: OperatorMatrix,
    pub grid: KGrid,
    pub levels: usize,
    pub units: PhysicalUnits,
}

pub fn build_landau_xy(
    grid: KGrid,
    landau_cutoff: usize,
    u: &PhysicalUnits,
) -> Result<LandauGaugeOperators> {
    let m = grid.points();
    if m < 3 {
        return Err(Error::GridTooSmall(m));
    }
    let levels = landau_cutoff + 1;
    let scale = u.guiding_center_scale();
    let id_levels = mode_identity(levels)?;
    let id_grid = mode_identity(m)?;

    let x = id_levels
        .kron(&momentum_label_matrix(&grid).scale_real(scale))?
        .add(&oscillator_x_elements(landau_cutoff, u)?.kron(&id_grid)?)?;
    let y = id_levels
        .kron(&derivative_matrix(&grid).scale(I * u.hbar()))?
        .add(
            &oscillator_p_elements(landau_cutoff, u)?
                .scale_real(scale)
                .kron(&id_grid)?,
        )?;

    let basis = Basis::LevelGrid { levels, points: m };
    Ok(LandauGaugeOperators {
        x: x.with_basis(basis)?,
        y: y.with_basis(basis)?,
        grid,
        levels,
        units: *u,
    })
}

/// Plane wave `e^{iκ k_i}` sampled on the grid.
pub fn plane_wave_probe(grid: &KGrid, wavenumber: f64) -> Vec<Complex64> {
    (0..grid.points())
        .map(|i| Complex64::from_polar(1.0, wavenumber * grid.k(i)))
        .collect()
}

/// Level-resolved coefficients of `[x, y]` against a plane-wave probe.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelCoefficients {
    /// `(C_nn f)_i / f_i` per level `n` and grid point `i`.
    pub diagonal: Vec<Vec<Complex64>>,
    /// Largest `|(C_nn' f)_i| / |f_i|` with `n ≠ n'` over interior points.
    pub max_offdiagonal: f64,
}

impl LevelCoefficients {
    /// Interior mean of level `n`.
    pub fn mean(&self, n: usize, grid: &KGrid) -> Complex64 {
        let r = grid.interior();
        let len = r.len() as f64;
        self.diagonal[n][r].iter().sum::<Complex64>() / len
    }

    /// Largest deviation from the interior mean across interior points of level `n`.
    pub fn spread(&self, n: usize, grid: &KGrid) -> f64 {
        let mean = self.mean(n, grid);
        self.diagonal[n][grid.interior()]
            .iter()
            .map(|z| (z - mean).norm())
            .fold(0.0, f64::max)
    }
}

/// Applies each level block of `[x, y]` to the probe.
pub fn level_coefficients(
    ops: &LandauGaugeOperators,
    wavenumber: f64,
) -> Result<LevelCoefficients> {
    let comm = ops.x.commutator(&ops.y)?;
    let m = ops.grid.points();
    let probe = plane_wave_probe(&ops.grid, wavenumber);
    let mut diagonal = vec![vec![Complex64::new(0.0, 0.0); m]; ops.levels];
    let mut max_offdiagonal: f64 = 0.0;
    for (n, level_diag) in diagonal.iter_mut().enumerate() {
        for n2 in 0..ops.levels {
            for i in 0..m {
                let row = n * m + i;
                let v: Complex64 = (0..m)
                    .map(|i2| comm.get(row, n2 * m + i2) * probe[i2])
                    .sum();
                let ratio = v / probe[i];
                if n == n2 {
                    level_diag[i] = ratio;
                } else if ops.grid.interior().contains(&i) {
                    max_offdiagonal = max_offdiagonal.max(ratio.norm());
                }
            }
        }
    }
    Ok(LevelCoefficients {
        diagonal,
        max_offdiagonal,
    })
}

/// Probe wavenumber `DEFAULT_PROBE · ℓ/ℏ`.
pub fn default_probe(u: &PhysicalUnits) -> f64 {
    DEFAULT_PROBE / u.momentum_scale()
}

/// Commutator coefficient with only the lowest level retained; tends to `−iℏc/eB`.
pub fn lowest_level_commutator(grid: KGrid, u: &PhysicalUnits) -> Result<Complex64> {
    let ops = build_landau_xy(grid, 0, u)?;
    Ok(level_coefficients(&ops, default_probe(u))?.mean(0, &grid))
}

/// `[x, y]` with levels `0..=N` retained, analyzed like the symmetric-gauge report.
///
/// The report's degeneracy cutoff is the last grid index; `boundary_artifacts`
/// lists the level-diagonal coefficients at the grid points excluded from the checks.
pub fn projected_commutator_landau(
    grid: KGrid,
    landau_cutoff: usize,
    u: &PhysicalUnits,
) -> Result<CommutatorReport> {
    let ops = build_landau_xy(grid, landau_cutoff, u)?;
    let coeffs = level_coefficients(&ops, default_probe(u))?;
    let expected = expected_top(landau_cutoff, u);
    let tol = LANDAU_REL_TOL * expected.norm();

    let top = coeffs.mean(landau_cutoff, &grid);
    let top_uniform = coeffs.spread(landau_cutoff, &grid) <= 1e-9 * expected.norm();
    let mut residual = coeffs.max_offdiagonal;
    for n in 0..landau_cutoff {
        for z in &coeffs.diagonal[n][grid.interior()] {
            residual = residual.max(z.norm());
        }
    }

    let interior = grid.interior();
    let mut artifacts = Vec::new();
    for n in 0..=landau_cutoff {
        for i in (0..grid.points()).filter(|i| !interior.contains(i)) {
            let idx = BasisIndex::new(n, i);
            artifacts.push(BoundaryArtifact {
                row: idx,
                col: idx,
                value: coeffs.diagonal[n][i],
            });
        }
    }

    let ok = top_uniform && (top - expected).norm() <= tol && residual <= tol;
    Ok(CommutatorReport {
        cutoffs: Cutoffs::new(landau_cutoff, grid.points() - 1)?,
        keep: landau_cutoff,
        top_coefficient: top,
        expected_top: expected,
        max_offtop_residual: residual,
        boundary_artifacts: artifacts,
        top_uniform,
        tolerance: tol,
        ok,
    })
}

/// One row of a grid-refinement study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub points: usize,
    pub dk: f64,
    pub keep: usize,
    pub coefficient: Complex64,
    pub abs_error: f64,
    /// `log(err_prev / err) / log(dk_prev / dk)`; absent on the coarsest grid.
    pub observed_order: Option<f64>,
}

/// Refines `base` `refinements` times (halving `dk`) for each `keep = 0..=max_keep`.
pub fn convergence_study(
    base: KGrid,
    max_keep: usize,
    refinements: usize,
    u: &PhysicalUnits,
) -> Result<Vec<ConvergenceRow>> {
    let mut rows = Vec::new();
    for keep in 0..=max_keep {
        let mut grid = base;
        let mut prev: Option<(f64, f64)> = None;
        for level in 0..=refinements {
            if level > 0 {
                grid = grid.refined()?;
            }
            let report = projected_commutator_landau(grid, keep, u)?;
            let err = (report.top_coefficient - report.expected_top).norm();
            let observed_order = prev.map(|(dk0, e0)| (e0 / err).ln() / (dk0 / grid.dk()).ln());
            rows.push(ConvergenceRow {
                points: grid.points(),
                dk: grid.dk(),
                keep,
                coefficient: report.top_coefficient,
                abs_error: err,
                observed_order,
            });
            prev = Some((grid.dk(), err));
        }
    }
    Ok(rows)
}
