//! Operator algebra for the Landau problem on truncated state spaces.
//!
//! The planar coordinates of a charged particle in a uniform magnetic field
//! commute on the full Hilbert space, but stop commuting as soon as the
//! intermediate states are restricted to finitely many Landau levels. This
//! crate builds the relevant operators as dense complex matrices and measures
//! the resulting commutator `[x, y]` in two gauges:
//!
//! * [`ladder`] builds the symmetric-gauge operators from two oscillator modes
//!   (`a` carries the degeneracy index `j`, `b` carries the Landau index `n`).
//! * [`projection`] restricts them to the lowest `keep + 1` levels and reports
//!   the top-level coefficient `-i (keep + 1) ℓ²`.
//! * [`landau_gauge`] repeats the computation on a discretized momentum grid
//!   in the Landau gauge, as an independent cross-check.
//! * [`spectrum`] verifies the level structure `ℏω (n + 1/2)`.
//!
//! All computations default to natural units `e = B = c = ℏ = m = 1`.

pub mod cli;
pub mod error;
pub mod fock;
pub mod format;
pub mod ladder;
pub mod landau_gauge;
pub mod projection;
pub mod spectrum;
pub mod units;

pub use error::{Error, Result};
pub use fock::{Basis, BasisIndex, Cutoffs, OperatorMatrix};
pub use num_complex::Complex64;
pub use projection::CommutatorReport;
pub use units::PhysicalUnits;
