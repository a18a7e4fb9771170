//! Test-only oracles that share no code path with the library.

#![allow(dead_code)]

use std::sync::OnceLock;

use nalgebra::{DMatrix, SymmetricEigen};

const ORDER: usize = 60;

/// Cached 60-point rule; exact for polynomial degree ≤ 119.
pub fn gauss_hermite_60() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_hermite(ORDER))
}

/// Gauss–Hermite nodes and weights for `∫ f(t) e^{−t²} dt` (Golub–Welsch).
pub fn gauss_hermite(order: usize) -> Vec<(f64, f64)> {
    let mut jacobi = DMatrix::<f64>::zeros(order, order);
    for k in 1..order {
        let b = (k as f64 / 2.0).sqrt();
        jacobi[(k - 1, k)] = b;
        jacobi[(k, k - 1)] = b;
    }
    let eig = SymmetricEigen::new(jacobi);
    let mut nodes: Vec<(f64, f64)> = (0..order)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], std::f64::consts::PI.sqrt() * v0 * v0)
        })
        .collect();
    nodes.sort_by(|a, b| a.0.total_cmp(&b.0));
    nodes
}

/// Physicists' Hermite polynomial `H_n(t)` and its derivative `2n H_{n−1}(t)`.
pub fn hermite_poly(n: usize, t: f64) -> (f64, f64) {
    let mut h = vec![1.0, 2.0 * t];
    for k in 1..n {
        h.push(2.0 * t * h[k] - 2.0 * k as f64 * h[k - 1]);
    }
    let deriv = if n == 0 {
        0.0
    } else {
        2.0 * n as f64 * h[n - 1]
    };
    (h[n], deriv)
}

/// `1 / sqrt(2^n n! sqrt(π))`.
pub fn hermite_norm(n: usize) -> f64 {
    let mut v = std::f64::consts::PI.sqrt();
    for k in 1..=n {
        v *= 2.0 * k as f64;
    }
    1.0 / v.sqrt()
}

/// `φ_n(x) e^{t²/2}` and `φ_n'(x) e^{t²/2}` with `t = x/ℓ`, for oscillator length `ℓ`.
///
/// Multiplying two of these gives a polynomial times the Gauss–Hermite weight.
pub fn stripped_wavefunction(n: usize, t: f64, ell: f64) -> (f64, f64) {
    let (h, dh) = hermite_poly(n, t);
    let c = hermite_norm(n) / ell.sqrt();
    (c * h, c * (dh - t * h) / ell)
}

/// `∫ φ_n(x) φ_m(x) dx`.
pub fn overlap(n: usize, m: usize, ell: f64) -> f64 {
    gauss_hermite_60()
        .iter()
        .map(|&(t, w)| {
            w * ell * stripped_wavefunction(n, t, ell).0 * stripped_wavefunction(m, t, ell).0
        })
        .sum()
}

/// `∫ φ_n(x) x φ_m(x) dx`.
pub fn x_element(n: usize, m: usize, ell: f64) -> f64 {
    gauss_hermite_60()
        .iter()
        .map(|&(t, w)| {
            w * ell
                * stripped_wavefunction(n, t, ell).0
                * (ell * t)
                * stripped_wavefunction(m, t, ell).0
        })
        .sum()
}

/// `∫ φ_n(x) (−iℏ d/dx) φ_m(x) dx`, returned as the imaginary part (the real part is zero).
pub fn p_element_im(n: usize, m: usize, ell: f64, hbar: f64) -> f64 {
    let integral: f64 = gauss_hermite_60()
        .iter()
        .map(|&(t, w)| {
            w * ell * stripped_wavefunction(n, t, ell).0 * stripped_wavefunction(m, t, ell).1
        })
        .sum();
    -hbar * integral
}
