//! Simultaneous root finding (Aberth–Ehrlich) for root-location checks.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyz::Polynomial;

const MAX_ITERATIONS: usize = 1000;

/// Numerically computed roots with the achieved backward residual.
#[derive(Clone, Debug)]
pub struct RootReport {
    pub roots: Vec<Complex64>,
    pub min_modulus: f64,
    /// Largest `|f(z)| / sum |a_i| |z|^i` over the computed roots.
    pub residual: f64,
    pub iterations: usize,
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let (p, _) = horner(coeffs, z);
    let r = z.norm();
    let scale: f64 = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// All complex roots of `f`, iterated until every backward residual is below `tol`.
///
/// Starts from points spread on the circle of the Cauchy bound
/// `1 + max |a_i / a_n|`. Roots at zero (from a power of `x`) are exact.
pub fn find_roots(f: &Polynomial, tol: f64) -> Result<RootReport> {
    let n = f.require_degree()?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let (zeros, g) = f.strip_x_power();
    let coeffs: Vec<f64> = g
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    let mut roots = vec![Complex64::zero(); zeros];
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(RootReport {
            min_modulus: 0.0,
            roots,
            residual: 0.0,
            iterations: 0,
        });
    }
    let lead = coeffs[d];
    let cauchy = 1.0
        + coeffs[..d]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(cauchy, theta)
        })
        .collect();
    let mut iterations = 0;
    let mut residual = f64::INFINITY;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        for k in 0..d {
            let (p, dp) = horner(&coeffs, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
            }
        }
        residual = z
            .iter()
            .map(|&r| relative_residual(&coeffs, r))
            .fold(0.0, f64::max);
        if residual < tol {
            break;
        }
    }
    let min_of = |v: &[Complex64]| v.iter().map(|r| r.norm()).fold(f64::INFINITY, f64::min);
    if residual >= tol {
        return Err(Error::NoConvergence {
            iterations,
            residual,
            partial_min_modulus: min_of(&z),
        });
    }
    roots.extend(z);
    Ok(RootReport {
        min_modulus: min_of(&roots),
        roots,
        residual,
        iterations,
    })
}

/// Smallest modulus among the complex roots of `f`.
pub fn min_root_modulus(f: &Polynomial, tol: f64) -> Result<RootReport> {
    find_roots(f, tol)
}

/// Positive real roots counted from the numeric root set: imaginary part
/// within `1e-6` of the modulus scale and positive real part.
pub fn positive_real_root_count(f: &Polynomial, tol: f64) -> Result<usize> {
    let report = find_roots(f, tol)?;
    Ok(report
        .roots
        .iter()
        .filter(|r| r.re > 0.0 && r.im.abs() <= 1e-6 * r.norm().max(1.0))
        .count())
}
