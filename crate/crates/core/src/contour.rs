//! Analytic continuation of the weight and the contour-integral oracle.
//!
//! The weight extends analytically to `ℂ ∖ {it : |t| ≥ 1}`: on that region
//! `1 + z²` never meets the branch cut of the principal logarithm (it is
//! negative real only for `z = it, |t| > 1`), and
//! `acot z = atan(1/z) + π·[Re z < 0]` is the branch that is real with values
//! in (0, π) on the real axis and continuous across the segment between ±i.
//!
//! On a circle `|z − x| = r` with `r < √(1+x²)` the poles ±i stay outside, so
//! the Rodrigues derivative becomes Cauchy's formula
//!
//! ```text
//! R_n(x) = n! / (2πi·w(x)) ∮ w(z)·(1+z²)ⁿ / (z−x)^{n+1} dz,
//! ```
//!
//! which the trapezoidal rule evaluates with spectral accuracy (periodic
//! analytic integrand). This is an evaluation route entirely independent of
//! the polynomial constructions and serves as their oracle.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math;
use crate::romanovski::FamilyParams;

/// acot on the branch continuous with the real-axis values in (0, π);
/// analytic on `ℂ ∖ {it : |t| ≥ 1}`.
pub fn acot_complex(z: Complex64) -> Complex64 {
    if z.re > 0.0 {
        (1.0 / z).atan()
    } else if z.re < 0.0 {
        (1.0 / z).atan() + math::PI
    } else {
        // limit onto the segment between −i and i: acot(it) = π/2 − i·atanh(t)
        Complex64::new(math::FRAC_PI_2, -libm::atanh(z.im))
    }
}

/// The weight continued off the real axis (principal log of `1+z²`, acot as
/// above). Agrees with [`FamilyParams::weight`] for real z; analytic on
/// `ℂ ∖ {it : |t| ≥ 1}` — in particular on every admissible contour circle.
pub fn weight_complex(params: &FamilyParams, z: Complex64) -> Complex64 {
    let s = 1.0 + z * z;
    let log_w = (params.beta_f64() - 1.0) * s.ln() - params.alpha_f64() * acot_complex(z);
    log_w.exp()
}

/// Errors of the contour evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContourError {
    /// The circle would enclose the weight's singularities ±i
    /// (requires `r < √(1+x²)`).
    RadiusTooLarge { radius: f64, limit: f64 },
    /// Fewer than 64 nodes requested.
    TooFewNodes { nodes: usize },
    /// Doubling the node count moved the value by more than the tolerance.
    NotConverged { value: f64, change: f64 },
}

impl core::fmt::Display for ContourError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ContourError::RadiusTooLarge { radius, limit } => {
                write!(f, "contour radius {radius} must be < sqrt(1+x^2) = {limit}")
            }
            ContourError::TooFewNodes { nodes } => {
                write!(f, "contour rule needs >= 64 nodes, got {nodes}")
            }
            ContourError::NotConverged { value, change } => {
                write!(f, "contour value {value} not converged (change {change})")
            }
        }
    }
}

impl core::error::Error for ContourError {}

fn trapezoid_sum(params: &FamilyParams, n: usize, x: f64, radius: f64, nodes: usize) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..nodes {
        let theta = 2.0 * math::PI * k as f64 / nodes as f64;
        let dir = Complex64::new(math::cos(theta), math::sin(theta));
        let z = Complex64::new(x, 0.0) + radius * dir;
        let s = 1.0 + z * z;
        acc += weight_complex(params, z) * s.powu(n as u32) * dir.powi(-(n as i32));
    }
    let mut factorial = 1.0;
    for k in 2..=n {
        factorial *= k as f64;
    }
    // the i dz and the 1/(2πi) collapse into 1/nodes on the circle
    let value = acc * factorial / (params.weight(x) * nodes as f64 * math::powi(radius, n as i32));
    value.re
}

/// Evaluates `R_n^(α,β)(x)` through the contour integral on the circle of the
/// given radius around x, with the trapezoidal rule at `num_nodes` and
/// `2·num_nodes` points; the two values must agree to `1e−9·max(1,|value|)`.
pub fn eval_via_contour(
    params: &FamilyParams,
    n: usize,
    x: f64,
    radius: f64,
    num_nodes: usize,
) -> Result<f64, ContourError> {
    let limit = math::sqrt(1.0 + x * x);
    if !(radius > 0.0 && radius < limit) {
        return Err(ContourError::RadiusTooLarge { radius, limit });
    }
    if num_nodes < 64 {
        return Err(ContourError::TooFewNodes { nodes: num_nodes });
    }
    let coarse = trapezoid_sum(params, n, x, radius, num_nodes);
    let fine = trapezoid_sum(params, n, x, radius, 2 * num_nodes);
    let change = (fine - coarse).abs();
    if change > 1e-9 * fine.abs().max(1.0) {
        return Err(ContourError::NotConverged { value: fine, change });
    }
    Ok(fine)
}

/// Taylor coefficients `c_k`, `k < count`, of an analytic function via Cauchy
/// coefficients on the circle of the given radius:
/// `c_k = (1/(M·r^k)) Σ_j f(r·e^{iθ_j})·e^{−ikθ_j}`.
///
/// Spectrally accurate provided the circle stays inside the domain of
/// analyticity. Used by the verification suites to read generating-function
/// coefficients without finite differencing.
pub fn taylor_coefficients<F>(f: F, radius: f64, count: usize, nodes: usize) -> Vec<f64>
where
    F: Fn(Complex64) -> Complex64,
{
    let samples: Vec<Complex64> = (0..nodes)
        .map(|j| {
            let theta = 2.0 * math::PI * j as f64 / nodes as f64;
            f(radius * Complex64::new(math::cos(theta), math::sin(theta)))
        })
        .collect();
    (0..count)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, s) in samples.iter().enumerate() {
                let theta = 2.0 * math::PI * (j * k % nodes) as f64 / nodes as f64;
                acc += s * Complex64::new(math::cos(theta), -math::sin(theta));
            }
            acc.re / (nodes as f64 * math::powi(radius, k as i32))
        })
        .collect()
}
