//! Thin wrappers over `libm` for the f64 transcendentals used throughout.
//!
//! Routing every call through one place keeps the crate `no_std` and makes
//! results bit-identical between std and no_std builds.

pub const PI: f64 = core::f64::consts::PI;
pub const FRAC_PI_2: f64 = core::f64::consts::FRAC_PI_2;

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// ln(1 + x), accurate near zero.
#[inline]
pub fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn atan(x: f64) -> f64 {
    libm::atan(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

/// Inverse cotangent on the branch with values in (0, π).
///
/// This is the branch that makes the Romanovski weight continuous on all of ℝ:
/// `acot(0) = π/2`, `acot(x) → 0` as `x → +∞` and `→ π` as `x → −∞`.
#[inline]
pub fn acot(x: f64) -> f64 {
    libm::atan2(1.0, x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn tan(x: f64) -> f64 {
    libm::tan(x)
}

#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

#[inline]
pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

#[inline]
pub fn tanh(x: f64) -> f64 {
    libm::tanh(x)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}
