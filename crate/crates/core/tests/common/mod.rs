//! Shared helpers for the integration and acceptance suites.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand_core::RngCore;

use romanovski_core::contour::{taylor_coefficients, weight_complex};
use romanovski_core::FamilyParams;

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand_core::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Random reduced rational with numerator in [−bound, bound] and denominator
/// in [1, 9].
pub fn random_rational(rng: &mut rand_chacha::ChaCha8Rng, bound: i64) -> BigRational {
    let num = (rng.next_u64() % (2 * bound as u64 + 1)) as i64 - bound;
    let den = (rng.next_u64() % 9 + 1) as i64;
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_params(rng: &mut rand_chacha::ChaCha8Rng) -> FamilyParams {
    FamilyParams::new(random_rational(rng, 12), random_rational(rng, 12))
}

/// Closed-form R-generating function continued to complex y (principal
/// square root; the sample regimes keep `1−4y(x+y)` in the right half-plane).
pub fn generating_r_complex(params: &FamilyParams, x: f64, y: Complex64) -> Complex64 {
    let disc = 1.0 - 4.0 * y * (x + y);
    let sqrt_disc = disc.sqrt();
    let a = 2.0 * (x + y) / (1.0 + sqrt_disc);
    weight_complex(params, a) / (params.weight(x) * sqrt_disc)
}

/// Closed-form Q-generating function continued to complex y.
pub fn generating_q_complex(params: &FamilyParams, x: f64, y: Complex64) -> Complex64 {
    let b = x + y * (1.0 + x * x);
    weight_complex(params, Complex64::new(b.re, b.im)) / params.weight(x)
}

/// Taylor coefficients (in y, around 0) of the R-generating function.
pub fn taylor_r(params: &FamilyParams, x: f64, radius: f64, count: usize) -> Vec<f64> {
    let p = params.clone();
    taylor_coefficients(move |y| generating_r_complex(&p, x, y), radius, count, 256)
}

/// Taylor coefficients (in y, around 0) of the Q-generating function.
pub fn taylor_q(params: &FamilyParams, x: f64, radius: f64, count: usize) -> Vec<f64> {
    let p = params.clone();
    taylor_coefficients(move |y| generating_q_complex(&p, x, y), radius, count, 256)
}
