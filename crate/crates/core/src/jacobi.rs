//! Complex Jacobi polynomials and the Romanovski correspondence.
//!
//! Jacobi polynomials extend to complex variable *and* complex parameters via
//! the binomial sum
//!
//! ```text
//! P_n^(a,b)(z) = 2^(−n) Σ_k C(n+a, n−k)·C(n+b, k)·(z−1)^k·(z+1)^(n−k),
//! ```
//!
//! solving `(1−z²)P'' + [b−a−(a+b+2)z]P' + n(a+b+n+1)P = 0`. Restricting to
//! `z = ix` with conjugate parameters `b = a*` turns that ODE into the
//! Romanovski equation; matching coefficients forces
//!
//! ```text
//! a = (β−1) + iα/2,   b = a*,
//! ```
//!
//! and then `iⁿ·P_n^(a,a*)(ix)` is a real polynomial proportional to
//! `R_n^(α,β)(x)`. The conjugation symmetry
//! `P_n^(a,a*)(ix)* = (−1)ⁿ·P_n^(a,a*)(ix)` makes the iⁿ phase exactly the
//! factor that realifies it.
//!
//! Plain complexification `x → ix` of a *real-parameter* Jacobi polynomial
//! does **not** produce a Romanovski polynomial: the complexified ODE keeps an
//! imaginary first-order coefficient `i(b−a)` unless the parameters are a
//! conjugate pair. [`complexify`] and the tests encode this negative result.

use num_complex::Complex64;

use crate::poly::{Coeff, DensePolynomial, DoublePoly};
use crate::romanovski::FamilyParams;

impl Coeff for Complex64 {
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
}

/// Polynomial with complex coefficients, ascending degree order.
pub type ComplexPolynomial = DensePolynomial<Complex64>;

/// Generalized binomial `C(w, m) = ∏_{j<m} (w−j) / m!` in complex arithmetic
/// (falling-factorial product; no gamma-function branches).
pub fn generalized_binomial(w: Complex64, m: usize) -> Complex64 {
    let mut num = Complex64::new(1.0, 0.0);
    let mut den = 1.0;
    for j in 0..m {
        num *= w - j as f64;
        den *= (j + 1) as f64;
    }
    num / den
}

/// The complex Jacobi polynomial `P_n^(a,b)` expanded into monomial
/// coefficients.
pub fn complex_jacobi(n: usize, a: Complex64, b: Complex64) -> ComplexPolynomial {
    let one = Complex64::new(1.0, 0.0);
    let z_minus = DensePolynomial::new(alloc::vec![-one, one]); // z − 1
    let z_plus = DensePolynomial::new(alloc::vec![one, one]); // z + 1
    let mut acc = ComplexPolynomial::zero();
    for k in 0..=n {
        let coeff = generalized_binomial(a + n as f64, n - k) * generalized_binomial(b + n as f64, k);
        let mut term = ComplexPolynomial::one();
        for _ in 0..k {
            term = term.mul(&z_minus);
        }
        for _ in 0..(n - k) {
            term = term.mul(&z_plus);
        }
        acc = acc.add(&term.scale(&coeff));
    }
    acc.scale(&Complex64::new(libm::pow(0.5, n as f64), 0.0))
}

/// Residual of `P` in the complex Jacobi ODE
/// `(1−z²)P'' + [b−a−(a+b+2)z]P' + n(a+b+n+1)P`.
pub fn jacobi_ode_residual(
    p: &ComplexPolynomial,
    n: usize,
    a: Complex64,
    b: Complex64,
) -> ComplexPolynomial {
    let one = Complex64::new(1.0, 0.0);
    let s = DensePolynomial::new(alloc::vec![one, Complex64::new(0.0, 0.0), -one]); // 1 − z²
    let t = DensePolynomial::new(alloc::vec![b - a, -(a + b + 2.0)]);
    let lambda = (a + b + n as f64 + 1.0) * n as f64;
    s.mul(&p.derivative().derivative())
        .add(&t.mul(&p.derivative()))
        .add(&p.scale(&lambda))
}

/// Evaluates `v = P_n^(a, a*)(ix)` and checks the conjugation parity
/// `v* = (−1)ⁿ·v` to 1e−12 (even n real, odd n purely imaginary).
pub fn conjugation_parity(n: usize, a: Complex64, x: f64) -> (Complex64, bool) {
    let p = complex_jacobi(n, a, a.conj());
    let v = p.eval(&Complex64::new(0.0, x));
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let parity_ok = (v.conj() - sign * v).norm() <= 1e-12 * v.norm().max(1.0);
    (v, parity_ok)
}

/// Failure modes of the Romanovski-via-Jacobi construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BridgeError {
    /// `a_n = 0` for this (n, β); the proportionality constant is undefined.
    DegreeDeficient,
    /// The iⁿ·P(ix) combination failed to be real to tolerance.
    ParityViolation { imag_residual: f64 },
}

impl core::fmt::Display for BridgeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BridgeError::DegreeDeficient => write!(f, "family is degree-deficient at this n"),
            BridgeError::ParityViolation { imag_residual } => {
                write!(f, "imaginary residual {imag_residual} exceeds tolerance")
            }
        }
    }
}

impl core::error::Error for BridgeError {}

/// Builds `iⁿ·P_n^(a,a*)(ix)` with the ODE-matched parameter
/// `a = (β−1) + iα/2` as a real polynomial in x, and the constant `c_n`
/// with `iⁿ·P_n^(a,a*)(ix) = c_n·R_n^(α,β)(x)` (from the leading-coefficient
/// ratio; Romanovski normalization is fixed at N_n = 1, so `c_n` is reported,
/// not forced to 1).
pub fn romanovski_via_jacobi(
    n: usize,
    params: &FamilyParams,
) -> Result<(DoublePoly, f64), BridgeError> {
    use num_traits::Zero;
    if n >= 1 && params.leading_coeff(n).is_zero() {
        return Err(BridgeError::DegreeDeficient);
    }
    let a = Complex64::new(params.beta_f64() - 1.0, 0.5 * params.alpha_f64());
    let p = complex_jacobi(n, a, a.conj());
    // substitute z = ix and multiply by iⁿ: coefficient k picks up i^(n+k)
    let coeffs: alloc::vec::Vec<Complex64> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * i_power(n + k))
        .collect();
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.norm())).max(1.0);
    let imag_residual = coeffs.iter().fold(0.0f64, |m, c| m.max(c.im.abs()));
    if imag_residual > 1e-12 * scale {
        return Err(BridgeError::ParityViolation { imag_residual });
    }
    let real = DoublePoly::new(coeffs.iter().map(|c| c.re).collect());
    let rn = params.recurrence(n).to_double();
    let c_n = match (real.leading(), rn.leading()) {
        (Some(lr), Some(lp)) => lr / lp,
        _ => 1.0,
    };
    Ok((real, c_n))
}

fn i_power(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// The complexification recipe `g̃(x) = g(ix)`: coefficient k is multiplied
/// by i^k. A ring homomorphism; derivatives satisfy `g̃' = i·(g')~`.
pub fn complexify(p: &DoublePoly) -> ComplexPolynomial {
    DensePolynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * i_power(k))
            .collect(),
    )
}
