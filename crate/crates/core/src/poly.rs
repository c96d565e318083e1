//! Dense univariate polynomial arithmetic over exact rationals and doubles.
//!
//! `DensePolynomial<T>` stores coefficients in ascending degree order: index
//! `k` holds the coefficient of `x^k`. The zero polynomial is canonically the
//! empty coefficient vector, and the trailing (highest-index) coefficient of a
//! nonzero polynomial is never zero.
//!
//! Two scalar backends are used crate-wide: [`RationalPoly`]
//! (arbitrary-precision rationals, the source of truth for every identity) and
//! [`DoublePoly`] (IEEE-754 doubles, for quadrature and other hot paths).
//! Rational→double conversion rounds each coefficient to nearest.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Coefficient ring required by the polynomial operations.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
{
    /// Embeds a small integer into the ring (exact in both backends).
    fn from_int(n: i64) -> Self;
}

impl Coeff for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Coeff for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
}

/// Dense univariate polynomial; coefficient `k` multiplies `x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePolynomial<T> {
    coeffs: Vec<T>,
}

/// Exact-rational backend.
pub type RationalPoly = DensePolynomial<BigRational>;
/// IEEE-754 double backend.
pub type DoublePoly = DensePolynomial<f64>;

impl<T: Coeff> DensePolynomial<T> {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros to the canonical form.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = DensePolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(alloc::vec![c])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![T::zero(); k + 1];
        coeffs[k] = c;
        DensePolynomial { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading (highest-degree) coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Evaluates by Horner's scheme; exact in the rational backend.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Derivative with respect to x.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_int(k as i64))
            .collect();
        Self::new(coeffs)
    }

    /// Coefficient-sequence convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// The polynomial `p(−x)`: coefficient `k` picks up a sign `(−1)^k`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Self::new(coeffs)
    }
}

impl RationalPoly {
    /// Rounds each coefficient to the nearest double.
    pub fn to_double(&self) -> DoublePoly {
        DensePolynomial::new(self.coeffs.iter().map(rational_to_f64).collect())
    }

    /// Evaluates at a double argument through the double backend.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_double().eval(&x)
    }
}

impl DoublePoly {
    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// The reversed-coefficient polynomial `Σ_j c_{m−j}·u^j`, so that
    /// `p(x) = x^m · p_rev(1/x)` for nonzero x. Keeps envelope-damped
    /// evaluations finite at arguments where `p(x)` alone would overflow.
    pub fn eval_reversed(&self, u: f64) -> f64 {
        let mut acc = 0.0;
        for c in &self.coeffs {
            acc = acc * u + c;
        }
        acc
    }
}

/// Rational→double conversion: exact for representable values,
/// round-to-nearest otherwise.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    // num-rational's ToPrimitive performs correctly rounded conversion.
    r.to_f64().unwrap_or(f64::NAN)
}
