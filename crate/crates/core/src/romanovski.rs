//! The Romanovski R- and Q-families: exact construction and evaluation.
//!
//! For parameters (α, β) the weight is
//!
//! ```text
//! w(x) = (1 + x²)^(β−1) · exp(−α · acot x),    acot x ∈ (0, π),
//! ```
//!
//! and `R_n^(α,β)` is defined by the Rodrigues formula
//! `R_n = w⁻¹ · dⁿ/dxⁿ [w·(1+x²)ⁿ]` with normalization constant 1, so the
//! leading coefficient is `a_n = (1/n!)·∏_{k<n} [2β(n−k) + n(n−1) − k(k−1)]`.
//! `R_n` solves `(1+x²)R'' + (2βx+α)R' + λ_n R = 0` with `λ_n = −n(2β+n−1)`.
//!
//! Two independent constructions are provided and must agree exactly:
//!
//! * [`FamilyParams::rodrigues`] — the n-fold derivative carried out
//!   symbolically. Each derivative of `w^(α,β')·p` produces
//!   `w^(α,β')·s⁻¹·[s·p' + (2(β'−1)x+α)·p]`, so the whole Rodrigues expression
//!   reduces to a polynomial ladder in exact rational arithmetic.
//! * [`FamilyParams::recurrence`] — the three-term recurrence of the Q-family
//!   `Q_ν^(α,β) = R_ν^(α,β−ν)`:
//!
//!   ```text
//!   Q_{ν+1} = [2(β−ν−1)x + α]·Q_ν + ν(2β−ν−1)·(1+x²)·Q_{ν−1},
//!   ```
//!
//!   followed by `R_n^(α,β) = Q_n^(α,β+n)`. The degree-shift signs here are
//!   the corrected ones: the variant with `β+ν−1` / `2β+ν−1` in both places
//!   fails to reproduce `Q₂ = 2(β−1)(2β−3)x² + 2α(2β−3)x + 2(β−1) + α²`,
//!   while this form does (see the errata tests).
//!
//! The derivative ladder reads `dR_n^(α,β)/dx = n(2β+n−1)·R_{n−1}^(α,β+1)`,
//! equivalently `dQ_ν^(α,β)/dx = ν(2β−ν−1)·Q_{ν−1}^(α,β)`.
//!
//! At exceptional β values the leading coefficient `a_n` vanishes
//! (β = (k(k−1)−n(n−1))/(2(n−k)) for some k < n); the Rodrigues expression
//! still defines a polynomial, of degree < n, and the result carries a
//! `degree_deficient` flag instead of an error.

use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::math;
use crate::poly::{DensePolynomial, RationalPoly};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The pair (α, β) indexing a Romanovski family. Exact rationals; the double
/// projections are derived views.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyParams {
    pub alpha: BigRational,
    pub beta: BigRational,
}

/// A constructed Romanovski polynomial together with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct RomanovskiPoly {
    /// Family the polynomial belongs to.
    pub params: FamilyParams,
    /// Requested degree n of the Rodrigues formula.
    pub degree_requested: usize,
    /// The polynomial itself. `deg = n` and leading coefficient `a_n` unless
    /// `degree_deficient`.
    pub poly: RationalPoly,
    /// True exactly when `a_n = 0` for this (n, β); then `deg(poly) < n`.
    pub degree_deficient: bool,
}

impl RomanovskiPoly {
    /// Residual `(1+x²)p'' + (2βx+α)p' + λ_n·p` of the family ODE; the zero
    /// polynomial for correctly built inputs (exact arithmetic).
    pub fn ode_residual(&self) -> RationalPoly {
        self.params
            .ode_residual_with(&self.poly, &self.params.eigenvalue(self.degree_requested))
    }

    /// Double-backend view of the coefficients.
    pub fn to_double(&self) -> DensePolynomial<f64> {
        self.poly.to_double()
    }
}

impl FamilyParams {
    pub fn new(alpha: BigRational, beta: BigRational) -> Self {
        FamilyParams { alpha, beta }
    }

    pub fn from_int(alpha: i64, beta: i64) -> Self {
        FamilyParams::new(rat(alpha), rat(beta))
    }

    /// Embeds doubles exactly (every finite f64 is a rational).
    pub fn from_f64(alpha: f64, beta: f64) -> Self {
        FamilyParams::new(
            BigRational::from_float(alpha).expect("finite alpha"),
            BigRational::from_float(beta).expect("finite beta"),
        )
    }

    pub fn alpha_f64(&self) -> f64 {
        self.alpha.to_f64().unwrap_or(f64::NAN)
    }

    pub fn beta_f64(&self) -> f64 {
        self.beta.to_f64().unwrap_or(f64::NAN)
    }

    /// The family (α, β + shift).
    pub fn beta_shifted(&self, shift: i64) -> Self {
        FamilyParams::new(self.alpha.clone(), &self.beta + rat(shift))
    }

    /// ln w(x) = (β−1)·ln(1+x²) − α·acot(x).
    pub fn log_weight(&self, x: f64) -> f64 {
        (self.beta_f64() - 1.0) * math::ln_1p(x * x) - self.alpha_f64() * math::acot(x)
    }

    /// The weight `w(x) = (1+x²)^(β−1)·exp(−α·acot x)` with acot ∈ (0, π).
    ///
    /// Positive for all real x; overflow saturates to `+∞`.
    pub fn weight(&self, x: f64) -> f64 {
        math::exp(self.log_weight(x))
    }

    pub fn sqrt_weight(&self, x: f64) -> f64 {
        math::exp(0.5 * self.log_weight(x))
    }

    /// Eigenvalue `λ_n = −n(2β + n − 1)` of the family ODE (exact).
    pub fn eigenvalue(&self, n: usize) -> BigRational {
        let n = rat(n as i64);
        -&n * (rat(2) * &self.beta + &n - rat(1))
    }

    /// Leading coefficient `a_n = (1/n!)·∏_{k=0}^{n−1}[2β(n−k) + n(n−1) − k(k−1)]`.
    ///
    /// Depends on β only. `a_0 = 1` by convention (R₀ = 1).
    pub fn leading_coeff(&self, n: usize) -> BigRational {
        if n == 0 {
            return BigRational::one();
        }
        let two_beta = rat(2) * &self.beta;
        let nn = (n * (n - 1)) as i64;
        let mut acc = BigRational::one();
        let mut factorial = BigInt::one();
        for k in 0..n as i64 {
            acc *= &two_beta * rat(n as i64 - k) + rat(nn - k * (k - 1));
            factorial *= BigInt::from(k + 1);
        }
        acc / BigRational::from_integer(factorial)
    }

    /// Builds `R_n^(α,β)` by the symbolic Rodrigues ladder.
    ///
    /// Using `w^(α,β)·sⁿ = w^(α,β+n)`, the j-th derivative of `w^(α,β+n)` is
    /// `w^(α,β+n)·s⁻ʲ·q_j` with `q_{j+1} = [2(β+n−j−1)x+α]·q_j + s·q_j'`,
    /// so `R_n = q_n` exactly.
    pub fn rodrigues(&self, n: usize) -> RomanovskiPoly {
        let s = s_poly();
        let shifted_beta = &self.beta + rat(n as i64); // β' = β + n
        let mut q = RationalPoly::one();
        for j in 0..n {
            // first-order coefficient 2(β'−j−1)x + α of the Pearson step
            let lin = DensePolynomial::new(vec![
                self.alpha.clone(),
                rat(2) * (&shifted_beta - rat(j as i64 + 1)),
            ]);
            q = lin.mul(&q).add(&s.mul(&q.derivative()));
        }
        self.finish(n, q)
    }

    /// Builds `R_n^(α,β)` by the three-term Q-recurrence (corrected signs),
    /// then `R_n^(α,β) = Q_n^(α,β+n)`. Exactly equal to [`Self::rodrigues`].
    pub fn recurrence(&self, n: usize) -> RomanovskiPoly {
        let b = &self.beta + rat(n as i64); // Q-family parameter β + n
        self.finish(n, q_recurrence_ladder(&self.alpha, &b, n))
    }

    /// The Q-family member `Q_ν^(α,β) = R_ν^(α,β−ν)`, returned as the
    /// Romanovski polynomial of the shifted family (α, β−ν).
    pub fn q_poly(&self, nu: usize) -> RomanovskiPoly {
        self.beta_shifted(-(nu as i64)).recurrence(nu)
    }

    fn finish(&self, n: usize, poly: RationalPoly) -> RomanovskiPoly {
        let degree_deficient = n >= 1 && self.leading_coeff(n).is_zero();
        RomanovskiPoly {
            params: self.clone(),
            degree_requested: n,
            poly,
            degree_deficient,
        }
    }

    /// `(1+x²)p'' + (2βx+α)p' + λ·p` for an arbitrary λ.
    pub fn ode_residual_with(&self, p: &RationalPoly, lambda: &BigRational) -> RationalPoly {
        let s = s_poly();
        let t = DensePolynomial::new(vec![self.alpha.clone(), rat(2) * &self.beta]);
        s.mul(&p.derivative().derivative())
            .add(&t.mul(&p.derivative()))
            .add(&p.scale(lambda))
    }

    /// Closed-form generating function of the R-family:
    ///
    /// ```text
    /// G(x, y) = w(A) / (w(x)·√(1−4y(x+y))),   A = 2(x+y)/(1+√(1−4y(x+y))),
    /// ```
    ///
    /// whose Taylor coefficients in y are `R_k^(α,β)(x)/k!`. The prefactor is
    /// the residue-derived one; the variant with an extra `−y/√·` factor fails
    /// the normalization `G(x, 0) = R₀ = 1` (see the errata tests). `A` is the
    /// root of `yz² − z + (x+y)` nearer to x, written in rationalized form so
    /// the y→0 limit is exact rather than 0/0.
    pub fn generating_fn_r(&self, x: f64, y: f64) -> Result<f64, GeneratingFnError> {
        let disc = 1.0 - 4.0 * y * (x + y);
        if disc <= 0.0 {
            return Err(GeneratingFnError { discriminant: disc });
        }
        let sqrt_disc = math::sqrt(disc);
        let a = 2.0 * (x + y) / (1.0 + sqrt_disc);
        Ok(math::exp(self.log_weight(a) - self.log_weight(x)) / sqrt_disc)
    }

    /// Closed-form generating function of the Q-family:
    /// `Q(x, y) = w(B)/w(x)` with `B = x + y(1+x²)`; Taylor coefficients in y
    /// are `Q_ν^(α,β)(x)/ν!`.
    pub fn generating_fn_q(&self, x: f64, y: f64) -> f64 {
        let b = x + y * (1.0 + x * x);
        math::exp(self.log_weight(b) - self.log_weight(x))
    }
}

/// Domain error of the R-generating function: `1 − 4y(x+y) ≤ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratingFnError {
    pub discriminant: f64,
}

impl core::fmt::Display for GeneratingFnError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "generating function undefined: 1-4y(x+y) = {} <= 0",
            self.discriminant
        )
    }
}

impl core::error::Error for GeneratingFnError {}

/// s(x) = 1 + x².
pub(crate) fn s_poly() -> RationalPoly {
    DensePolynomial::new(vec![rat(1), rat(0), rat(1)])
}

/// Runs the corrected three-term recurrence
/// `Q_{ν+1}^(α,b) = [2(b−ν−1)x + α]·Q_ν + ν(2b−ν−1)·(1+x²)·Q_{ν−1}`
/// up to `Q_n^(α,b)`.
fn q_recurrence_ladder(alpha: &BigRational, b: &BigRational, n: usize) -> RationalPoly {
    let s = s_poly();
    let mut prev = RationalPoly::one(); // Q_0
    if n == 0 {
        return prev;
    }
    // Q_1^(α,b) = 2(b−1)x + α
    let mut cur = DensePolynomial::new(vec![alpha.clone(), rat(2) * (b - rat(1))]);
    for nu in 1..n {
        let lin = DensePolynomial::new(vec![alpha.clone(), rat(2) * (b - rat(nu as i64 + 1))]);
        let coupling = rat(nu as i64) * (rat(2) * b - rat(nu as i64 + 1));
        let next = lin.mul(&cur).add(&s.mul(&prev).scale(&coupling));
        prev = cur;
        cur = next;
    }
    cur
}

/// Reference closed forms of the first three polynomials, used by tests and
/// the verification suites.
pub fn closed_form_r(n: usize, params: &FamilyParams) -> Option<RationalPoly> {
    let (a, b) = (&params.alpha, &params.beta);
    match n {
        0 => Some(RationalPoly::one()),
        1 => Some(DensePolynomial::new(vec![a.clone(), rat(2) * b])),
        2 => {
            let two_b = rat(2) * b;
            Some(DensePolynomial::new(vec![
                &two_b + a * a + rat(2),
                rat(2) * (&two_b + rat(1)) * a,
                (&two_b + rat(1)) * (&two_b + rat(2)),
            ]))
        }
        _ => None,
    }
}
