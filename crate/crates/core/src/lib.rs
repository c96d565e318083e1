//! Romanovski polynomials and their applications.
//!
//! The Romanovski family `R_n^(α,β)` collects the real polynomial solutions of
//!
//! ```text
//! (1 + x²) R''(x) + (2βx + α) R'(x) + λ R(x) = 0,
//! ```
//!
//! the hypergeometric equation whose second-order coefficient has two complex
//! conjugate roots. Unlike Hermite, Laguerre and Jacobi polynomials, a family
//! with fixed (α, β) is only *finitely* orthogonal under its weight
//! `w(x) = (1+x²)^(β−1) e^(−α·acot x)`: the inner product of `R_m` and `R_n`
//! converges and vanishes exactly when `m + n < 1 − 2β`.
//!
//! This crate constructs the polynomials exactly (arbitrary-precision rational
//! coefficients) through two independent routes — the symbolic Rodrigues ladder
//! and a three-term recurrence — and verifies the family's identities against
//! independent oracles: contour-integral evaluation, generating functions,
//! adaptive quadrature with a-priori decay analysis, and a complex-Jacobi
//! characterization. On top of the family sit three applications:
//!
//! * bound states of the hyperbolic Scarf potential ([`physics::scarf_state`]),
//! * bound states of the trigonometric Rosen-Morse potential
//!   ([`physics::rosen_morse_state`]),
//! * gap probabilities of the Cauchy random-matrix ensemble ([`rmt`]).
//!
//! The crate is `no_std` (with `alloc`); all floating-point transcendentals go
//! through `libm` so results are identical on std and no_std targets.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod contour;
pub mod jacobi;
pub mod linalg;
pub mod math;
pub mod physics;
pub mod poly;
pub mod quadrature;
pub mod rmt;
pub mod romanovski;

pub use poly::{DensePolynomial, DoublePoly, RationalPoly};
pub use romanovski::{FamilyParams, RomanovskiPoly};
