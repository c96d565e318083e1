//! Closed-form bound states built on the Romanovski family.
//!
//! Two exactly solvable one-dimensional problems (units ħ = 1 = 2μ):
//!
//! * **Hyperbolic Scarf**, `V(z) = [B²−A(A+1)]·sech²z − B(2A+1)·tanh z·sech z`
//!   on ℝ. With `x = sinh z` the bound states are
//!
//!   ```text
//!   ψ_n(z) = C_n·(1+x²)^(β/2−1/4)·e^((α/2)·atan x)·R_n^(α,β)(x),
//!   α = 2B,  β = 1/2 − A,  E_n = −(A−n)²,  0 ≤ n < A.
//!   ```
//!
//!   The sign of α is fixed by matching the ODE: substituting the ansatz
//!   gives a cross term `α(β−1)·x/(1+x²)` that must equal `−B(2A+1)·x/(1+x²)`,
//!   and with `β−1 = −(2A+1)/2` that forces `α = +2B` (the variant `α = −2B`
//!   solves the reflected potential `V_{A,−B}(z) = V_{A,B}(−z)`). The
//!   Schrödinger-residual test pins this down numerically.
//!
//! * **Trigonometric Rosen-Morse**, `v(z) = −2b·cot z + l(l+1)/sin²z` on
//!   (0, π). With `x = cot z` the bound states are
//!
//!   ```text
//!   ψ_n(z) = C_n·√(w^(α_n,β_n)(x))·R_n^(α_n,β_n)(x),
//!   α_n = 2b/(n+l+1),  β_n = −(n+l),
//!   ```
//!
//!   i.e. `sin^{n+l+1}z·e^{−bz/(n+l+1)}·R_n(cot z)` in z space. Both the
//!   prefactor power and β_n are fixed by substituting the ansatz into the
//!   Schrödinger equation: with k = n+l+1 the first-order Romanovski
//!   coefficient comes out `2(1−k)x + 2b/k`, i.e. β_n = 1−k, and the
//!   eigenvalue bookkeeping closes exactly
//!   (`λ = k²−k−l(l+1) = n(n+2l+1) = −λ_n`). The simplest instance is
//!   n = 0, l = 0: `sin z·e^{−bz}` has constant Rayleigh quotient `1−b²`,
//!   while `e^{−bz}` alone does not. Both parameters run with the degree, so
//!   the mutual orthogonality of these states is the running-parameter
//!   orthogonality of the family, not an instance of the fixed-(α,β)
//!   theorem. No closed-form `E_n` is asserted; energies are defined
//!   operationally by the Rayleigh-quotient oracle.
//!
//! The vanishing-asymmetry limit of the Scarf problem reconstructs the
//! associated Legendre functions:
//! `P_l^m(cos θ) ∝ (sin θ)^l · R_{m+l}^(0, 1/2−l)(−cot θ)`, and the cross-l
//! orthogonality of those reconstructions is the Q-family orthogonality in
//! disguise.

use alloc::vec::Vec;

use crate::math;
use crate::poly::DoublePoly;
use crate::quadrature::{integrate_real_line, IntegralResult, Verdict};
use crate::romanovski::FamilyParams;

/// Hyperbolic Scarf parameters: depth A (> n for a bound state n), asymmetry B.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScarfParams {
    pub a: f64,
    pub b: f64,
}

/// Trigonometric Rosen-Morse parameters: cotangent strength b, angular
/// momentum l.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RosenMorseParams {
    pub b: f64,
    pub l: u32,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Problem {
    Scarf(ScarfParams),
    RosenMorse(RosenMorseParams),
}

/// Errors of the bound-state constructions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhysicsError {
    /// n ≥ A: no bound state.
    Unbound { n: usize, a: f64 },
    /// Argument outside the potential's domain.
    OutOfDomain,
    /// l = l′ passed to the cross-l orthogonality integral.
    EqualAngularMomenta,
    /// m > min(l, l′) or similar index violation.
    BadIndices,
    /// Fewer than 16 grid points usable for the Rayleigh quotient.
    TooFewPoints { usable: usize },
}

impl core::fmt::Display for PhysicsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PhysicsError::Unbound { n, a } => write!(f, "state n={n} unbound for A={a}"),
            PhysicsError::OutOfDomain => write!(f, "argument outside the potential domain"),
            PhysicsError::EqualAngularMomenta => write!(f, "l and l' must differ"),
            PhysicsError::BadIndices => write!(f, "index out of range"),
            PhysicsError::TooFewPoints { usable } => {
                write!(f, "only {usable} usable grid points (need >= 16)")
            }
        }
    }
}

impl core::error::Error for PhysicsError {}

/// `exp(half_power·ln(1+x²) + extra)·p(x)`, stable when the envelope decays
/// faster than the polynomial grows (`2·half_power + deg p < 0`): large and
/// infinite x underflow to 0 instead of producing 0·∞.
fn envelope_eval(p: &DoublePoly, x: f64, half_power: f64, extra: f64) -> f64 {
    if p.is_zero() {
        return 0.0;
    }
    if x.abs() <= 1.0 {
        return math::exp(half_power * math::ln_1p(x * x) + extra) * p.eval(&x);
    }
    let m = p.degree().unwrap_or(0);
    let exponent = (2.0 * half_power + m as f64) * math::ln(x.abs())
        + half_power * math::ln_1p(1.0 / (x * x))
        + extra;
    let v = math::exp(exponent) * p.eval_reversed(1.0 / x);
    if x < 0.0 && m % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `V(z) = [B²−A(A+1)]·sech²z − B(2A+1)·tanh z·sech z`.
pub fn scarf_potential(z: f64, p: &ScarfParams) -> f64 {
    let sech = 1.0 / math::cosh(z);
    (p.b * p.b - p.a * (p.a + 1.0)) * sech * sech - p.b * (2.0 * p.a + 1.0) * math::tanh(z) * sech
}

/// `v(z) = −2b·cot z + l(l+1)/sin²z` on (0, π).
pub fn rosen_morse_potential(z: f64, p: &RosenMorseParams) -> Result<f64, PhysicsError> {
    if !(z > 0.0 && z < math::PI) {
        return Err(PhysicsError::OutOfDomain);
    }
    let s = math::sin(z);
    let ll = (p.l * (p.l + 1)) as f64;
    Ok(-2.0 * p.b * math::cos(z) / s + ll / (s * s))
}

/// A normalized bound state with an evaluable wavefunction.
#[derive(Debug, Clone)]
pub struct BoundState {
    pub n: usize,
    pub problem: Problem,
    /// For Scarf, the closed form −(A−n)²; for Rosen-Morse, the Rayleigh
    /// estimate over the default grid.
    pub energy: f64,
    /// L²-normalization constant (sign fixed so the wavefunction is positive
    /// at the first grid point where it is appreciably nonzero).
    pub normalization: f64,
    /// Family parameters actually used (n-dependent for Rosen-Morse).
    pub family: FamilyParams,
    poly: DoublePoly,
    alpha: f64,
    beta: f64,
}

impl BoundState {
    /// Wavefunction value at z.
    pub fn psi(&self, z: f64) -> f64 {
        self.normalization * self.psi_raw(z)
    }

    fn psi_raw(&self, z: f64) -> f64 {
        match self.problem {
            Problem::Scarf(_) => {
                let x = math::sinh(z);
                envelope_eval(
                    &self.poly,
                    x,
                    0.5 * self.beta - 0.25,
                    0.5 * self.alpha * math::atan(x),
                )
            }
            Problem::RosenMorse(p) => {
                if !(z > 0.0 && z < math::PI) {
                    return 0.0;
                }
                let k = self.n as f64 + p.l as f64 + 1.0;
                // (1+x²)^(−(n+l+1)/2)·e^(−(b/(n+l+1))·acot x) with x = cot z
                // is sin^{n+l+1}z·e^{−bz/(n+l+1)}
                let x = math::cos(z) / math::sin(z);
                envelope_eval(&self.poly, x, -0.5 * k, -p.b / k * z)
            }
        }
    }

    /// Potential the state belongs to (0 outside the Rosen-Morse domain).
    pub fn potential(&self, z: f64) -> f64 {
        match self.problem {
            Problem::Scarf(p) => scarf_potential(z, &p),
            Problem::RosenMorse(p) => rosen_morse_potential(z, &p).unwrap_or(0.0),
        }
    }

    /// Default Rayleigh/sampling grid for this problem.
    pub fn default_grid(&self) -> GridSpec {
        match self.problem {
            Problem::Scarf(_) => GridSpec {
                lo: -8.0,
                hi: 8.0,
                points: 2001,
            },
            Problem::RosenMorse(_) => GridSpec {
                lo: 0.05,
                hi: math::PI - 0.05,
                points: 2001,
            },
        }
    }
}

/// Bound state of the hyperbolic Scarf potential, unit-normalized over ℝ.
pub fn scarf_state(n: usize, p: &ScarfParams) -> Result<BoundState, PhysicsError> {
    if (n as f64) >= p.a {
        return Err(PhysicsError::Unbound { n, a: p.a });
    }
    let family = FamilyParams::from_f64(2.0 * p.b, 0.5 - p.a);
    let poly = family.recurrence(n).to_double();
    let mut state = BoundState {
        n,
        problem: Problem::Scarf(*p),
        energy: -(p.a - n as f64) * (p.a - n as f64),
        normalization: 1.0,
        alpha: family.alpha_f64(),
        beta: family.beta_f64(),
        family,
        poly,
    };
    let norm_sq = integrate_real_line(|z| state.psi_raw(z) * state.psi_raw(z), 1e-12).value;
    apply_normalization(&mut state, norm_sq);
    Ok(state)
}

/// Bound state of the trigonometric Rosen-Morse potential, unit-normalized
/// over (0, π); energy from the Rayleigh oracle on the default grid.
///
/// In x = cot z the state is exactly `ψ_n = C_n·√(w^(α_n,β_n)(x))·R_n(x)`,
/// so the z-space orthonormality is the running-parameter integral
/// `∫ (dx/s)·√(w_n)·R_n·√(w_n')·R_n' = δ_nn'`.
pub fn rosen_morse_state(n: usize, p: &RosenMorseParams) -> Result<BoundState, PhysicsError> {
    let k = n as f64 + p.l as f64 + 1.0;
    // β_n = 1 − k = −(n+l): the ansatz √w·R solves the Schrödinger equation
    // exactly when the first-order Romanovski coefficient is 2(1−k)x + 2b/k,
    // with E_n = k² − b²/k² and λ_n = −n(n+2l+1).
    let family = FamilyParams::from_f64(2.0 * p.b / k, 1.0 - k);
    let poly = family.recurrence(n).to_double();
    let mut state = BoundState {
        n,
        problem: Problem::RosenMorse(*p),
        energy: f64::NAN,
        normalization: 1.0,
        alpha: family.alpha_f64(),
        beta: family.beta_f64(),
        family: family.clone(),
        poly: poly.clone(),
    };
    // ∫₀^π ψ² dz = ∫ℝ w·R²·dx/s under x = cot z
    let norm_sq = integrate_real_line(
        |x| {
            let f = math::exp(family.log_weight(x) - math::ln_1p(x * x));
            let r = poly.eval(&x);
            f * r * r
        },
        1e-12,
    )
    .value;
    apply_normalization(&mut state, norm_sq);
    let rayleigh = rayleigh_energy(&state, &state.default_grid())?;
    state.energy = rayleigh.mean;
    Ok(state)
}

fn apply_normalization(state: &mut BoundState, norm_sq: f64) {
    state.normalization = 1.0 / math::sqrt(norm_sq);
    // sign convention: positive at the first appreciably nonzero grid point
    let grid = state.default_grid();
    let h = (grid.hi - grid.lo) / (grid.points - 1) as f64;
    let values: Vec<f64> = (0..grid.points)
        .map(|i| state.psi_raw(grid.lo + i as f64 * h))
        .collect();
    let max_abs = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if let Some(first) = values.iter().find(|v| v.abs() > 1e-8 * max_abs) {
        if *first < 0.0 {
            state.normalization = -state.normalization;
        }
    }
}

/// Overlap ∫ψ_m ψ_n dz of two Scarf states. Divergent (by decay analysis)
/// unless `m + n < 2A`; equals δ_mn inside that window.
pub fn scarf_overlap(m: usize, n: usize, p: &ScarfParams) -> Result<IntegralResult, PhysicsError> {
    let sm = scarf_state(m, p)?;
    let sn = scarf_state(n, p)?;
    // x-space exponent of w·R_m·R_n is m + n − 2A − 1; convergent iff < −1
    if (m + n) as f64 >= 2.0 * p.a {
        return Ok(IntegralResult {
            value: f64::NAN,
            error_estimate: f64::INFINITY,
            verdict: Verdict::Divergent,
        });
    }
    Ok(integrate_real_line(|z| sm.psi(z) * sn.psi(z), 1e-11))
}

/// Overlap ∫₀^π ψ_m ψ_n dz of two Rosen-Morse states (always convergent).
pub fn rosen_morse_overlap(
    m: usize,
    n: usize,
    p: &RosenMorseParams,
) -> Result<IntegralResult, PhysicsError> {
    let sm = rosen_morse_state(m, p)?;
    let sn = rosen_morse_state(n, p)?;
    // integrate in x = cot z: dz = dx/(1+x²)
    Ok(integrate_real_line(
        |x| {
            let z = math::acot(x);
            sm.psi(z) * sn.psi(z) / (1.0 + x * x)
        },
        1e-11,
    ))
}

/// Uniform sampling grid.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

/// Rayleigh-quotient estimate: mean energy and constancy diagnostic.
#[derive(Debug, Clone, Copy)]
pub struct RayleighEstimate {
    pub mean: f64,
    pub stddev: f64,
    pub points_used: usize,
}

/// Pointwise Rayleigh quotient `(−ψ'' + vψ)/ψ` averaged over the grid, ψ'' by
/// the 5-point stencil. Points with `|ψ| < 1e−8·max|ψ|` are excluded; errors
/// out if fewer than 16 remain. For a true eigenfunction the quotient is the
/// energy and the stddev is a discretization residual.
pub fn rayleigh_energy(
    state: &BoundState,
    grid: &GridSpec,
) -> Result<RayleighEstimate, PhysicsError> {
    let n = grid.points;
    if n < 5 {
        return Err(PhysicsError::TooFewPoints { usable: 0 });
    }
    let h = (grid.hi - grid.lo) / (n - 1) as f64;
    let psi: Vec<f64> = (0..n).map(|i| state.psi(grid.lo + i as f64 * h)).collect();
    let max_abs = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut ratios = Vec::new();
    for i in 2..n - 2 {
        if psi[i].abs() < 1e-8 * max_abs {
            continue;
        }
        let second =
            (-psi[i - 2] + 16.0 * psi[i - 1] - 30.0 * psi[i] + 16.0 * psi[i + 1] - psi[i + 2])
                / (12.0 * h * h);
        let z = grid.lo + i as f64 * h;
        ratios.push((-second + state.potential(z) * psi[i]) / psi[i]);
    }
    if ratios.len() < 16 {
        return Err(PhysicsError::TooFewPoints {
            usable: ratios.len(),
        });
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let var = ratios.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / ratios.len() as f64;
    Ok(RayleighEstimate {
        mean,
        stddev: math::sqrt(var),
        points_used: ratios.len(),
    })
}

/// Sign changes of ψ across the grid (node count; equals n for the n-th
/// bound state).
pub fn count_nodes(state: &BoundState, grid: &GridSpec) -> usize {
    let h = (grid.hi - grid.lo) / (grid.points - 1) as f64;
    let psi: Vec<f64> = (0..grid.points)
        .map(|i| state.psi(grid.lo + i as f64 * h))
        .collect();
    let max_abs = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut nodes = 0;
    let mut prev = 0.0f64;
    for v in psi {
        if v.abs() < 1e-7 * max_abs {
            continue;
        }
        if prev != 0.0 && v.signum() != prev.signum() {
            nodes += 1;
        }
        prev = v;
    }
    nodes
}

/// `(sin θ)^l · R_{m+l}^(0, 1/2−l)(−cot θ)`, proportional to the associated
/// Legendre function `P_l^m(cos θ)`. The proportionality constant is
/// convention-dependent; compare ratios, not values.
pub fn assoc_legendre_via_romanovski(l: u32, m: u32, theta: f64) -> Result<f64, PhysicsError> {
    if m > l {
        return Err(PhysicsError::BadIndices);
    }
    if !(theta > 0.0 && theta < math::PI) {
        return Err(PhysicsError::OutOfDomain);
    }
    let family = half_shift_family(l);
    let poly = family.recurrence((m + l) as usize).to_double();
    let x = -math::cos(theta) / math::sin(theta);
    Ok(math::powi(math::sin(theta), l as i32) * poly.eval(&x))
}

/// Reference associated Legendre `P_l^m(x)` by the standard three-term
/// recurrence, without the Condon-Shortley phase. Independent of the
/// Romanovski construction; used as its oracle.
pub fn assoc_legendre_oracle(l: u32, m: u32, x: f64) -> f64 {
    debug_assert!(m <= l);
    let mut pmm = 1.0;
    if m > 0 {
        // P_m^m = (2m−1)!!·(1−x²)^(m/2)
        let somx2 = math::sqrt((1.0 - x) * (1.0 + x));
        let mut fact = 1.0;
        for _ in 0..m {
            pmm *= fact * somx2;
            fact += 2.0;
        }
    }
    if l == m {
        return pmm;
    }
    let mut pmmp1 = x * (2.0 * m as f64 + 1.0) * pmm;
    if l == m + 1 {
        return pmmp1;
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        pll = (x * (2 * ll - 1) as f64 * pmmp1 - (ll + m - 1) as f64 * pmm) / (ll - m) as f64;
        pmm = pmmp1;
        pmmp1 = pll;
    }
    pll
}

/// Family (α, β) = (0, 1/2 − l), exact.
fn half_shift_family(l: u32) -> FamilyParams {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    FamilyParams::new(
        BigRational::from_integer(BigInt::from(0)),
        BigRational::new(BigInt::from(1 - 2 * l as i64), BigInt::from(2)),
    )
}

/// Cross-l orthogonality integral of the associated-Legendre reconstructions,
///
/// ```text
/// ∫ (1+x²)^(−(l+l')/2)·R_n^(0,1/2−l)(x)·R_{n'}^(0,1/2−l')(x)·(1+x²)^(−3/2) dx,
/// ```
///
/// with `l − n = l' − n' = m ≥ 0` (the sech²z·dz Jacobian of x = sinh z
/// supplies the `(1+x²)^(−3/2)`). Vanishes for l ≠ l'; an instance of the
/// Q-family orthogonality.
pub fn legendre_cross_orthogonality(
    l: u32,
    lp: u32,
    m: u32,
) -> Result<IntegralResult, PhysicsError> {
    if l == lp {
        return Err(PhysicsError::EqualAngularMomenta);
    }
    if m > l.min(lp) {
        return Err(PhysicsError::BadIndices);
    }
    let pn = half_shift_family(l).recurrence((l - m) as usize).to_double();
    let pnp = half_shift_family(lp).recurrence((lp - m) as usize).to_double();
    let power = 0.5 * (l + lp) as f64 + 1.5;
    Ok(integrate_real_line(
        |x| math::exp(-power * math::ln_1p(x * x)) * pn.eval(&x) * pnp.eval(&x),
        1e-12,
    ))
}
