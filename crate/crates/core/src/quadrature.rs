//! Improper integrals over ℝ with a-priori convergence analysis.
//!
//! Convergence of every orthogonality integral is decided *analytically*
//! before any quadrature runs: the integrand `w^(α,β)·R_m·R_n·s^(−j)` behaves
//! at ±∞ like a power of x with exponent `2β − 2 + m + n − 2j` (the
//! exponential factor tends to a positive constant on the chosen acot branch),
//! so the integral converges iff that exponent is < −1. Divergence is a
//! first-class verdict, not a timeout.
//!
//! The quadrature itself substitutes `x = tan u`, mapping ℝ to (−π/2, π/2):
//! rational-times-bounded-exponential integrands become smooth there (the
//! weight's `acot x` turns into the affine `π/2 − u`), and composite
//! Gauss-Legendre panels with dyadic refinement converge rapidly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::math;
use crate::romanovski::FamilyParams;

/// Absolute tolerance used by the orthogonality checks.
pub const DEFAULT_TOL: f64 = 1e-10;

const GAUSS_ORDER: usize = 16;
const INITIAL_PANELS: usize = 8;
const MAX_DEPTH: u32 = 46;
const PANEL_BUDGET: usize = 6000;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convergence verdict attached to every integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Convergent,
    /// The refinement cap was reached before the tolerance was met.
    Marginal,
    /// Ruled divergent by decay analysis; no quadrature was attempted.
    Divergent,
}

/// Value, error estimate (difference of the two finest refinement levels) and
/// convergence verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub verdict: Verdict,
}

impl IntegralResult {
    fn divergent() -> Self {
        IntegralResult {
            value: f64::NAN,
            error_estimate: f64::INFINITY,
            verdict: Verdict::Divergent,
        }
    }

    pub fn is_convergent(&self) -> bool {
        self.verdict == Verdict::Convergent
    }
}

/// Power of x governing an integrand at ±∞ and the resulting verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayAnalysis {
    pub exponent: BigRational,
    /// True iff exponent < −1. The boundary exponent −1 (log divergence) is
    /// divergent.
    pub convergent: bool,
}

/// Decay exponent `2β − 2 + m + n − 2·jacobian_power` of
/// `w^(α,β)·R_m·R_n·s^(−jacobian_power)` at ±∞.
pub fn decay_exponent(
    m: usize,
    n: usize,
    params: &FamilyParams,
    jacobian_power: &BigRational,
) -> DecayAnalysis {
    let exponent =
        rat(2) * &params.beta - rat(2) + rat(m as i64 + n as i64) - rat(2) * jacobian_power;
    let convergent = exponent < rat(-1);
    DecayAnalysis {
        exponent,
        convergent,
    }
}

/// Gauss-Legendre rule on [−1, 1]: nodes by Newton iteration on `P_n`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            // Chebyshev-like initial guess, then Newton on P_n.
            let mut x = math::cos(math::PI * (i as f64 + 0.75) / (n + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(order, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    let (p2, d2) = legendre_and_derivative(order, x);
                    dp = d2;
                    x -= p2 / d2;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// ∫_lo^hi f, single panel.
    pub fn integrate<F: Fn(f64) -> f64>(&self, lo: f64, hi: f64, f: &F) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    /// ∫_lo^hi f over `panels` equal panels.
    pub fn integrate_panels<F: Fn(f64) -> f64>(
        &self,
        lo: f64,
        hi: f64,
        panels: usize,
        f: &F,
    ) -> f64 {
        let width = (hi - lo) / panels as f64;
        (0..panels)
            .map(|k| self.integrate(lo + k as f64 * width, lo + (k + 1) as f64 * width, f))
            .sum()
    }

    /// Scaled nodes and weights on [lo, hi].
    pub fn scaled_to(&self, lo: f64, hi: f64) -> Vec<(f64, f64)> {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| (mid + half * x, w * half))
            .collect()
    }
}

fn legendre_and_derivative(order: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if order == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=order {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = order as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// ∫_{−∞}^{∞} f(x) dx by `x = tan u` and composite Gauss-Legendre on
/// (−π/2, π/2) with adaptive dyadic panel refinement: the panel with the
/// largest two-level difference is bisected until the summed differences drop
/// below `tol` (absolute) or the panel budget/depth cap is reached (verdict
/// `Marginal`). The error estimate is that sum — the difference between the
/// two finest refinement levels, accumulated per panel. Bisection
/// concentrates panels where the integrand is least polynomial-like, which
/// handles the algebraic endpoint behavior of non-integer weight exponents.
pub fn integrate_real_line<F: Fn(f64) -> f64>(f: F, tol: f64) -> IntegralResult {
    let rule = GaussLegendre::new(GAUSS_ORDER);
    let g = |u: f64| {
        let c = math::cos(u);
        f(math::tan(u)) / (c * c)
    };

    struct Panel {
        lo: f64,
        hi: f64,
        fine: f64,
        err: f64,
        depth: u32,
    }
    let make_panel = |lo: f64, hi: f64, depth: u32| {
        let coarse = rule.integrate(lo, hi, &g);
        let mid = 0.5 * (lo + hi);
        let fine = rule.integrate(lo, mid, &g) + rule.integrate(mid, hi, &g);
        Panel {
            lo,
            hi,
            fine,
            err: (fine - coarse).abs(),
            depth,
        }
    };

    let mut panels: Vec<Panel> = (0..INITIAL_PANELS)
        .map(|k| {
            let width = math::PI / INITIAL_PANELS as f64;
            let lo = -math::FRAC_PI_2 + k as f64 * width;
            make_panel(lo, lo + width, 0)
        })
        .collect();

    loop {
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        // roundoff floor: once the two-level differences sit at the rounding
        // level of the accumulated panel mass, refinement cannot help
        let mass: f64 = panels.iter().map(|p| p.fine.abs()).sum();
        if total_err < tol.max(1e-13 * mass) {
            return IntegralResult {
                value: panels.iter().map(|p| p.fine).sum(),
                error_estimate: total_err,
                verdict: Verdict::Convergent,
            };
        }
        // split the currently worst panel
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.err.partial_cmp(&b.1.err).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        if panels.len() >= PANEL_BUDGET || panels[worst].depth >= MAX_DEPTH {
            return IntegralResult {
                value: panels.iter().map(|p| p.fine).sum(),
                error_estimate: total_err,
                verdict: Verdict::Marginal,
            };
        }
        let Panel { lo, hi, depth, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        panels.push(make_panel(lo, mid, depth + 1));
        panels.push(make_panel(mid, hi, depth + 1));
    }
}

/// ⟨R_m, R_n⟩ = ∫ w^(α,β)·R_m·R_n dx, guarded by decay analysis: a divergent
/// exponent returns the `Divergent` verdict without integrating.
pub fn inner_product_r(m: usize, n: usize, params: &FamilyParams) -> IntegralResult {
    let analysis = decay_exponent(m, n, params, &BigRational::zero());
    if !analysis.convergent {
        return IntegralResult::divergent();
    }
    let pm = params.recurrence(m).to_double();
    let pn = params.recurrence(n).to_double();
    integrate_real_line(
        |x| params.weight(x) * pm.eval(&x) * pn.eval(&x),
        DEFAULT_TOL,
    )
}

/// Squared norm ∫ w·R_n² dx. Convergent iff `2β − 2 + 2n < −1`, i.e.
/// `n < 1/2 − β` — the decay-exponent criterion (the companion statement
/// `n < −β` is sufficient but half a unit narrower; the exponent test is the
/// implemented predicate).
pub fn norm_r(n: usize, params: &FamilyParams) -> IntegralResult {
    inner_product_r(n, n, params)
}

/// Q-family inner product with parity-dependent ε.
#[derive(Debug, Clone, Copy)]
pub struct QInnerProduct {
    pub result: IntegralResult,
    /// ε = 1 for odd m+n, 2 for even (and for the diagonal analog m = n).
    pub epsilon: u32,
    /// True iff m ≠ n and β < ε − 1/2, the hypotheses under which the
    /// integral is zero; outside them the value is still computed.
    pub within_theorem: bool,
}

/// `∫ w^(α,β)·s^(−ε/2)·(Q_m·s^(−m/2))·(Q_n·s^(−n/2)) dx` with ε = 1 for odd
/// m+n and ε = 2 for even. Zero whenever m ≠ n and β < ε − 1/2; the diagonal
/// analog (m = n, ε = 2) is positive.
pub fn inner_product_q(m: usize, n: usize, params: &FamilyParams) -> QInnerProduct {
    let epsilon: u32 = if (m + n) % 2 == 1 { 1 } else { 2 };
    let threshold = rat(epsilon as i64) - BigRational::new(BigInt::from(1), BigInt::from(2));
    let within_theorem = m != n && params.beta < threshold;
    let jacobian = BigRational::new(
        BigInt::from((epsilon as usize + m + n) as i64),
        BigInt::from(2),
    );
    let analysis = decay_exponent(m, n, params, &jacobian);
    if !analysis.convergent {
        return QInnerProduct {
            result: IntegralResult::divergent(),
            epsilon,
            within_theorem,
        };
    }
    let qm = params.q_poly(m).to_double();
    let qn = params.q_poly(n).to_double();
    let half_power = 0.5 * (epsilon as usize + m + n) as f64;
    let result = integrate_real_line(
        |x| {
            math::exp(params.log_weight(x) - half_power * math::ln_1p(x * x))
                * qm.eval(&x)
                * qn.eval(&x)
        },
        DEFAULT_TOL,
    );
    QInnerProduct {
        result,
        epsilon,
        within_theorem,
    }
}

/// All pairwise ⟨R_m, R_n⟩, m, n ≤ max_degree, computed once per unordered
/// pair; divergent entries carry their verdicts.
pub fn gram_matrix(max_degree: usize, params: &FamilyParams) -> Vec<Vec<IntegralResult>> {
    let n = max_degree + 1;
    let mut gram = vec![
        vec![
            IntegralResult {
                value: 0.0,
                error_estimate: 0.0,
                verdict: Verdict::Convergent
            };
            n
        ];
        n
    ];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in i..n {
            let entry = inner_product_r(i, j, params);
            gram[i][j] = entry;
            gram[j][i] = entry;
        }
    }
    gram
}
