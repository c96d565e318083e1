//! Sharpness of the finite-orthogonality window and verdict soundness.

mod common;

use num_rational::BigRational;
use num_traits::Zero;

use romanovski_core::linalg::{cholesky, Matrix};
use romanovski_core::math;
use romanovski_core::quadrature::{
    decay_exponent, gram_matrix, inner_product_r, norm_r, GaussLegendre, Verdict,
};
use romanovski_core::FamilyParams;

/// ∫ w·|R_m·R_n| mass, used to scale near-zero assertions when a diagonal
/// norm itself diverges.
fn absolute_mass(m: usize, n: usize, params: &FamilyParams) -> f64 {
    let pm = params.recurrence(m).to_double();
    let pn = params.recurrence(n).to_double();
    romanovski_core::quadrature::integrate_real_line(
        |x| (params.weight(x) * pm.eval(&x) * pn.eval(&x)).abs(),
        1e-10,
    )
    .value
}

#[test]
fn finite_orthogonality_is_sharp_at_half_integer_beta() {
    // β = −5.5: pairs with m+n ≤ 11 < 1−2β = 12 vanish; the (6,6) diagonal
    // has decay exponent exactly −1 and is flagged divergent (log case).
    let params = FamilyParams::from_f64(1.0, -5.5);
    for m in 0..=5usize {
        for n in (m + 1)..=6usize {
            let r = inner_product_r(m, n, &params);
            assert!(r.is_convergent(), "({m},{n}) should converge");
            let scale = absolute_mass(m, n, &params);
            assert!(
                r.value.abs() < 1e-8 * scale,
                "({m},{n}) -> {} (scale {scale})",
                r.value
            );
        }
    }
    let diag = norm_r(6, &params);
    assert_eq!(diag.verdict, Verdict::Divergent);
    let analysis = decay_exponent(6, 6, &params, &BigRational::zero());
    assert_eq!(analysis.exponent, BigRational::from_float(-1.0).unwrap());
    assert!(!analysis.convergent);
}

#[test]
fn divergent_verdicts_are_confirmed_by_window_doubling() {
    // Whenever decay analysis says divergent, the raw truncated integral over
    // [−T, T] moves by more than 10% when the window doubles.
    let rule = GaussLegendre::new(32);
    let cases = [
        (0usize, 2usize, FamilyParams::from_int(0, 0)),
        (2, 2, FamilyParams::from_int(0, 0)),
        (6, 6, FamilyParams::from_f64(1.0, -5.5)),
        (3, 4, FamilyParams::from_int(2, -3)),
    ];
    for (m, n, params) in cases {
        let analysis = decay_exponent(m, n, &params, &BigRational::zero());
        assert!(!analysis.convergent, "({m},{n}) expected divergent");
        let pm = params.recurrence(m).to_double();
        let pn = params.recurrence(n).to_double();
        let truncated = |t: f64| {
            rule.integrate_panels(-t, t, 256, &|x| {
                params.weight(x) * pm.eval(&x) * pn.eval(&x)
            })
        };
        let narrow = truncated(10.0);
        let wide = truncated(20.0);
        assert!(
            (wide - narrow).abs() > 0.10 * narrow.abs().max(1e-300),
            "({m},{n}): {narrow} -> {wide}"
        );
    }
}

#[test]
fn normalizable_gram_matrix_is_positive_definite() {
    // β = −10, α = 1: degrees ≤ 4 all lie in the normalizable window; the
    // Gram matrix must admit a Cholesky factorization.
    let params = FamilyParams::from_int(1, -10);
    let gram = gram_matrix(4, &params);
    let mut m = Matrix::zeros(5);
    for i in 0..5 {
        for j in 0..5 {
            assert!(gram[i][j].is_convergent());
            m[(i, j)] = gram[i][j].value;
        }
    }
    assert!(cholesky(&m).is_some(), "Gram matrix not positive definite");
}

#[test]
fn quadrature_handles_fractional_weight_exponents() {
    // Non-integer β puts an algebraic singularity at the ends of the tan
    // substitution; the adaptive refinement must still converge.
    let params = FamilyParams::from_f64(0.3, -4.2);
    let n0 = norm_r(0, &params);
    assert!(n0.is_convergent());
    assert!(n0.value > 0.0);
    // cross-check against a wide truncated reference integral
    let rule = GaussLegendre::new(32);
    let reference = rule.integrate_panels(-100.0, 100.0, 4096, &|x| params.weight(x));
    assert!(
        (n0.value - reference).abs() < 1e-8 * reference,
        "{} vs {reference}",
        n0.value
    );
}
