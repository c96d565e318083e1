//! Property tests for the polynomial backends and cross-route identities.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use romanovski_core::{DensePolynomial, FamilyParams, RationalPoly};

fn rational(num: i64, den: u32) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn rational_poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((-50i64..=50, 1u32..=9), 0..=12)
        .prop_map(|cs| DensePolynomial::new(cs.into_iter().map(|(n, d)| rational(n, d)).collect()))
}

/// Positive coefficients and positive argument keep Horner cancellation-free,
/// which is the regime where the two backends agree to a few ulps.
fn positive_poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((1i64..=100, 1u32..=9), 1..=13)
        .prop_map(|cs| DensePolynomial::new(cs.into_iter().map(|(n, d)| rational(n, d)).collect()))
}

fn ulps_apart(a: f64, b: f64) -> u64 {
    let to_ordered = |x: f64| {
        let bits = x.to_bits() as i64;
        if bits < 0 { i64::MIN - bits } else { bits }
    };
    (to_ordered(a) - to_ordered(b)).unsigned_abs()
}

proptest! {
    #[test]
    fn product_evaluation_is_multiplicative(p in rational_poly(), q in rational_poly(),
                                            xn in -30i64..=30, xd in 1u32..=7) {
        let x = rational(xn, xd);
        let lhs = p.mul(&q).eval(&x);
        let rhs = p.eval(&x) * q.eval(&x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differentiation_is_linear(p in rational_poly(), q in rational_poly(),
                                 an in -9i64..=9, bn in -9i64..=9) {
        let a = rational(an, 1);
        let b = rational(bn, 1);
        let lhs = p.scale(&a).add(&q.scale(&b)).derivative();
        let rhs = p.derivative().scale(&a).add(&q.derivative().scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_of_product_adds(p in rational_poly(), q in rational_poly()) {
        let prod = p.mul(&q);
        match (p.degree(), q.degree()) {
            (Some(dp), Some(dq)) => prop_assert_eq!(prod.degree(), Some(dp + dq)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    /// Exact evaluation converted to double agrees with double-backend Horner
    /// within 8 ulps (degree ≤ 12, |x| ≤ 10, cancellation-free sampling).
    #[test]
    fn backend_round_trip_within_8_ulps(p in positive_poly(), xn in 0i64..=70, xd in 1u32..=7) {
        let x = rational(xn, xd); // 0 ≤ x ≤ 10
        let exact = p.eval(&x).to_f64().unwrap();
        let double = p.to_double().eval(&x.to_f64().unwrap());
        prop_assert!(ulps_apart(exact, double) <= 8,
            "exact {exact} vs double {double}: {} ulps", ulps_apart(exact, double));
    }
}

#[test]
fn construction_routes_agree_on_random_families() {
    // 50 random rational parameter pairs, n ≤ 6: Rodrigues ladder and
    // three-term recurrence produce identical exact coefficients.
    let mut rng = common::rng(0x5eed);
    for _ in 0..50 {
        let params = common::random_params(&mut rng);
        for n in 0..=6 {
            let a = params.rodrigues(n);
            let b = params.recurrence(n);
            assert_eq!(a.poly, b.poly, "params {params:?} n={n}");
            assert_eq!(a.degree_deficient, b.degree_deficient);
        }
    }
}

#[test]
fn parity_identity_on_random_families() {
    // R_n^(−α,β)(−x) = (−1)ⁿ·R_n^(α,β)(x) exactly.
    let mut rng = common::rng(0xfeed);
    for _ in 0..20 {
        let params = common::random_params(&mut rng);
        let flipped = FamilyParams::new(-params.alpha.clone(), params.beta.clone());
        for n in 0..=6usize {
            let lhs = flipped.rodrigues(n).poly.reflect();
            let mut rhs = params.rodrigues(n).poly;
            if n % 2 == 1 {
                rhs = rhs.neg();
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn contour_oracle_matches_direct_evaluation() {
    // |x| ≤ 3, n ≤ 8: contour evaluation within 1e−8 relative of Horner.
    use romanovski_core::contour::eval_via_contour;
    let params = FamilyParams::from_int(1, -5);
    let mut x = -3.0;
    while x <= 3.0 {
        for n in 0..=8 {
            let radius = 0.6 * (1.0 + x * x as f64).sqrt();
            let via_contour = eval_via_contour(&params, n, x, radius, 256).unwrap();
            let direct = params.rodrigues(n).poly.eval_f64(x);
            let scale = direct.abs().max(1.0);
            assert!(
                (via_contour - direct).abs() < 1e-8 * scale,
                "n={n} x={x}: {via_contour} vs {direct}"
            );
        }
        x += 0.75;
    }
}
