//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them). Tolerances are pinned in the
//! assertions; exact-arithmetic checks use zero tolerance.

mod common;

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use romanovski_core::jacobi::{complex_jacobi, conjugation_parity, romanovski_via_jacobi};
use romanovski_core::math;
use romanovski_core::physics::{
    assoc_legendre_oracle, assoc_legendre_via_romanovski, legendre_cross_orthogonality,
    rayleigh_energy, rosen_morse_overlap, rosen_morse_state, scarf_overlap, scarf_state,
    RosenMorseParams, ScarfParams,
};
use romanovski_core::poly::DensePolynomial;
use romanovski_core::quadrature::{
    decay_exponent, inner_product_q, inner_product_r, norm_r, Verdict,
};
use romanovski_core::rmt::{
    gap_probability, mc_gap_estimate, orthonormal_basis, EnsembleSpec, GapQuery,
};
use romanovski_core::romanovski::closed_form_r;
use romanovski_core::{FamilyParams, RationalPoly};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

struct Criterion {
    id: u32,
    name: &'static str,
    started: Instant,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: u32, name: &'static str) -> Self {
        Criterion {
            id,
            name,
            started: Instant::now(),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Fn() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        let elapsed = self.started.elapsed().as_secs_f64();
        if self.failures.is_empty() {
            println!(
                "[acceptance] criterion {:02} ({}): PASS ({elapsed:.2}s)",
                self.id, self.name
            );
        } else {
            println!(
                "[acceptance] criterion {:02} ({}): FAIL ({elapsed:.2}s)",
                self.id, self.name
            );
            for f in &self.failures {
                println!("    - {f}");
            }
            panic!("criterion {:02} failed ({} checks)", self.id, self.failures.len());
        }
    }
}

#[test]
fn c01_exact_closed_forms() {
    let mut c = Criterion::new(1, "exact closed forms for degrees 0..2");
    let mut rng = common::rng(101);
    for _ in 0..20 {
        let params = common::random_params(&mut rng);
        for n in 0..=2usize {
            let built = params.rodrigues(n).poly;
            let reference = closed_form_r(n, &params).unwrap();
            c.check(built == reference, || {
                format!("closed form mismatch at n={n}, params {params:?}")
            });
        }
    }
    c.finish();
}

#[test]
fn c02_construction_equivalence() {
    let mut c = Criterion::new(2, "Rodrigues ladder == three-term recurrence, n <= 10");
    let mut rng = common::rng(202);
    for _ in 0..50 {
        let params = common::random_params(&mut rng);
        for n in 0..=10usize {
            let a = params.rodrigues(n);
            let b = params.recurrence(n);
            c.check(a.poly == b.poly, || {
                format!("route mismatch at n={n}, params {params:?}")
            });
            c.check(a.degree_deficient == b.degree_deficient, || {
                format!("deficiency flag mismatch at n={n}")
            });
        }
    }
    c.finish();
}

#[test]
fn c03_ode_residuals_exact_zero() {
    let mut c = Criterion::new(3, "exact-zero ODE residuals for R_n and Q_v, degree <= 8");
    let mut rng = common::rng(303);
    let mut families = vec![FamilyParams::from_int(2, -5), FamilyParams::from_int(0, 0)];
    for _ in 0..5 {
        families.push(common::random_params(&mut rng));
    }
    for params in &families {
        for n in 0..=8usize {
            c.check(params.rodrigues(n).ode_residual().is_zero(), || {
                format!("R residual nonzero at n={n}, params {params:?}")
            });
            // Q_v solves the (α, β−v) equation with λ_v = −v(2β−v−1)
            let q = params.q_poly(n);
            c.check(q.ode_residual().is_zero(), || {
                format!("Q residual nonzero at v={n}, params {params:?}")
            });
            let expected_lambda = -rat(n as i64) * (rat(2) * &params.beta - rat(n as i64 + 1));
            c.check(q.params.eigenvalue(n) == expected_lambda, || {
                format!("Q eigenvalue mismatch at v={n}")
            });
        }
    }
    c.finish();
}

#[test]
fn c04_finite_orthogonality_window() {
    let mut c = Criterion::new(4, "finite orthogonality at (alpha,beta)=(1,-10)");
    let params = FamilyParams::from_int(1, -10);
    let norms: Vec<f64> = (0..=10).map(|n| norm_r(n, &params).value).collect();
    for m in 0..=10usize {
        c.check(norms[m] > 0.0, || format!("norm {m} not positive"));
        for n in (m + 1)..=10usize {
            // every pair here has m+n <= 19 < 21 = 1 − 2β
            let r = inner_product_r(m, n, &params);
            c.check(r.is_convergent(), || format!("({m},{n}) not convergent"));
            let scale = math::sqrt(norms[m] * norms[n]);
            c.check(r.value.abs() < 1e-8 * scale, || {
                format!("({m},{n}) -> {} exceeds 1e-8 * {scale}", r.value)
            });
        }
    }
    // the counterexample pair is pre-declared divergent by exponent analysis
    let counter = FamilyParams::from_int(0, 0);
    let analysis = decay_exponent(0, 2, &counter, &BigRational::zero());
    c.check(!analysis.convergent && analysis.exponent == rat(0), || {
        "counterexample (0,2) at (0,0) not flagged by decay analysis".to_string()
    });
    c.check(
        inner_product_r(0, 2, &counter).verdict == Verdict::Divergent,
        || "counterexample (0,2) at (0,0) not divergent".to_string(),
    );
    c.finish();
}

#[test]
fn c05_q_family_orthogonality() {
    let mut c = Criterion::new(5, "whole-family Q-orthogonality at (alpha,beta)=(2,0)");
    let params = FamilyParams::from_int(2, 0);
    // diagonal analogs (epsilon = 2) set the relative scale
    let diag: Vec<f64> = (0..=8)
        .map(|n| inner_product_q(n, n, &params).result.value)
        .collect();
    for m in 0..=8usize {
        c.check(diag[m] > 0.0, || format!("diagonal analog {m} not positive"));
        for n in (m + 1)..=8usize {
            let q = inner_product_q(m, n, &params);
            c.check(q.within_theorem, || {
                format!("({m},{n}) unexpectedly outside the theorem hypotheses")
            });
            c.check(q.result.is_convergent(), || {
                format!("({m},{n}) not convergent")
            });
            let scale = math::sqrt(diag[m] * diag[n]);
            c.check(q.result.value.abs() < 1e-8 * scale, || {
                format!("({m},{n}) -> {} exceeds 1e-8 * {scale}", q.result.value)
            });
        }
    }
    c.finish();
}

#[test]
fn c06_generating_function_taylor_coefficients() {
    let mut c = Criterion::new(6, "generating-function Taylor coefficients k <= 6");
    let r_samples = [
        (FamilyParams::from_int(1, -4), 0.3),
        (FamilyParams::from_int(2, -3), 0.5),
        (FamilyParams::from_int(-1, 2), 0.25),
        (FamilyParams::from_int(3, -1), 0.45),
        (FamilyParams::from_int(0, -6), 0.6),
    ];
    for (params, x) in &r_samples {
        let coeffs = common::taylor_r(params, *x, 0.15, 7);
        let mut factorial = 1.0;
        for k in 0..=6usize {
            if k > 0 {
                factorial *= k as f64;
            }
            let exact = params.rodrigues(k).poly.eval_f64(*x) / factorial;
            c.check((coeffs[k] - exact).abs() < 1e-6 * exact.abs().max(1e-9), || {
                format!(
                    "R series {params:?} x={x} k={k}: {} vs exact {exact}",
                    coeffs[k]
                )
            });
        }
    }
    let q_samples = [
        (FamilyParams::from_int(2, -3), 0.5),
        (FamilyParams::from_int(1, -4), 0.3),
        (FamilyParams::from_int(-2, 3), 0.35),
        (FamilyParams::from_int(1, 5), 0.55),
        (FamilyParams::from_int(4, 0), 0.4),
    ];
    for (params, x) in &q_samples {
        let coeffs = common::taylor_q(params, *x, 0.15, 7);
        let mut factorial = 1.0;
        for k in 0..=6usize {
            if k > 0 {
                factorial *= k as f64;
            }
            let exact = params.q_poly(k).poly.eval_f64(*x) / factorial;
            c.check((coeffs[k] - exact).abs() < 1e-6 * exact.abs().max(1e-9), || {
                format!(
                    "Q series {params:?} x={x} k={k}: {} vs exact {exact}",
                    coeffs[k]
                )
            });
        }
    }
    // the public real-y evaluators agree with the complex continuation
    let params = FamilyParams::from_int(1, -4);
    for &y in &[-0.1, 0.0, 0.05, 0.12] {
        let real = params.generating_fn_r(0.3, y).unwrap();
        let cont = common::generating_r_complex(&params, 0.3, Complex64::new(y, 0.0)).re;
        c.check((real - cont).abs() < 1e-12 * real.abs().max(1.0), || {
            format!("real/complex mismatch of the R series at y={y}")
        });
        let realq = params.generating_fn_q(0.3, y);
        let contq = common::generating_q_complex(&params, 0.3, Complex64::new(y, 0.0)).re;
        c.check((realq - contq).abs() < 1e-12 * realq.abs().max(1.0), || {
            format!("real/complex mismatch of the Q series at y={y}")
        });
    }
    c.finish();
}

#[test]
fn c07_jacobi_bridge() {
    let mut c = Criterion::new(7, "complex Jacobi bridge, n <= 8");
    let families = [
        FamilyParams::from_f64(1.5, -3.3),
        FamilyParams::from_f64(-0.7, 2.2),
        FamilyParams::from_f64(2.0, -5.1),
    ];
    for params in &families {
        for n in 0..=8usize {
            match romanovski_via_jacobi(n, params) {
                Ok((poly, c_n)) => {
                    let rn = params.recurrence(n).to_double();
                    let scale = rn.max_abs_coeff();
                    for k in 0..=n {
                        c.check(
                            (poly.coeff(k) - c_n * rn.coeff(k)).abs() < 1e-10 * scale,
                            || format!("proportionality off at n={n} k={k} ({params:?})"),
                        );
                    }
                }
                Err(e) => c.check(false, || format!("bridge failed at n={n}: {e}")),
            }
        }
    }
    // conjugation parity P_n^(a,a*)(ix)* = (−1)^n P_n^(a,a*)(ix) to 1e−12
    for (n, a, x) in [
        (0usize, Complex64::new(1.0, 1.0), 0.7),
        (1, Complex64::new(1.0, 1.0), 0.7),
        (4, Complex64::new(-2.0, 0.5), 1.3),
        (7, Complex64::new(0.3, -1.7), -0.4),
    ] {
        let (_, ok) = conjugation_parity(n, a, x);
        c.check(ok, || format!("parity violated at n={n}, a={a}, x={x}"));
    }
    // the expansion solves the complex Jacobi ODE (coefficients < 1e−12)
    let a = Complex64::new(0.9, -1.1);
    let b = Complex64::new(-1.4, 0.6);
    for n in 0..=6usize {
        let p = complex_jacobi(n, a, b);
        let res = romanovski_core::jacobi::jacobi_ode_residual(&p, n, a, b);
        let worst = res.coeffs().iter().fold(0.0f64, |m, z| m.max(z.norm()));
        c.check(worst < 1e-12, || format!("ODE residual {worst} at n={n}"));
    }
    c.finish();
}

#[test]
fn c08_scarf_bound_states() {
    let mut c = Criterion::new(8, "hyperbolic Scarf energies and orthonormality");
    let p = ScarfParams { a: 2.0, b: 0.5 };
    for (n, expected) in [(0usize, -4.0), (1, -1.0)] {
        let st = scarf_state(n, &p).unwrap();
        c.check(st.energy == expected, || {
            format!("closed-form energy at n={n} is {}", st.energy)
        });
        let r = rayleigh_energy(&st, &st.default_grid()).unwrap();
        c.check((r.mean - expected).abs() < 1e-5, || {
            format!("Rayleigh energy {} vs {expected} at n={n}", r.mean)
        });
    }
    let p3 = ScarfParams { a: 3.0, b: 1.0 };
    for m in 0..3usize {
        for n in m..3usize {
            let o = scarf_overlap(m, n, &p3).unwrap();
            let expected = if m == n { 1.0 } else { 0.0 };
            c.check((o.value - expected).abs() < 1e-8, || {
                format!("overlap ({m},{n}) = {}", o.value)
            });
        }
    }
    c.finish();
}

#[test]
fn c09_associated_legendre_reconstruction() {
    let mut c = Criterion::new(9, "associated Legendre via the half-shift family");
    for l in 0..=4u32 {
        for m in 0..=l {
            let mut reference_ratio: Option<f64> = None;
            let mut theta = 0.25f64;
            while theta < 2.9 {
                let v = assoc_legendre_via_romanovski(l, m, theta).unwrap();
                let oracle = assoc_legendre_oracle(l, m, math::cos(theta));
                if oracle.abs() > 1e-3 {
                    let ratio = v / oracle;
                    if let Some(r0) = reference_ratio {
                        c.check((ratio - r0).abs() < 1e-9 * r0.abs(), || {
                            format!("ratio drift at l={l} m={m} theta={theta}: {ratio} vs {r0}")
                        });
                    } else {
                        reference_ratio = Some(ratio);
                    }
                }
                theta += 0.05;
            }
            c.check(reference_ratio.is_some(), || {
                format!("no usable oracle points at l={l} m={m}")
            });
        }
    }
    for (l, lp, m) in [(2u32, 1u32, 1u32), (3, 1, 0), (4, 3, 2), (4, 1, 1)] {
        let o = legendre_cross_orthogonality(l, lp, m).unwrap();
        c.check(o.is_convergent() && o.value.abs() < 1e-8, || {
            format!("cross-l ({l},{lp},{m}) -> {}", o.value)
        });
    }
    c.finish();
}

#[test]
fn c10_rosen_morse_bound_states() {
    let mut c = Criterion::new(10, "trigonometric Rosen-Morse orthonormality and constancy");
    let p = RosenMorseParams { b: 50.0, l: 1 };
    for n in 0..=4usize {
        let st = rosen_morse_state(n, &p).unwrap();
        let r = rayleigh_energy(&st, &st.default_grid()).unwrap();
        let constancy = r.stddev / r.mean.abs();
        c.check(constancy < 1e-5, || {
            format!("Rayleigh constancy {constancy:.2e} at n={n} (mean {})", r.mean)
        });
    }
    for m in 0..=4usize {
        for n in m..=4usize {
            let o = rosen_morse_overlap(m, n, &p).unwrap();
            let expected = if m == n { 1.0 } else { 0.0 };
            c.check((o.value - expected).abs() < 1e-8, || {
                format!("overlap ({m},{n}) = {}", o.value)
            });
        }
    }
    c.finish();
}

#[test]
fn c11_cauchy_ensemble_gap_probability() {
    let mut c = Criterion::new(11, "Cauchy-ensemble gap anchors and MC agreement");
    // N = 1, a = 0: E(0,(−1,1)) = 1 − (2/π)atan 1 = 1/2
    let k1 = orthonormal_basis(&EnsembleSpec { n: 1, a: 0.0 }).unwrap();
    let g1 = gap_probability(
        &k1,
        &GapQuery {
            lo: -1.0,
            hi: 1.0,
            order: 24,
        },
    )
    .unwrap();
    c.check((g1.value - 0.5).abs() < 1e-8, || {
        format!("Nystrom anchor {}", g1.value)
    });
    let mc1 = mc_gap_estimate(&EnsembleSpec { n: 1, a: 0.0 }, -1.0, 1.0, 100_000, 11).unwrap();
    c.check((mc1.estimate - 0.5).abs() <= 3.0 * mc1.std_error, || {
        format!("MC anchor {} +/- {}", mc1.estimate, mc1.std_error)
    });
    // kernel traces equal N
    for (n, a) in [(1usize, 0.0), (2, 0.0), (3, 0.5)] {
        let k = orthonormal_basis(&EnsembleSpec { n, a }).unwrap();
        let trace = k.trace();
        c.check((trace - n as f64).abs() < 1e-8, || {
            format!("trace {trace} for N={n}, a={a}")
        });
    }
    // N = 2: determinant vs Monte Carlo within 3 standard errors
    let spec2 = EnsembleSpec { n: 2, a: 0.0 };
    let k2 = orthonormal_basis(&spec2).unwrap();
    let g2 = gap_probability(
        &k2,
        &GapQuery {
            lo: -0.5,
            hi: 0.5,
            order: 24,
        },
    )
    .unwrap();
    let mc2 = mc_gap_estimate(&spec2, -0.5, 0.5, 100_000, 12).unwrap();
    c.check(
        (mc2.estimate - g2.value).abs() <= 3.0 * mc2.std_error,
        || {
            format!(
                "N=2 disagreement: det {} vs MC {} +/- {}",
                g2.value, mc2.estimate, mc2.std_error
            )
        },
    );
    c.finish();
}

#[test]
fn c12_errata_certification() {
    let mut c = Criterion::new(12, "corrected identities pass where printed variants fail");
    let params = FamilyParams::from_int(1, -3);
    let (alpha, beta) = (params.alpha.clone(), params.beta.clone());
    let s: RationalPoly = DensePolynomial::new(vec![rat(1), rat(0), rat(1)]);

    // (a) three-term recurrence: the unshifted-sign variant
    //     Q_2 = [2(β+ν−1)x+α]Q_1 + ν(2β+ν−1)(1+x²)Q_0 at ν = 1
    //     does not reproduce Q_2, the corrected one does (exactly).
    let q0 = RationalPoly::one();
    let q1: RationalPoly = DensePolynomial::new(vec![alpha.clone(), rat(2) * (&beta - rat(1))]);
    let q2 = params.q_poly(2).poly;
    let printed_lin: RationalPoly = DensePolynomial::new(vec![alpha.clone(), rat(2) * &beta]);
    let printed_q2 = printed_lin
        .mul(&q1)
        .add(&s.mul(&q0).scale(&(rat(2) * &beta)));
    c.check(printed_q2 != q2, || {
        "unshifted-sign recurrence unexpectedly reproduces Q2".to_string()
    });
    let corrected_lin: RationalPoly =
        DensePolynomial::new(vec![alpha.clone(), rat(2) * (&beta - rat(2))]);
    let corrected_q2 = corrected_lin
        .mul(&q1)
        .add(&s.mul(&q0).scale(&(rat(2) * &beta - rat(2))));
    c.check(corrected_q2 == q2, || {
        "corrected recurrence fails to reproduce Q2".to_string()
    });

    // (b) derivative ladder factor: ν(2β+ν−1) (variant) vs ν(2β−ν−1)
    for nu in 1..=2usize {
        let derivative = params.q_poly(nu).poly.derivative();
        let lower = params.q_poly(nu - 1).poly;
        let printed_factor = rat(nu as i64) * (rat(2) * &beta + rat(nu as i64 - 1));
        let corrected_factor = rat(nu as i64) * (rat(2) * &beta - rat(nu as i64 + 1));
        c.check(derivative != lower.scale(&printed_factor), || {
            format!("plus-sign derivative factor unexpectedly works at v={nu}")
        });
        c.check(derivative == lower.scale(&corrected_factor), || {
            format!("corrected derivative factor fails at v={nu}")
        });
    }

    // (c) generating-function prefactor: the variant with the extra −y/√D
    //     factor tends to 0 as y → 0 instead of R_0 = 1.
    let x = 0.3;
    let variant = |y: f64| {
        let disc = 1.0 - 4.0 * y * (x + y);
        let sq = math::sqrt(disc);
        let a = 2.0 * (x + y) / (1.0 + sq);
        -y * math::exp(params.log_weight(a) - params.log_weight(x)) / sq
    };
    c.check(params.generating_fn_r(x, 0.0).unwrap() == 1.0, || {
        "corrected prefactor does not give exactly R0 = 1 at y = 0".to_string()
    });
    let v3 = variant(1e-3);
    let v4 = variant(1e-4);
    c.check(v3.abs() < 2e-3 && v4.abs() < 2e-4, || {
        format!("variant prefactor does not vanish linearly: {v3}, {v4}")
    });
    c.check((v4 / v3 - 0.1).abs() < 0.01, || {
        "variant prefactor not scaling like y near 0".to_string()
    });
    c.finish();
}
