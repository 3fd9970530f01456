use num_rational::BigRational;
use proptest::prelude::*;
use schroder_core::algebra::{deformed_factorial, rational_to_f64, Scalar};
use schroder_core::series::residual::{
    all_zero, phi_residual, psi_residual, reversion_residuals, s1_residual, u_residual,
};
use schroder_core::series::{
    p_polynomials, phi_coefficients, psi_coefficients, radius_estimate, radius_formula, s1_coefficients, u_a,
    u_coefficients, u_integer_form,
};

fn reference_values() -> [Scalar; 4] {
    [
        Scalar::ratio(5, 2),
        Scalar::int(3),
        Scalar::ratio(10, 3),
        Scalar::ratio(7, 2),
    ]
}

#[test]
fn seeds_are_exact() {
    for s in [Scalar::ratio(5, 2), Scalar::int(3), Scalar::ratio(10, 3)] {
        let u = u_coefficients(&s, 2).unwrap();
        let one = Scalar::int(1);
        let a1 = &Scalar::int(2) / &(&one - &s);
        let sm1 = &s - &one;
        let a2 = &(&Scalar::int(5) - &(&Scalar::int(3) * &s)) / &(&(&sm1 * &sm1) * &(&s + &one));
        assert_eq!(u_a(&u, 1), &a1);
        assert_eq!(u_a(&u, 2), &a2);
    }
    let u = u_coefficients(&Scalar::ratio(5, 2), 2).unwrap();
    assert_eq!(u_a(&u, 1), &Scalar::ratio(-4, 3));
    assert_eq!(u_a(&u, 2), &Scalar::ratio(-20, 63));
}

#[test]
fn residuals_vanish_at_order_forty() {
    for s in reference_values() {
        assert!(
            all_zero(&u_residual(&u_coefficients(&s, 40).unwrap()).unwrap()),
            "U at s = {s}"
        );
        let psi = psi_coefficients(&s, 40).unwrap();
        let phi = phi_coefficients(&s, 40).unwrap();
        assert!(all_zero(&psi_residual(&psi).unwrap()), "Ψ at s = {s}");
        assert!(all_zero(&phi_residual(&phi).unwrap()), "Φ at s = {s}");
    }
    assert!(all_zero(&s1_residual(&s1_coefficients(40)).unwrap()));
}

#[test]
fn reversion_vanishes_at_order_forty() {
    for s in reference_values() {
        let psi = psi_coefficients(&s, 40).unwrap();
        let phi = phi_coefficients(&s, 40).unwrap();
        let (a, b) = reversion_residuals(&psi, &phi).unwrap();
        assert!(all_zero(&a) && all_zero(&b), "reversion at s = {s}");
    }
}

#[test]
fn u_residual_at_fifty_for_three() {
    let u = u_coefficients(&Scalar::int(3), 50).unwrap();
    assert!(all_zero(&u_residual(&u).unwrap()));
}

#[test]
fn phi_reversion_at_seven_halves() {
    let s = Scalar::ratio(7, 2);
    let psi = psi_coefficients(&s, 30).unwrap();
    let phi = phi_coefficients(&s, 30).unwrap();
    let (a, _) = reversion_residuals(&psi, &phi).unwrap();
    assert!(all_zero(&a));
}

#[test]
fn numerator_polynomials_cancel_through_twenty() {
    let p = p_polynomials(20).unwrap();
    assert_eq!(p.len(), 21);
    let s = Scalar::ratio(5, 2);
    let u = u_coefficients(&s, 12).unwrap();
    let sm1 = &s - &Scalar::int(1);
    for n in 3..=12u32 {
        let via_p = &p[n as usize].eval(&s) / &(&(&sm1 * &sm1) * &deformed_factorial(n, &s));
        assert_eq!(u_a(&u, n as usize), &via_p);
    }
}

#[test]
fn float_mode_matches_exact_mode() {
    let exact = u_coefficients(&Scalar::ratio(5, 2), 200).unwrap();
    let float = u_coefficients(&Scalar::float(2.5), 200).unwrap();
    for n in 1..=200 {
        let e = u_a(&exact, n).to_f64();
        let f = u_a(&float, n).to_f64();
        assert!(((e - f) / e).abs() <= 1e-10, "n = {n}: {e} vs {f}");
    }
}

#[test]
fn radius_within_five_percent() {
    for (p, q) in [(1, 2), (3, 2), (5, 2), (7, 2)] {
        let s = Scalar::ratio(p, q);
        let r = radius_estimate(&s, 400).unwrap();
        let expected = radius_formula(s.to_f64()).unwrap();
        let rel = (r.estimate / expected - 1.0).abs();
        assert!(rel < 0.05, "s = {p}/{q}: {} vs {expected}", r.estimate);
    }
}

#[test]
fn ratio_test_agrees_for_three() {
    let form = u_integer_form(&BigRational::from_integer(3.into()), 400).unwrap();
    let ln = form.ln_abs();
    let ratio = (ln[399].unwrap() - ln[400].unwrap()).exp();
    let r = radius_estimate(&Scalar::int(3), 400).unwrap();
    assert!((ratio / r.estimate - 1.0).abs() < 0.02, "{ratio} vs {}", r.estimate);
}

#[test]
fn exact_coefficients_round_like_floats() {
    let form = u_integer_form(&BigRational::new(10.into(), 3.into()), 120).unwrap();
    for (r, f) in form.rationals().iter().zip(form.floats()) {
        assert_eq!(rational_to_f64(r), f);
    }
}

proptest! {
    #[test]
    fn reduced_rationals_invert(p in 1i64..10_000, q in 1i64..10_000, sign in any::<bool>()) {
        let a = Scalar::ratio(if sign { p } else { -p }, q);
        let b = Scalar::ratio(q, if sign { p } else { -p });
        prop_assert_eq!(&a * &b, Scalar::int(1));
    }

    #[test]
    fn exact_arithmetic_commutes(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000, e in -50i64..50, f in 1i64..50) {
        let x = Scalar::ratio(a, b);
        let y = Scalar::ratio(c, d);
        let z = Scalar::ratio(e, f);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn deformed_integer_identity(k in 1u32..30, p in -40i64..40, q in 1i64..40) {
        prop_assume!(p != q);
        let s = Scalar::ratio(p, q);
        let one = Scalar::int(1);
        let lhs = &schroder_core::algebra::deformed_integer(k, &s) * &(&s - &one);
        prop_assert_eq!(lhs, &s.powi(k as i32) - &one);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn poly_eval_float_matches_exact(p in -400i64..400, q in 1i64..100) {
        let polys = poly_fixture();
        let s = Scalar::ratio(p, q);
        for poly in polys.iter() {
            let exact = poly.eval(&s).to_f64();
            let float = poly.eval(&s.to_float()).to_f64();
            let scale = exact.abs().max(1e-300);
            prop_assert!(((exact - float) / scale).abs() < 1e-12 || (exact - float).abs() < 1e-12);
        }
    }
}

fn poly_fixture() -> &'static [schroder_core::algebra::SPolynomial] {
    use std::sync::OnceLock;
    static P: OnceLock<Vec<schroder_core::algebra::SPolynomial>> = OnceLock::new();
    P.get_or_init(|| p_polynomials(4).unwrap())
}
