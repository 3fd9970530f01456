use std::sync::Arc;

use num_rational::BigRational;
use proptest::prelude::*;
use schroder_core::potentials::{
    closed_form_u, dual_transform_u, eval_u, eval_u1, family_node_with, preimage, recipe, recipe_domain, Sign, USeries,
};
use schroder_core::{Error, Scalar};

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

/// `(Ψ/Ψ')²` with `Ψ = -½ ln(1 - 2x)` at `s = 2`.
fn u_two(x: f64) -> f64 {
    let y = 1.0 - 2.0 * x;
    (0.5 * y * y.ln()).powi(2)
}

/// `(Ψ/Ψ')²` with `Ψ = arcsin²√x` at `s = 4`.
fn u_four(x: f64) -> f64 {
    let a = x.sqrt().asin();
    x * (1.0 - x) * a * a
}

#[test]
fn closed_forms_match_schroder_quotients() {
    for k in 0..50 {
        let x = -0.4 + 0.018 * k as f64;
        assert!((closed_form_u(x, &Scalar::int(2)).unwrap() - u_two(x)).abs() < 1e-14);
    }
    for k in 0..=50 {
        let x = k as f64 / 50.0;
        assert!((closed_form_u(x, &Scalar::int(4)).unwrap() - u_four(x)).abs() < 1e-14);
    }
    assert!(matches!(
        closed_form_u(0.6, &Scalar::int(2)),
        Err(Error::DomainError(_))
    ));
    assert!(closed_form_u(0.1, &Scalar::int(3)).is_err());
}

#[test]
fn series_reproduces_s_two() {
    let series = USeries::new(&Scalar::int(2), 200).unwrap();
    for k in 0..100 {
        let x = 0.45 * k as f64 / 99.0;
        let got = series.eval(x).unwrap();
        assert!((got - u_two(x)).abs() < 1e-10, "x = {x}: {got} vs {}", u_two(x));
    }
}

#[test]
fn u0_reproduces_s_four() {
    let series = USeries::new(&Scalar::int(4), 200).unwrap();
    for k in 0..100 {
        let x = 0.99 * k as f64 / 99.0;
        let got = series.eval_u0(x).unwrap();
        assert!((got - u_four(x)).abs() < 1e-8, "x = {x}");
    }
}

#[test]
fn u1_on_the_upper_sheet_at_s_four() {
    // on U₁ the Schröder coordinate is π - arcsin√x
    let oracle = |x: f64| {
        let a = std::f64::consts::PI - x.sqrt().asin();
        x * (1.0 - x) * a * a
    };
    for x in [0.2, 0.5, 0.9] {
        let got = eval_u1(x, &Scalar::int(4), 200).unwrap();
        assert!((got - oracle(x)).abs() < 1e-8, "x = {x}: {got} vs {}", oracle(x));
    }
}

#[test]
fn u0_is_u_below_the_critical_point() {
    let s = Scalar::ratio(5, 2);
    let series = USeries::new(&s, 200).unwrap();
    for x in [0.05, 0.2, 0.35, 0.45] {
        let y = 2.5 * x * (1.0 - x);
        let direct = series.eval(x).unwrap();
        let via_u0 = series.eval_u0(y).unwrap() / (2.5 * (1.0 - 2.0 * x)).powi(2);
        assert!((direct - via_u0).abs() < 1e-12 * direct.abs().max(1e-3));
    }
}

#[test]
fn dual_route_agrees_with_direct_series() {
    let cases = [(Scalar::ratio(3, 2), 0.2, 0.28), (Scalar::ratio(1, 2), -0.4, -0.16)];
    for (s, lo, hi) in cases {
        for k in 0..10 {
            let x = lo + (hi - lo) * k as f64 / 9.0;
            let direct = eval_u(x, &s, 200).unwrap();
            let dual = dual_transform_u(x, &s, 200).unwrap();
            assert!((direct - dual).abs() < 1e-8, "s = {s}, x = {x}: {direct} vs {dual}");
        }
    }
    assert!(dual_transform_u(0.1, &Scalar::int(3), 40).is_err());
}

#[test]
fn guard_radius_is_enforced() {
    let series = USeries::new(&Scalar::ratio(3, 2), 60).unwrap();
    assert!((series.radius() - 1.0 / 3.0).abs() < 1e-15);
    assert!(matches!(series.eval(0.34), Err(Error::OutOfRadius { .. })));
}

#[test]
fn nodes_vanish_at_their_turning_points() {
    let series = Arc::new(USeries::new(&Scalar::ratio(10, 3), 200).unwrap());
    for (m, n) in [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (0, 3)] {
        let node = family_node_with(&series, m, n).unwrap();
        let (lo, hi) = (node.domain.lo_f64(), node.domain.hi_f64());
        let mid = node.u(0.5 * (lo + hi)).unwrap();
        assert!(mid > 0.0, "{} interior", node.label());
        for tp in [lo, hi] {
            assert!(node.u(tp).unwrap().abs() < 1e-9, "{} at {tp}", node.label());
        }
        assert!(matches!(node.u(hi + 1e-6), Err(Error::ComplexValued { .. })));
    }
}

#[test]
fn sequence_nodes_keep_fixed_turning_points_at_ten_thirds() {
    let s = q(10, 3);
    for n in 2..7 {
        let (lo, hi) = recipe_domain(&recipe(0, n), &s).unwrap();
        assert_eq!((lo, hi), (q(25, 54), q(5, 6)), "V_{n}");
    }
}

#[test]
fn first_sequence_turning_points_at_five_halves() {
    let s = q(5, 2);
    let expect = [
        (q(0, 1), q(5, 8)),
        (q(75, 128), q(5, 8)),
        (q(75, 128), q(19875, 32768)),
        (q(1281241875, 2147483648), q(19875, 32768)),
    ];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(&recipe_domain(&recipe(0, n), &s).unwrap(), e, "V_{n}");
    }
}

#[test]
fn stepping_through_a_node_is_the_functional_equation() {
    // U_{+R}(x) = s(s - 4x) U_R(x₊)
    let series = Arc::new(USeries::new(&Scalar::ratio(10, 3), 200).unwrap());
    let outer = family_node_with(&series, 0, 2).unwrap();
    let inner = family_node_with(&series, 0, 1).unwrap();
    let s = 10.0 / 3.0;
    for x in [0.5, 0.6, 0.7, 0.8] {
        let xp = preimage(x, s, Sign::Plus).unwrap();
        let expect = s * (s - 4.0 * x) * inner.u(xp).unwrap();
        assert!((outer.u(x).unwrap() - expect).abs() < 1e-13);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn potential_functional_equation(x in -0.1f64..0.18) {
        // U(f(x)) = f'(x)² U(x) wherever both sides are inside the radius
        let s = 5.0 / 2.0;
        let series = USeries::new(&Scalar::ratio(5, 2), 200).unwrap();
        let fx = s * x * (1.0 - x);
        prop_assume!(fx.abs() < 0.95 * series.radius());
        let lhs = series.eval(fx).unwrap();
        let rhs = (s * (1.0 - 2.0 * x)).powi(2) * series.eval(x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1e-12));
    }

    #[test]
    fn preimages_invert_the_map(x in 0.0f64..0.8, plus in any::<bool>()) {
        let s = 10.0 / 3.0;
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let y = preimage(x, s, sign).unwrap();
        prop_assert!((s * y * (1.0 - y) - x).abs() < 1e-14);
        prop_assert_eq!(Sign::of(y), sign);
    }
}
