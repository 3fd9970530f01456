use std::f64::consts::PI;

use proptest::prelude::*;
use schroder_core::potentials::USeries;
use schroder_core::schroder::{
    branch_continuity, conjugate_phi_star, conjugate_psi, eval_phi, phi_star_direct, psi_branches, psi_star,
    psi_star_direct, time_grid, trajectory, velocity, Conjugate, Flow, QuadraticMap, SCHRODER_ORDER,
};
use schroder_core::Scalar;

fn five_halves() -> Scalar {
    Scalar::ratio(5, 2)
}

#[test]
fn closed_form_schroder_pairs() {
    let two = QuadraticMap::logistic(&Scalar::int(2), SCHRODER_ORDER).unwrap();
    let four = QuadraticMap::logistic(&Scalar::int(4), SCHRODER_ORDER).unwrap();
    for x in [0.05, 0.2, 0.4, 0.49] {
        assert!((two.psi(x).unwrap() + 0.5 * (1.0 - 2.0 * x).ln()).abs() < 1e-10);
        assert!((four.psi(x).unwrap() - x.sqrt().asin().powi(2)).abs() < 1e-10);
    }
    for w in [0.5, 1.5] {
        assert!((eval_phi(w, &Scalar::int(4), SCHRODER_ORDER, None).unwrap() - w.sqrt().sin().powi(2)).abs() < 1e-9);
    }
    assert_eq!(eval_phi(0.0, &five_halves(), SCHRODER_ORDER, None).unwrap(), 0.0);
}

#[test]
fn branch_zero_starts_like_the_seed() {
    let s = 10.0 / 3.0;
    let branches = psi_branches(&Scalar::ratio(10, 3), 1, SCHRODER_ORDER).unwrap();
    for x in [1e-4, 1e-3] {
        let seed = x + x * x / (s - 1.0);
        assert!((branches[0].eval(x).unwrap() - seed).abs() < 10.0 * x * x * x);
    }
}

#[test]
fn eight_branches_at_ten_thirds() {
    let branches = psi_branches(&Scalar::ratio(10, 3), 8, SCHRODER_ORDER).unwrap();
    let labels: Vec<&str> = branches.iter().map(|b| b.label.as_str()).collect();
    assert_eq!(labels, ["V_0", "V_1", "V_2", "W_1", "W_2", "V_3", "X_1", "X_2"]);
    for b in &branches {
        let (lo, hi) = b.domain;
        for k in 0..20 {
            let x = lo + (hi - lo) * (k as f64 + 0.5) / 20.0;
            let r = b.sfe_residual(x).unwrap();
            assert!(r.abs() < 1e-9, "{} at {x}: {r:e}", b.label);
            let inv = b.inversion_residual(x).unwrap();
            assert!(inv.abs() < 1e-8, "{} inversion at {x}: {inv:e}", b.label);
            let tab = b.interpolate(x).unwrap();
            assert!((tab - b.eval(x).unwrap()).abs() < 1e-3);
        }
    }
    for (i, at, gap) in branch_continuity(&branches).unwrap() {
        assert!(gap < 1e-7, "branches {i}/{} at {at}: {gap:e}", i + 1);
    }
    assert!(psi_branches(&Scalar::int(2), 2, 16).is_err());
}

#[test]
fn sfe_on_branch_zero() {
    let s = 10.0 / 3.0;
    let map = QuadraticMap::logistic(&Scalar::ratio(10, 3), SCHRODER_ORDER).unwrap();
    for k in 1..=20 {
        let x = 0.25 * s * 0.9 * k as f64 / 21.0;
        let fx = s * x * (1.0 - x);
        if fx > s / 4.0 || x > 0.5 {
            continue;
        }
        assert!((s * map.psi(x).unwrap() - map.psi(fx).unwrap()).abs() < 1e-9);
    }
}

#[test]
fn conjugates_at_three_halves() {
    let s = Scalar::ratio(3, 2);
    for k in 0..20 {
        let x = -0.3 + 0.02 * k as f64;
        let via_dual = conjugate_psi(Conjugate::Star, x, &s, SCHRODER_ORDER).unwrap();
        let direct = psi_star_direct(x, &s, SCHRODER_ORDER).unwrap();
        assert!((via_dual - direct).abs() < 1e-10, "x = {x}");
    }
    for w in [-0.3, -0.1, 0.02, 0.05] {
        let a = conjugate_phi_star(w, &s, SCHRODER_ORDER).unwrap();
        let b = phi_star_direct(w, &s, SCHRODER_ORDER).unwrap();
        assert!((a - b).abs() < 1e-10);
    }
    // Φ* leaves the real line once its value passes the critical point
    assert!(conjugate_phi_star(0.1, &s, SCHRODER_ORDER).is_err());
}

#[test]
fn psi_star_at_four_from_the_negative_two_closed_form() {
    // Ψ₀(x, -2) = -(√3/2)(arccos(x - ½) - 2π/3)
    let psi_m2 = |x: f64| -(3f64.sqrt() / 2.0) * ((x - 0.5).acos() - 2.0 * PI / 3.0);
    for x in [0.05, 0.15, 0.2, 0.24] {
        let expect = -0.5 * psi_m2(-2.0 * x);
        assert!((psi_star(x, &Scalar::int(4)).unwrap() - expect).abs() < 1e-9, "x = {x}");
    }
    assert!((psi_star(0.2, &Scalar::int(4)).unwrap() - 0.2581495026568).abs() < 1e-9);
}

#[test]
fn g_conjugate_values() {
    let v = conjugate_psi(Conjugate::G, 1.5, &Scalar::int(4), SCHRODER_ORDER).unwrap();
    assert!((v - 1.5).abs() < 1e-12);
    // Ψ_g(x, 4) = 3/2 - 2 arcsin²√(½(3/2 - x))
    for x in [0.6f64, 1.0, 1.3] {
        let expect = 1.5 - 2.0 * (0.5 * (1.5 - x)).sqrt().asin().powi(2);
        let got = conjugate_psi(Conjugate::G, x, &Scalar::int(4), SCHRODER_ORDER).unwrap();
        assert!((got - expect).abs() < 1e-9, "x = {x}");
    }
}

#[test]
fn trajectory_hits_the_iterates() {
    let flow = Flow::new(&five_halves(), SCHRODER_ORDER).unwrap();
    let expect = [0.5, 0.625, 0.5859375, 19875.0 / 32768.0];
    for (t, e) in expect.iter().enumerate() {
        assert!((flow.position(0.5, t as f64).unwrap() - e).abs() < 1e-9, "t = {t}");
    }
    let tr = trajectory(0.3, &five_halves(), &time_grid(0.0, 2.0, 0.25).unwrap(), SCHRODER_ORDER).unwrap();
    assert_eq!(tr.samples.len(), 9);
    assert!((tr.samples[0].x - 0.3).abs() < 1e-12);
    assert!((tr.samples[4].x - 2.5 * 0.3 * 0.7).abs() < 1e-9);
}

#[test]
fn s_four_trajectory_closed_form() {
    let flow = Flow::new(&Scalar::int(4), SCHRODER_ORDER).unwrap();
    let x0: f64 = 0.3;
    for k in 0..=12 {
        let t = 0.25 * k as f64;
        let expect = (2f64.powf(t) * x0.sqrt().asin()).sin().powi(2);
        assert!((flow.position(x0, t).unwrap() - expect).abs() < 1e-8, "t = {t}");
    }
}

#[test]
fn velocity_squared_is_the_potential() {
    let s = five_halves();
    let ln_s = 2.5f64.ln();
    let series = USeries::new(&s, 200).unwrap();
    let v = velocity(0.3, &s, 0.0, SCHRODER_ORDER).unwrap();
    let u0 = series.eval_u0(0.3).unwrap();
    assert!((v * v - ln_s * ln_s * u0).abs() < 1e-8);
    // the top of the first arc is the turning point 5/8, reached at t = 1 from x0 = ½
    assert!(velocity(0.5, &s, 1.0, SCHRODER_ORDER).unwrap().abs() < 1e-6);
}

#[test]
fn velocity_matches_finite_differences() {
    let flow = Flow::new(&five_halves(), SCHRODER_ORDER).unwrap();
    let h = 1e-5;
    let fd = (flow.position(0.3, 0.5 + h).unwrap() - flow.position(0.3, 0.5 - h).unwrap()) / (2.0 * h);
    assert!((fd - flow.at(0.3, 0.5).unwrap().1).abs() < 1e-6);
}

#[test]
fn flow_preconditions() {
    assert!(Flow::new(&Scalar::ratio(1, 2), 16).is_err());
    assert!(Flow::new(&Scalar::int(5), 16).is_err());
    let flow = Flow::new(&five_halves(), SCHRODER_ORDER).unwrap();
    assert!(flow.position(0.7, 0.5).is_err());
    assert!(time_grid(0.0, 1.0, 0.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn semigroup(t1 in 0.0f64..1.0, t2 in 0.0f64..1.5) {
        // from x0 = 0.3 the particle stays on the principal branch until past t = 1
        let flow = Flow::new(&five_halves(), SCHRODER_ORDER).unwrap();
        let inner = flow.position(0.3, t1).unwrap();
        let split = flow.position(inner, t2).unwrap();
        let joined = flow.position(0.3, t1 + t2).unwrap();
        prop_assert!((split - joined).abs() < 1e-9);
    }

    #[test]
    fn poincare_equation(w in 0.0f64..0.6) {
        let map = QuadraticMap::logistic(&five_halves(), SCHRODER_ORDER).unwrap();
        let phi = map.phi(w).unwrap();
        prop_assert!((map.phi(2.5 * w).unwrap() - 2.5 * phi * (1.0 - phi)).abs() < 1e-10);
    }

    #[test]
    fn round_trip(x in 0.0f64..0.6) {
        let map = QuadraticMap::logistic(&five_halves(), SCHRODER_ORDER).unwrap();
        prop_assert!((map.phi(map.psi(x).unwrap()).unwrap() - x).abs() < 1e-8);
    }

    #[test]
    fn g_inhomogeneous_equation(x in -0.3f64..-0.01) {
        let s = Scalar::ratio(3, 2);
        let g = |y: f64| conjugate_psi(Conjugate::G, y, &s, SCHRODER_ORDER).unwrap();
        let lhs = 0.25 / 0.5 + 1.5 * g(x);
        let rhs = g(0.5 * x * (1.0 - x));
        prop_assert!((lhs - rhs).abs() < 1e-8);
    }
}
