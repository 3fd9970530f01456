//! The acceptance suite: twelve groups of checks against reference values
//! and independent oracles.

use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schroder_core::algebra::{deformed_factorial, rational_to_f64, SPolynomial};
use schroder_core::asymptotics::{asymptotic_coefficient, growth_analysis, pv_integral};
use schroder_core::dynamics::{build_chemin_with, chemin_transits, fixed_points, map_iterate, transit_time, two_cycle};
use schroder_core::potentials::{closed_form_u, dual_parameter, dual_transform_with, family_node_with, USeries};
use schroder_core::report::{CheckValue, VerificationReport};
use schroder_core::schroder::{
    branch_continuity, conjugate_psi, psi_branches, psi_star_direct, Conjugate, Flow, SCHRODER_ORDER,
};
use schroder_core::series::residual::{all_zero, max_abs, phi_residual, psi_residual, s1_residual, u_residual};
use schroder_core::series::{
    expected_degree, p_polynomials, phi_coefficients, psi_coefficients, radius_estimate, s1_coefficients, u_a,
    u_coefficients, DEFAULT_ORDER,
};
use schroder_core::{Error, Scalar};

use crate::parse::format_rational;

/// One acceptance criterion.
pub struct Criterion {
    pub id: usize,
    /// Short name accepted by `verify --only`.
    pub key: &'static str,
    pub title: &'static str,
    pub run: fn() -> VerificationReport,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            key: "seeds",
            title: "seed coefficients a_1, a_2",
            run: seeds,
        },
        Criterion {
            id: 2,
            key: "residuals",
            title: "exact residual oracles at N = 40",
            run: residuals,
        },
        Criterion {
            id: 3,
            key: "numerators",
            title: "numerator polynomials",
            run: numerators,
        },
        Criterion {
            id: 4,
            key: "radius",
            title: "radius of convergence",
            run: radius,
        },
        Criterion {
            id: 5,
            key: "closed-forms",
            title: "closed forms at s = 2 and s = 4",
            run: closed_forms,
        },
        Criterion {
            id: 6,
            key: "transit-5/2",
            title: "transit times at s = 5/2",
            run: transit_five_halves,
        },
        Criterion {
            id: 7,
            key: "transit-10/3",
            title: "transit decomposition at s = 10/3",
            run: transit_ten_thirds,
        },
        Criterion {
            id: 8,
            key: "orbits",
            title: "orbit exactness",
            run: orbits,
        },
        Criterion {
            id: 9,
            key: "duality",
            title: "duality and conjugation",
            run: duality,
        },
        Criterion {
            id: 10,
            key: "trajectory",
            title: "continuous trajectory",
            run: trajectory,
        },
        Criterion {
            id: 11,
            key: "asymptotics",
            title: "s = 1 series and principal-value integral",
            run: asymptotics,
        },
        Criterion {
            id: 12,
            key: "branches",
            title: "eight Ψ branches at s = 10/3",
            run: branches,
        },
    ]
}

/// Criteria whose key or number matches one of `only`, or all of them.
pub fn select(only: &[String]) -> Vec<Criterion> {
    criteria()
        .into_iter()
        .filter(|c| only.is_empty() || only.iter().any(|o| o == c.key || o.parse() == Ok(c.id)))
        .collect()
}

/// Runs the selected criteria and merges their checks, each prefixed with its key.
pub fn run(only: &[String]) -> VerificationReport {
    let mut all = VerificationReport::new();
    for c in select(only) {
        let mut part = (c.run)();
        for check in &mut part.checks {
            check.check = format!("{}: {}", c.key, check.check);
        }
        all.extend(part);
    }
    all
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn reference_parameters() -> [BigRational; 3] {
    [q(5, 2), q(3, 1), q(10, 3)]
}

fn record_error(report: &mut VerificationReport, name: &str, e: &Error) {
    report.failure(name, CheckValue::Text("a value".into()), e);
}

fn seeds() -> VerificationReport {
    let mut r = VerificationReport::new();
    let one = BigRational::from_integer(1.into());
    for s in reference_parameters() {
        let a1 = BigRational::from_integer(2.into()) / (&one - &s);
        let sm1 = &s - &one;
        let a2 = (BigRational::from_integer(5.into()) - BigRational::from_integer(3.into()) * &s)
            / (&sm1 * &sm1 * (&s + &one));
        let tag = format_rational(&s);
        match u_coefficients(&Scalar::exact(s.clone()), 2) {
            Ok(series) => {
                for (k, want) in [(1, a1), (2, a2)] {
                    let got = u_a(&series, k).as_exact().map(format_rational).unwrap_or_default();
                    r.exact(format!("a_{k}({tag})"), format_rational(&want), got);
                }
            }
            Err(e) => record_error(&mut r, &format!("a_1, a_2 at {tag}"), &e),
        }
    }
    r
}

fn residuals() -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = 40;
    let mut zero = |name: String, res: Result<Vec<BigRational>, Error>| match res {
        Ok(v) => {
            r.flag(name, all_zero(&v), format!("max |residual| = {:e}", max_abs(&v)));
        }
        Err(e) => record_error(&mut r, &name, &e),
    };
    for s in reference_parameters() {
        let tag = format_rational(&s);
        let s = Scalar::exact(s);
        zero(
            format!("U residual at s = {tag}"),
            u_coefficients(&s, n).and_then(|c| u_residual(&c)),
        );
        zero(
            format!("Ψ residual at s = {tag}"),
            psi_coefficients(&s, n).and_then(|c| psi_residual(&c)),
        );
        zero(
            format!("Φ residual at s = {tag}"),
            phi_coefficients(&s, n).and_then(|c| phi_residual(&c)),
        );
    }
    zero("s = 1 residual".into(), s1_residual(&s1_coefficients(n)));
    r
}

fn numerators() -> VerificationReport {
    let mut r = VerificationReport::new();
    let p = match p_polynomials(20) {
        Ok(p) => {
            r.flag("(1 - s) divides every numerator for n <= 20", true, "zero remainders");
            p
        }
        Err(e) => {
            record_error(&mut r, "(1 - s) divides every numerator for n <= 20", &e);
            return r;
        }
    };
    let show = |poly: &SPolynomial| {
        poly.coefficients()
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(", ")
    };
    r.exact("p_1 = 2(1 - s)", show(&SPolynomial::from_ints(&[2, -2])), show(&p[1]));
    r.exact("p_2 = 5 - 3s", show(&SPolynomial::from_ints(&[5, -3])), show(&p[2]));
    for (n, poly) in p.iter().enumerate().take(13).skip(2) {
        let deg = poly.degree().map_or("zero".into(), |d| d.to_string());
        r.exact(format!("deg p_{n}"), expected_degree(n).to_string(), deg);
    }
    let s = Scalar::ratio(5, 2);
    let sm1 = &s - &Scalar::int(1);
    match u_coefficients(&s, 12) {
        Ok(series) => {
            for (n, poly) in p.iter().enumerate().take(13).skip(1) {
                let lhs = u_a(&series, n) * &(&(&sm1 * &sm1) * &deformed_factorial(n as u32, &s));
                let rhs = poly.eval(&s);
                r.exact(
                    format!("a_{n} (s-1)^2 [{n}]! = p_{n} at s = 5/2"),
                    rhs.to_string(),
                    lhs.to_string(),
                );
            }
        }
        Err(e) => record_error(&mut r, "a_n at s = 5/2", &e),
    }
    r
}

fn radius() -> VerificationReport {
    let mut r = VerificationReport::new();
    for (p, d, expect) in [(1, 2, 0.5), (3, 2, 1.0 / 3.0), (5, 2, 0.625), (7, 2, 0.875)] {
        let s = Scalar::ratio(p, d);
        let name = format!("radius at s = {p}/{d}");
        match radius_estimate(&s, 400) {
            Ok(est) => {
                r.number(name, expect, est.estimate, 0.05 * expect);
            }
            Err(e) => record_error(&mut r, &name, &e),
        }
    }
    r
}

/// Largest deviation of `f` from `g` on a grid; errors count as infinite.
fn max_gap(grid: impl Iterator<Item = f64>, f: impl Fn(f64) -> Result<f64, Error>, g: impl Fn(f64) -> f64) -> f64 {
    grid.map(|x| f(x).map_or(f64::INFINITY, |v| (v - g(x)).abs()))
        .fold(0.0, f64::max)
}

fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
}

fn closed_forms() -> VerificationReport {
    let mut r = VerificationReport::new();
    match USeries::new(&Scalar::int(2), DEFAULT_ORDER) {
        Ok(u) => {
            let gap = max_gap(
                grid(0.0, 0.45, 100),
                |x| u.eval(x),
                |x| closed_form_u(x, &Scalar::int(2)).unwrap(),
            );
            r.number("max |U - U_2| on [0, 0.45]", 0.0, gap, 1e-10);
        }
        Err(e) => record_error(&mut r, "U at s = 2", &e),
    }
    match USeries::new(&Scalar::int(4), DEFAULT_ORDER) {
        Ok(u) => {
            let gap = max_gap(
                grid(0.0, 0.99, 100),
                |x| u.eval_u0(x),
                |x| closed_form_u(x, &Scalar::int(4)).unwrap(),
            );
            r.number("max |U_0 - U_4| on [0, 0.99]", 0.0, gap, 1e-8);
        }
        Err(e) => record_error(&mut r, "U_0 at s = 4", &e),
    }
    r
}

fn transit_five_halves() -> VerificationReport {
    let mut r = VerificationReport::new();
    let series = match USeries::new(&Scalar::ratio(5, 2), DEFAULT_ORDER) {
        Ok(s) => Arc::new(s),
        Err(e) => {
            record_error(&mut r, "U-series at s = 5/2", &e);
            return r;
        }
    };
    let legs = [
        (0, q(1, 2), q(5, 8)),
        (1, q(75, 128), q(5, 8)),
        (2, q(75, 128), q(19875, 32768)),
        (3, q(1281241875, 2147483648), q(19875, 32768)),
    ];
    for (n, a, b) in legs {
        let name = format!("V_{n} from {} to {}", format_rational(&a), format_rational(&b));
        let t = family_node_with(&series, 0, n)
            .and_then(|node| transit_time(&node, rational_to_f64(&a), rational_to_f64(&b)));
        match t {
            Ok(t) => {
                r.number(name, 1.0, t, 1e-5);
            }
            Err(e) => record_error(&mut r, &name, &e),
        }
    }
    r
}

fn transit_ten_thirds() -> VerificationReport {
    let mut r = VerificationReport::new();
    let run = || -> Result<VerificationReport, Error> {
        let series = Arc::new(USeries::new(&Scalar::ratio(10, 3), DEFAULT_ORDER)?);
        let schedule = build_chemin_with(&series, 3)?;
        let mut out = VerificationReport::new();
        let expect = [
            ("V_2", 0.825728),
            ("W_1", 0.174272),
            ("W_2", 0.164433),
            ("V_3", 0.661295),
        ];
        for g in chemin_transits(&schedule)? {
            for (desc, t) in &g.legs {
                if let Some((_, e)) = expect.iter().find(|(l, _)| desc.split(' ').next() == Some(*l)) {
                    out.number(format!("leg {desc}"), *e, *t, 1e-3);
                }
            }
            out.number(format!("group {} sum", g.level), 1.0, g.total, 2e-4);
        }
        Ok(out)
    };
    match run() {
        Ok(rep) => r.extend(rep),
        Err(e) => record_error(&mut r, "s = 10/3 schedule", &e),
    }
    r
}

fn orbits() -> VerificationReport {
    let mut r = VerificationReport::new();
    match map_iterate(&Scalar::ratio(1, 2), &Scalar::ratio(5, 2), 3) {
        Ok(o) => {
            let got: Vec<String> = o.points[1..].iter().map(|p| p.to_string()).collect();
            r.exact(
                "f^k(1/2) at s = 5/2, k = 1..3",
                "5/8, 75/128, 19875/32768",
                got.join(", "),
            );
        }
        Err(e) => record_error(&mut r, "map iterates", &e),
    }
    let root = 13f64.sqrt();
    match two_cycle(&Scalar::ratio(10, 3)) {
        Some((a, b)) => {
            r.number("two-cycle low point at s = 10/3", (13.0 - root) / 20.0, a, 1e-12);
            r.number("two-cycle high point at s = 10/3", (13.0 + root) / 20.0, b, 1e-12);
        }
        None => {
            r.flag("two-cycle at s = 10/3", false, "none found");
        }
    }
    for (s, want) in [(Scalar::ratio(5, 2), "3/5"), (Scalar::ratio(10, 3), "7/10")] {
        let got = fixed_points(&s)
            .map(|p| p.1.to_string())
            .unwrap_or_else(|e| e.to_string());
        r.exact(format!("fixed point at s = {s}"), want, got);
    }
    r
}

fn duality() -> VerificationReport {
    let mut r = VerificationReport::new();
    for (s, lo, hi) in [(Scalar::ratio(1, 2), -0.4, -0.16), (Scalar::ratio(3, 2), 0.2, 0.28)] {
        let name = format!("dual route vs direct U at s = {s}, 10 points");
        let both = USeries::new(&s, DEFAULT_ORDER)
            .and_then(|direct| Ok((direct, USeries::new(&dual_parameter(&s), DEFAULT_ORDER)?)));
        match both {
            Ok((direct, dual)) => {
                let sf = s.to_f64();
                let gap = max_gap(
                    grid(lo, hi, 10),
                    |x| dual_transform_with(x, sf, &dual),
                    |x| direct.eval(x).unwrap_or(f64::NAN),
                );
                r.number(name, 0.0, gap, 1e-8);
            }
            Err(e) => record_error(&mut r, &name, &e),
        }
    }
    let s = Scalar::ratio(3, 2);
    let gap = max_gap(
        grid(-0.3, 0.08, 20),
        |x| conjugate_psi(Conjugate::Star, x, &s, SCHRODER_ORDER),
        |x| psi_star_direct(x, &s, SCHRODER_ORDER).unwrap_or(f64::NAN),
    );
    r.number("Ψ* via Ψ₀ at the dual parameter, s = 3/2, 20 points", 0.0, gap, 1e-10);
    r
}

fn trajectory() -> VerificationReport {
    let mut r = VerificationReport::new();
    let flow = match Flow::new(&Scalar::ratio(5, 2), SCHRODER_ORDER) {
        Ok(f) => f,
        Err(e) => {
            record_error(&mut r, "flow at s = 5/2", &e);
            return r;
        }
    };
    let iterates = [q(1, 2), q(5, 8), q(75, 128), q(19875, 32768)];
    for (t, x) in iterates.iter().enumerate() {
        let name = format!("x({t}) from 1/2 at s = 5/2");
        match flow.position(0.5, t as f64) {
            Ok(v) => {
                r.number(name, rational_to_f64(x), v, 1e-9);
            }
            Err(e) => record_error(&mut r, &name, &e),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let (t1, t2): (f64, f64) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.5));
        let gap = flow
            .position(0.3, t1)
            .and_then(|y| flow.position(y, t2))
            .and_then(|split| Ok((split - flow.position(0.3, t1 + t2)?).abs()))
            .unwrap_or(f64::INFINITY);
        worst = worst.max(gap);
    }
    r.number(
        "semigroup f_{t1+t2} = f_{t2} ∘ f_{t1}, 10 random pairs",
        0.0,
        worst,
        1e-9,
    );
    match Flow::new(&Scalar::int(4), SCHRODER_ORDER) {
        Ok(four) => {
            let x0: f64 = 0.3;
            let gap = max_gap(
                grid(0.0, 3.0, 31),
                |t| four.position(x0, t),
                |t| (2f64.powf(t) * x0.sqrt().asin()).sin().powi(2),
            );
            r.number("s = 4 trajectory vs sin²(2^t arcsin √x0)", 0.0, gap, 1e-8);
        }
        Err(e) => record_error(&mut r, "flow at s = 4", &e),
    }
    r
}

fn asymptotics() -> VerificationReport {
    let mut r = VerificationReport::new();
    let c = s1_coefficients(8);
    let expected = ["2", "4", "25/3", "215/12", "589/15", "7813/90", "60481/315", "11821/28"];
    for (n, want) in expected.iter().enumerate() {
        r.exact(format!("c_{}", n + 1), *want, c.coeff(n + 1).to_string());
    }
    match growth_analysis(300) {
        Ok(g) => {
            let min = (100..=300).map(|n| g.root(n)).fold(f64::INFINITY, f64::min);
            r.flag("|c_n|^(1/n) > 2 on [100, 300]", min > 2.0, format!("min = {min:.6}"));
            r.number("slope ratio against f_n on [150, 300]", 1.0, g.slope_ratio(), 0.1);
        }
        Err(e) => record_error(&mut r, "growth analysis", &e),
    }
    match pv_integral(0.0) {
        Ok(v) => {
            r.number("I(0)", 1.0, v, 1e-10);
        }
        Err(e) => record_error(&mut r, "I(0)", &e),
    }
    let x = 0.01;
    let asym = 1.0 + asymptotic_coefficient(1) * x + asymptotic_coefficient(2) * x * x;
    match pv_integral(x) {
        Ok(v) => {
            r.number("I(0.01) vs 1 + f_1 x + f_2 x²", asym, v, 1e-6);
        }
        Err(e) => record_error(&mut r, "I(0.01)", &e),
    }
    r
}

fn branches() -> VerificationReport {
    let mut r = VerificationReport::new();
    let list = match psi_branches(&Scalar::ratio(10, 3), 8, SCHRODER_ORDER) {
        Ok(l) => l,
        Err(e) => {
            record_error(&mut r, "Ψ branches at s = 10/3", &e);
            return r;
        }
    };
    r.exact(
        "branch order",
        "V_0, V_1, V_2, W_1, W_2, V_3, X_1, X_2",
        list.iter().map(|b| b.label.as_str()).collect::<Vec<_>>().join(", "),
    );
    for b in &list {
        let (lo, hi) = b.domain;
        // interior sample points: each turning point is a square-root branch point
        let gap = (0..20)
            .map(|k| lo + (hi - lo) * (k as f64 + 0.5) / 20.0)
            .map(|x| b.sfe_residual(x).map_or(f64::INFINITY, f64::abs))
            .fold(0.0, f64::max);
        r.number(
            format!("branch {} ({}) Schröder residual", b.index, b.label),
            0.0,
            gap,
            1e-9,
        );
    }
    match branch_continuity(&list) {
        Ok(gaps) => {
            for (i, at, gap) in gaps {
                r.number(
                    format!("continuity of branches {i}/{} at x = {at:.12}", i + 1),
                    0.0,
                    gap,
                    1e-7,
                );
            }
        }
        Err(e) => record_error(&mut r, "branch continuity", &e),
    }
    r
}
