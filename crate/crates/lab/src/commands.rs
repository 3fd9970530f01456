//! One function per command. Each returns data; writing it out is the
//! caller's business.

use num_rational::BigRational;
use schroder_core::algebra::rational_to_f64;
use schroder_core::dynamics::{build_chemin, chemin_transits, CheminSchedule};
use schroder_core::potentials::family_node;
use schroder_core::report::VerificationReport;
use schroder_core::schroder::{psi_branches, time_grid, Flow};
use schroder_core::series::{u_a, u_coefficients};
use schroder_core::{Error, Scalar};

use crate::error::{LabError, LabResult};
use crate::parse::format_rational;
use crate::table::{Cell, Table};

/// `n, a_n (exact), a_n (float)` for `1 ≤ n ≤ N`.
pub fn coeffs(s: &BigRational, n: usize) -> LabResult<Table> {
    if n == 0 {
        return Err(LabError::Usage("--n must be at least 1".into()));
    }
    let series = u_coefficients(&Scalar::exact(s.clone()), n)?;
    let mut t = Table::new(["n", "a_n", "a_n_float"]);
    for k in 1..=n {
        let a = u_a(&series, k);
        let exact = a.as_exact().map(format_rational).unwrap_or_else(|| a.to_string());
        t.push(vec![Cell::Int(k as i64), Cell::Text(exact), Cell::Float(a.to_f64())]);
    }
    Ok(t)
}

pub struct PotentialRequest {
    pub s: BigRational,
    pub family: usize,
    pub index: usize,
    pub xmin: Option<BigRational>,
    pub xmax: Option<BigRational>,
    pub samples: usize,
    pub order: usize,
}

/// `x, V` on an ascending grid; the range defaults to the node's turning points.
pub fn potential(req: &PotentialRequest) -> LabResult<Table> {
    if req.samples < 2 {
        return Err(LabError::Usage("--samples must be at least 2".into()));
    }
    let node = family_node(req.family, req.index, &Scalar::exact(req.s.clone()), req.order)?;
    let (lo, hi) = (node.domain.lo_f64(), node.domain.hi_f64());
    let a = req.xmin.as_ref().map_or(lo, rational_to_f64);
    let b = req.xmax.as_ref().map_or(hi, rational_to_f64);
    if a > b {
        return Err(LabError::Usage("--xmin must not exceed --xmax".into()));
    }
    let slack = 1e-12;
    if a < lo - slack {
        return Err(Error::ComplexValued { lo: a, hi: lo.min(b) }.into());
    }
    if b > hi + slack {
        return Err(Error::ComplexValued { lo: hi.max(a), hi: b }.into());
    }
    let mut t = Table::new(["x", "V"]);
    let last = req.samples - 1;
    for i in 0..req.samples {
        let x = if i == last {
            b
        } else {
            a + (b - a) * i as f64 / last as f64
        };
        t.push(vec![Cell::Float(x), Cell::Float(node.v(x)?)]);
    }
    Ok(t)
}

/// Reference leg values at `s = 10/3`, keyed by group and node label.
const TEN_THIRDS_LEGS: [(usize, &str, f64); 5] = [
    (2, "V_2", 0.825728),
    (2, "W_1", 0.174272),
    (3, "W_2", 0.164433),
    (3, "V_3", 0.661295),
    (3, "X_1", 0.174272),
];

const LEG_TOLERANCE: f64 = 1e-3;

/// Transit times over the first `depth` groups of the potential path,
/// with one check per group sum and one per reference leg value.
pub fn transit(s: &BigRational, depth: usize, order: usize) -> LabResult<VerificationReport> {
    let mut report = VerificationReport::new();
    if depth == 0 {
        return Ok(report);
    }
    let scalar = Scalar::exact(s.clone());
    let sf = scalar.to_f64();
    if !(sf > 2.0 && sf <= 4.0) {
        return Err(LabError::Usage("transit needs 2 < s <= 4".into()));
    }
    let schedule = build_chemin(&scalar, depth - 1, order)?;
    transit_report(&schedule, &mut report)?;
    Ok(report)
}

fn transit_report(schedule: &CheminSchedule, report: &mut VerificationReport) -> LabResult<()> {
    let tol = schedule.tolerance();
    let tabulated = schedule.s == Scalar::ratio(10, 3);
    for g in chemin_transits(schedule)? {
        let labels: Vec<&str> = g.legs.iter().map(|(d, _)| d.as_str()).collect();
        let tag = if g.extrapolated { " (extrapolated)" } else { "" };
        report.number(
            format!("group {} sum [{}]{tag}", g.level, labels.join("; ")),
            1.0,
            g.total,
            tol,
        );
        if !tabulated {
            continue;
        }
        for (desc, value) in &g.legs {
            let hit = TEN_THIRDS_LEGS
                .iter()
                .find(|(level, label, _)| *level == g.level && desc.split(' ').next() == Some(label));
            if let Some((_, _, expect)) = hit {
                report.number(format!("leg {desc}"), *expect, *value, LEG_TOLERANCE);
            }
        }
    }
    Ok(())
}

pub struct TrajectoryRequest {
    pub s: BigRational,
    pub x0: BigRational,
    pub t0: f64,
    pub t1: f64,
    pub dt: f64,
    pub order: usize,
}

/// `t, x, dx_dt` along `x(t) = Φ(s^t Ψ(x0))`.
pub fn trajectory(req: &TrajectoryRequest) -> LabResult<Table> {
    let flow = Flow::new(&Scalar::exact(req.s.clone()), req.order)?;
    let times = time_grid(req.t0, req.t1, req.dt)?;
    let x0 = rational_to_f64(&req.x0);
    let traj = flow.trajectory(x0, &times)?;
    let mut t = Table::new(["t", "x", "dx_dt"]);
    for p in traj.samples {
        t.push(vec![Cell::Float(p.t), Cell::Float(p.x), Cell::Float(p.velocity)]);
    }
    Ok(t)
}

/// `x, branch_0, …` on `[0, s/4]`; a cell is empty where the branch is not real.
pub fn branches(s: &BigRational, count: usize, samples: usize, order: usize) -> LabResult<Table> {
    if count == 0 || samples < 2 {
        return Err(LabError::Usage(
            "--count must be positive and --samples at least 2".into(),
        ));
    }
    let scalar = Scalar::exact(s.clone());
    let list = psi_branches(&scalar, count, order)?;
    let c = scalar.to_f64() / 4.0;
    let mut columns = vec!["x".to_string()];
    columns.extend((0..count).map(|i| format!("branch_{i}")));
    let mut t = Table::new(columns);
    for i in 0..samples {
        let x = c * i as f64 / (samples - 1) as f64;
        let mut row = vec![Cell::Float(x)];
        for b in &list {
            let (lo, hi) = b.domain;
            row.push(if x >= lo && x <= hi {
                Cell::Float(b.eval(x)?)
            } else {
                Cell::Empty
            });
        }
        t.push(row);
    }
    Ok(t)
}
