use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::orbit::critical_orbit;
use super::transit::transit_time;
use crate::algebra::{rational_to_f64, Scalar};
use crate::error::{Error, Result};
use crate::potentials::{family_node_with, PotentialNode, USeries};
use crate::report::VerificationReport;

/// Groups past this index are not part of the tabulated path.
pub const KNOWN_GROUPS: usize = 5;

/// Traversal of one potential between two of its turning points.
#[derive(Clone, Debug)]
pub struct CheminLeg {
    pub node: PotentialNode,
    pub from: BigRational,
    pub to: BigRational,
}

impl CheminLeg {
    pub fn from_f64(&self) -> f64 {
        rational_to_f64(&self.from)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.to)
    }

    pub fn describe(&self) -> String {
        format!("{} {} -> {}", self.node.label(), fmt_q(&self.from), fmt_q(&self.to))
    }

    /// Transit time, always positive.
    pub fn transit(&self) -> Result<f64> {
        let (a, b) = (self.from_f64(), self.to_f64());
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        transit_time(&self.node, lo, hi)
    }
}

/// Potentials traversed during one unit of time.
#[derive(Clone, Debug)]
pub struct CheminGroup {
    /// `m + n` of every node in the group; 0 for the lead-in.
    pub level: usize,
    pub legs: Vec<CheminLeg>,
    /// Total transit time of the group.
    pub budget: f64,
    /// Beyond the tabulated prefix of the path.
    pub extrapolated: bool,
}

impl CheminGroup {
    pub fn labels(&self) -> Vec<String> {
        self.legs.iter().map(|l| l.node.label()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct CheminSchedule {
    pub s: Scalar,
    /// `groups[0]` is the lead-in on `V₀` from `½` to `s/4`; group `k ≥ 1`
    /// runs from the turning point `f^k(½)` to `f^{k+1}(½)`.
    pub groups: Vec<CheminGroup>,
}

impl CheminSchedule {
    pub fn empty(s: &Scalar) -> Self {
        CheminSchedule {
            s: s.clone(),
            groups: Vec::new(),
        }
    }

    /// Group-sum tolerance: tighter where the series converges faster.
    pub fn tolerance(&self) -> f64 {
        transit_tolerance(self.s.to_f64())
    }
}

pub fn transit_tolerance(s: f64) -> f64 {
    if s <= 3.0 {
        1e-5
    } else {
        2e-4
    }
}

/// Lead-in plus `groups` further groups of the potential path.
pub fn build_chemin(s: &Scalar, groups: usize, order: usize) -> Result<CheminSchedule> {
    let series = Arc::new(USeries::new(s, order)?);
    build_chemin_with(&series, groups)
}

/// [`build_chemin`] on a prebuilt series.
///
/// Group `k` uses every real node with `m + n = k`, `n ≥ 1`, each exactly
/// once, chained so that consecutive legs share a turning point and the
/// chain runs from `f^k(½)` to `f^{k+1}(½)`.
pub fn build_chemin_with(series: &Arc<USeries>, groups: usize) -> Result<CheminSchedule> {
    let s = series.s().clone();
    let exact = s.to_rational().ok_or(Error::DomainError("s must be finite"))?;
    let orbit = critical_orbit(&exact, groups + 1);
    let lead = family_node_with(series, 0, 0)?;
    let mut out = vec![CheminGroup {
        level: 0,
        legs: vec![CheminLeg {
            node: lead,
            from: orbit[0].clone(),
            to: orbit[1].clone(),
        }],
        budget: 1.0,
        extrapolated: false,
    }];
    for k in 1..=groups {
        let mut candidates = Vec::new();
        for m in 0..k {
            match family_node_with(series, m, k - m) {
                Ok(node) => candidates.push(node),
                Err(Error::ComplexValued { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        let legs = chain(&candidates, &orbit[k], &orbit[k + 1]).ok_or(Error::ScheduleInconsistency { group: k })?;
        let extrapolated = (k > KNOWN_GROUPS && s.to_f64() > 3.0) || legs.iter().any(|l| l.node.is_extrapolated());
        out.push(CheminGroup {
            level: k,
            legs,
            budget: 1.0,
            extrapolated,
        });
    }
    Ok(CheminSchedule { s, groups: out })
}

fn endpoints(node: &PotentialNode) -> Option<(BigRational, BigRational)> {
    Some((node.domain.lo.to_rational()?, node.domain.hi.to_rational()?))
}

/// Depth-first search for an ordering of all candidates from `start` to `end`.
fn chain(candidates: &[PotentialNode], start: &BigRational, end: &BigRational) -> Option<Vec<CheminLeg>> {
    let ends: Vec<(BigRational, BigRational)> = candidates.iter().map(endpoints).collect::<Option<_>>()?;
    let mut used = vec![false; candidates.len()];
    let mut path: Vec<(usize, bool)> = Vec::new();
    if !search(&ends, &mut used, &mut path, start, end) {
        return None;
    }
    Some(
        path.into_iter()
            .map(|(i, forward)| {
                let (lo, hi) = ends[i].clone();
                let (from, to) = if forward { (lo, hi) } else { (hi, lo) };
                CheminLeg {
                    node: candidates[i].clone(),
                    from,
                    to,
                }
            })
            .collect(),
    )
}

fn search(
    ends: &[(BigRational, BigRational)],
    used: &mut [bool],
    path: &mut Vec<(usize, bool)>,
    at: &BigRational,
    end: &BigRational,
) -> bool {
    if path.len() == ends.len() {
        return at == end;
    }
    for i in 0..ends.len() {
        if used[i] {
            continue;
        }
        let (lo, hi) = &ends[i];
        let next = if lo == at {
            (hi, true)
        } else if hi == at {
            (lo, false)
        } else {
            continue;
        };
        used[i] = true;
        path.push((i, next.1));
        if search(ends, used, path, next.0, end) {
            return true;
        }
        path.pop();
        used[i] = false;
    }
    false
}

/// Transit times of every leg, per group.
#[derive(Clone, Debug)]
pub struct GroupTransit {
    pub level: usize,
    pub legs: Vec<(String, f64)>,
    pub total: f64,
    pub extrapolated: bool,
}

pub fn chemin_transits(schedule: &CheminSchedule) -> Result<Vec<GroupTransit>> {
    schedule
        .groups
        .iter()
        .map(|g| {
            let mut legs = Vec::with_capacity(g.legs.len());
            let mut total = 0.0;
            for leg in &g.legs {
                let t = leg.transit()?;
                total += t;
                legs.push((leg.describe(), t));
            }
            Ok(GroupTransit {
                level: g.level,
                legs,
                total,
                extrapolated: g.extrapolated,
            })
        })
        .collect()
}

/// One check per group: the leg transit times must sum to the group budget.
pub fn verify_chemin(schedule: &CheminSchedule) -> VerificationReport {
    let mut report = VerificationReport::new();
    let tol = schedule.tolerance();
    for g in &schedule.groups {
        let names: Vec<String> = g.legs.iter().map(CheminLeg::describe).collect();
        let name = format!("chemin group {} [{}]", g.level, names.join(", "));
        let total: Result<f64> = g.legs.iter().map(CheminLeg::transit).sum();
        match total {
            Ok(t) => {
                report.number(name, g.budget, t, tol);
            }
            Err(e) => report.failure(name, crate::report::CheckValue::Number(g.budget), &e),
        }
    }
    report
}

fn fmt_q(q: &BigRational) -> String {
    if q.is_integer() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
