//! Double-exponential and Gauss–Kronrod quadrature.
//!
//! The tanh-sinh rule hands the integrand both the abscissa and its exact
//! distance to the nearer endpoint, so integrands with inverse-square-root
//! singularities can be evaluated without cancellation in `b - x`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub error: f64,
    pub levels: u32,
    pub evaluations: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeOptions {
    /// Successive levels must agree to this absolute tolerance.
    pub tolerance: f64,
    /// Largest level; step size at level `k` is `2^{-k}`.
    pub max_level: u32,
    /// Results whose last-level difference exceeds this are rejected.
    pub accept: f64,
}

impl Default for DeOptions {
    fn default() -> Self {
        DeOptions {
            tolerance: 1e-9,
            max_level: 12,
            accept: 1e-7,
        }
    }
}

/// Where a tanh-sinh node sits on `[a, b]`.
#[derive(Clone, Copy, Debug)]
pub struct Node {
    pub x: f64,
    /// Distance from `a` (exact to rounding of the transform).
    pub from_a: f64,
    /// Distance from `b`.
    pub from_b: f64,
}

const T_MAX: f64 = 4.5;

/// `∫_a^b f` by the tanh-sinh rule.
pub fn tanh_sinh<F>(mut f: F, a: f64, b: f64, opts: DeOptions) -> Result<QuadResult>
where
    F: FnMut(Node) -> Result<f64>,
{
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error: 0.0,
            levels: 0,
            evaluations: 0,
        });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let half = 0.5 * (hi - lo);
    let mut evaluations = 0usize;

    // contribution of the node pair at parameter t >= 0
    let mut pair = |t: f64, evaluations: &mut usize| -> Result<f64> {
        let u = 0.5 * core::f64::consts::PI * math::sinh(t);
        let e = math::exp(-2.0 * u);
        // 1 - tanh(u) without cancellation
        let comp = 2.0 * e / (1.0 + e);
        let cosh_u = math::cosh(u);
        let w = 0.5 * core::f64::consts::PI * math::cosh(t) / (cosh_u * cosh_u);
        let d = half * comp;
        if w == 0.0 || d == 0.0 {
            return Ok(0.0);
        }
        let mut acc = 0.0;
        let right = Node {
            x: hi - d,
            from_a: 2.0 * half - d,
            from_b: d,
        };
        acc += f(right)?;
        *evaluations += 1;
        if t > 0.0 {
            let left = Node {
                x: lo + d,
                from_a: d,
                from_b: 2.0 * half - d,
            };
            acc += f(left)?;
            *evaluations += 1;
        }
        Ok(w * acc)
    };

    let mut sum = 0.0;
    let mut k = 0;
    while (k as f64) <= T_MAX {
        sum += pair(k as f64, &mut evaluations)?;
        k += 1;
    }
    let mut h = 1.0;
    let mut estimate = sum * h * half;
    let mut error = f64::INFINITY;
    for level in 1..=opts.max_level {
        h *= 0.5;
        let mut t = h;
        while t <= T_MAX {
            sum += pair(t, &mut evaluations)?;
            t += 2.0 * h;
        }
        let next = sum * h * half;
        error = (next - estimate).abs();
        estimate = next;
        if level >= 3 && error <= opts.tolerance {
            return Ok(QuadResult {
                value: sign * estimate,
                error,
                levels: level,
                evaluations,
            });
        }
    }
    if error <= opts.accept {
        Ok(QuadResult {
            value: sign * estimate,
            error,
            levels: opts.max_level,
            evaluations,
        })
    } else {
        Err(Error::NonConvergence("tanh-sinh levels did not settle"))
    }
}

/// `∫_a^∞ f` by the exp-sinh rule `x = a + exp(π/2 sinh t)`.
pub fn exp_sinh<F>(mut f: F, a: f64, opts: DeOptions) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut evaluations = 0usize;
    let mut term = |t: f64, evaluations: &mut usize| -> Result<f64> {
        let u = 0.5 * core::f64::consts::PI * math::sinh(t);
        if u > 700.0 {
            return Ok(0.0);
        }
        let x = math::exp(u);
        let w = 0.5 * core::f64::consts::PI * math::cosh(t) * x;
        if w == 0.0 || !w.is_finite() {
            return Ok(0.0);
        }
        *evaluations += 1;
        let v = f(a + x)?;
        Ok(if v == 0.0 { 0.0 } else { w * v })
    };
    const T_LO: f64 = -5.0;
    const T_HI: f64 = 4.0;
    let mut sum = 0.0;
    let mut k = T_LO;
    while k <= T_HI {
        sum += term(k, &mut evaluations)?;
        k += 1.0;
    }
    let mut h = 1.0;
    let mut estimate = sum * h;
    let mut error = f64::INFINITY;
    for level in 1..=opts.max_level {
        h *= 0.5;
        let mut t = T_LO + h;
        while t <= T_HI {
            sum += term(t, &mut evaluations)?;
            t += 2.0 * h;
        }
        let next = sum * h;
        error = (next - estimate).abs();
        estimate = next;
        if level >= 3 && error <= opts.tolerance {
            return Ok(QuadResult {
                value: estimate,
                error,
                levels: level,
                evaluations,
            });
        }
    }
    if error <= opts.accept {
        Ok(QuadResult {
            value: estimate,
            error,
            levels: opts.max_level,
            evaluations,
        })
    } else {
        Err(Error::NonConvergence("exp-sinh levels did not settle"))
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss–Kronrod (7/15) on `[a, b]`, bisecting the worst interval.
pub fn gauss_kronrod<F>(mut f: F, a: f64, b: f64, tol: f64, max_intervals: usize) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    let (v, e) = gk15(&mut f, a, b);
    let mut parts: Vec<(f64, f64, f64, f64)> = alloc::vec![(a, b, v, e)];
    let mut evaluations = 15;
    loop {
        let total: f64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if err <= tol {
            return Ok(QuadResult {
                value: total,
                error: err,
                levels: parts.len() as u32,
                evaluations,
            });
        }
        if parts.len() >= max_intervals {
            return Err(Error::NonConvergence("Gauss-Kronrod interval budget exhausted"));
        }
        let worst = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let (lo, hi, _, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&mut f, lo, mid);
        let (v2, e2) = gk15(&mut f, mid, hi);
        evaluations += 30;
        parts.push((lo, mid, v1, e1));
        parts.push((mid, hi, v2, e2));
    }
}

/// `∫_a^∞ f` by Gauss–Kronrod after `y = a + t/(1-t)`.
pub fn gauss_kronrod_semi_infinite<F>(mut f: F, a: f64, tol: f64, max_intervals: usize) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    gauss_kronrod(
        |t| {
            if t >= 1.0 {
                return 0.0;
            }
            let one_minus = 1.0 - t;
            f(a + t / one_minus) / (one_minus * one_minus)
        },
        0.0,
        1.0,
        tol,
        max_intervals,
    )
}
