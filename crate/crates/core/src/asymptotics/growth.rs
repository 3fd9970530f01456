use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::series::{least_squares_slope, ln_f_reference, s1_ln_abs};

/// Growth of the `s = 1` coefficients against `f_n = 2^{-n/2} e^{-3n/2} n!`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthDiagnostic {
    /// `1..=N`
    pub n_range: (usize, usize),
    /// `|c_n|^{1/n}`, index `n - 1`; `NaN` where `c_n = 0`.
    pub c_root: Vec<f64>,
    /// `f_n^{1/n}`, index `n - 1`.
    pub f_root: Vec<f64>,
    /// Window of the slope comparison.
    pub slope_window: (usize, usize),
    /// Least-squares slope of `ln |c_n|` over the window.
    pub c_slope: f64,
    /// Least-squares slope of `ln f_n` over the window.
    pub f_slope: f64,
    /// `exp` of the slope of `ln|c_n| - n ln n`, i.e. `L` in `|c_n| ~ Lⁿ e^{n ln n}`.
    pub fitted_l: f64,
}

impl GrowthDiagnostic {
    pub fn slope_ratio(&self) -> f64 {
        self.c_slope / self.f_slope
    }

    /// `|c_n|^{1/n}`.
    pub fn root(&self, n: usize) -> f64 {
        self.c_root[n - 1]
    }

    /// `max_{n ≤ m} |c_n|^{1/n}`.
    pub fn sup_root(&self, m: usize) -> f64 {
        self.c_root[..m]
            .iter()
            .copied()
            .filter(|v| v.is_finite())
            .fold(0.0, f64::max)
    }
}

/// Exact `c_n` up to `N ≥ 100`, reduced to root and slope diagnostics.
///
/// The slope window is `[150, 300]` when `N ≥ 300`, otherwise `[N/2, N]`.
pub fn growth_analysis(n_max: usize) -> Result<GrowthDiagnostic> {
    if n_max < 100 {
        return Err(Error::DomainError("growth analysis needs N >= 100"));
    }
    let ln_c = s1_ln_abs(n_max);
    let c_root = (1..=n_max)
        .map(|n| ln_c[n].map_or(f64::NAN, |l| math::exp(l / n as f64)))
        .collect();
    let f_root = (1..=n_max).map(|n| math::exp(ln_f_reference(n) / n as f64)).collect();
    let window = if n_max >= 300 { (150, 300) } else { (n_max / 2, n_max) };
    let range = window.0..=window.1;
    let c_pts: Vec<(f64, f64)> = range.clone().filter_map(|n| ln_c[n].map(|l| (n as f64, l))).collect();
    let f_pts: Vec<(f64, f64)> = range.clone().map(|n| (n as f64, ln_f_reference(n))).collect();
    let l_pts: Vec<(f64, f64)> = c_pts.iter().map(|&(n, l)| (n, l - n * math::ln(n))).collect();
    let slope = |p: &[(f64, f64)]| least_squares_slope(p).ok_or(Error::NonConvergence("degenerate slope window"));
    Ok(GrowthDiagnostic {
        n_range: (1, n_max),
        c_root,
        f_root,
        slope_window: window,
        c_slope: slope(&c_pts)?,
        f_slope: slope(&f_pts)?,
        fitted_l: math::exp(slope(&l_pts)?),
    })
}
