use alloc::vec::Vec;

use super::u::{exact_parameter, u_integer_form};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::math;

/// How the limsup of `|a_n|^{1/n}` was approximated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum RadiusMethod {
    /// Block suprema of `ln|a_n|` over `[N/2, N]`, then a least-squares slope.
    LimsupWindow,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiusEstimate {
    pub s: Scalar,
    /// `1 / limsup |a_n|^{1/n}`.
    pub estimate: f64,
    pub n_used: usize,
    pub method: RadiusMethod,
    /// `1 / max_{N/2 ≤ n ≤ N} |a_n|^{1/n}`, the uncorrected window supremum.
    pub window_sup: f64,
}

/// Number of blocks the tail window is cut into.
pub const WINDOW_BLOCKS: usize = 16;

/// Radius of convergence of the U-series from `a_1..a_N`.
///
/// The tail `[N/2, N]` is split into blocks; the supremum of `ln|a_n|` in
/// each block removes the downward spikes seen for `2/3 < s < 2`, and the
/// slope of a straight-line fit through the block maxima is `-ln R`. Using
/// the slope rather than `max |a_n|^{1/n}` removes the bias from the
/// subexponential prefactor, which at `N = 400` is several percent.
pub fn radius_estimate(s: &Scalar, n: usize) -> Result<RadiusEstimate> {
    if n < 100 {
        return Err(Error::DomainError("radius estimation needs N >= 100"));
    }
    let form = u_integer_form(&exact_parameter(s)?, n)?;
    let ln_abs = form.ln_abs();
    let (estimate, window_sup) =
        radius_from_log_coefficients(&ln_abs, n / 2, n).ok_or(Error::NonConvergence("all tail coefficients vanish"))?;
    Ok(RadiusEstimate {
        s: s.clone(),
        estimate,
        n_used: n,
        method: RadiusMethod::LimsupWindow,
        window_sup,
    })
}

/// `(slope-based radius, plain window-sup radius)` from `ln|c_n|` over `[lo, hi]`.
pub fn radius_from_log_coefficients(ln_abs: &[Option<f64>], lo: usize, hi: usize) -> Option<(f64, f64)> {
    let lo = lo.max(1);
    let width = (hi + 1 - lo) as f64 / WINDOW_BLOCKS as f64;
    let mut peaks: Vec<(f64, f64)> = Vec::with_capacity(WINDOW_BLOCKS);
    for b in 0..WINDOW_BLOCKS {
        let start = lo + (b as f64 * width) as usize;
        let end = if b + 1 == WINDOW_BLOCKS {
            hi
        } else {
            lo + ((b + 1) as f64 * width) as usize - 1
        };
        let best = (start..=end)
            .filter_map(|n| ln_abs[n].map(|l| (n, l)))
            .max_by(|a, b| a.1.total_cmp(&b.1));
        if let Some((n, l)) = best {
            peaks.push((n as f64, l));
        }
    }
    let sup = (lo..=hi)
        .filter_map(|n| ln_abs[n].map(|l| l / n as f64))
        .max_by(f64::total_cmp)?;
    let slope = least_squares_slope(&peaks)?;
    Some((math::exp(-slope), math::exp(-sup)))
}

/// Slope of the least-squares line through `(x, y)` points.
pub fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// The piecewise radius for `0 < s <= 4`; `None` outside that range.
pub fn radius_formula(s: f64) -> Option<f64> {
    if s <= 0.0 || s > 4.0 {
        None
    } else if s <= 2.0 / 3.0 {
        Some(0.5)
    } else if s <= 2.0 {
        Some((1.0 - 1.0 / s).abs())
    } else {
        Some(s / 4.0)
    }
}

/// `R` used to guard series evaluation: the formula where it applies,
/// otherwise an estimate at `N = 200`.
pub fn guard_radius(s: &Scalar) -> Result<f64> {
    match radius_formula(s.to_f64()) {
        Some(r) => Ok(r),
        None => radius_estimate(s, 200).map(|r| r.estimate),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_is_continuous() {
        let eps = 1e-12;
        assert!((radius_formula(2.0 / 3.0 - eps).unwrap() - radius_formula(2.0 / 3.0 + eps).unwrap()).abs() < 1e-9);
        assert!((radius_formula(2.0 - eps).unwrap() - radius_formula(2.0 + eps).unwrap()).abs() < 1e-9);
        assert_eq!(radius_formula(-2.0), None);
    }

    #[test]
    fn block_slope_of_pure_geometric_growth() {
        let ln: Vec<Option<f64>> = (0..=200).map(|n| Some(n as f64 * 2f64.ln())).collect();
        let (r, sup) = radius_from_log_coefficients(&ln, 100, 200).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
        assert!((sup - 0.5).abs() < 1e-12);
    }
}
