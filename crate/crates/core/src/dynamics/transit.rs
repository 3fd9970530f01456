use crate::error::{Error, Result};
use crate::math;
use crate::potentials::PotentialNode;
use crate::quadrature::{tanh_sinh, DeOptions, QuadResult};

/// Relative distance from an endpoint inside which a vanishing `U` is
/// attributed to rounding at a turning point.
const ENDPOINT_SLACK: f64 = 1e-6;

/// `∫_a^b dx / √(-V)` on a potential branch.
pub fn transit_time(node: &PotentialNode, a: f64, b: f64) -> Result<f64> {
    transit_time_with(node, a, b, DeOptions::default()).map(|r| r.value)
}

/// [`transit_time`] with explicit quadrature options and diagnostics.
///
/// Tanh-sinh clusters nodes at both ends, which absorbs the `1/√` behaviour
/// at turning points. Where `U` evaluates to `≤ 0` within `1e-6 (b - a)`
/// of an endpoint the node contributes nothing; anywhere else it is an error.
pub fn transit_time_with(node: &PotentialNode, a: f64, b: f64, opts: DeOptions) -> Result<QuadResult> {
    let ln_s = math::ln(node.series().s_f64()).abs();
    if !ln_s.is_finite() || ln_s == 0.0 {
        return Err(Error::DomainError("transit times need s > 0 and s != 1"));
    }
    let width = (b - a).abs();
    tanh_sinh(
        |n| {
            let u = node.u(n.x)?;
            if u > 0.0 {
                return Ok(1.0 / (ln_s * math::sqrt(u)));
            }
            if n.from_a.min(n.from_b) < ENDPOINT_SLACK * width {
                Ok(0.0)
            } else {
                Err(Error::DomainError("-V is negative inside the transit interval"))
            }
        },
        a,
        b,
        opts,
    )
}
