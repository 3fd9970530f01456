//! Coefficient engines: the U-series, numerator polynomials, Schröder and
//! Poincaré series, the `s = 1` series, and the radius estimator.

mod numerator;
mod power_series;
mod radius;
pub mod residual;
mod s1;
mod schroder;
mod u;

pub use numerator::{expected_degree, p_polynomials};
pub use power_series::{horner, horner_with_derivative, PowerSeries};
pub use radius::{
    guard_radius, least_squares_slope, radius_estimate, radius_formula, radius_from_log_coefficients, RadiusEstimate,
    RadiusMethod, WINDOW_BLOCKS,
};
pub use s1::{f_reference, ln_f_reference, s1_coefficients, s1_integer_form, s1_ln_abs};
pub use schroder::{phi_coefficients, poincare_coefficients, psi_coefficients, schroder_coefficients};
pub use u::{u_a, u_coefficients, u_integer_form, UIntegerForm};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 200;
