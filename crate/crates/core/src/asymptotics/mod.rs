//! The `s = 1` potential: factorial growth of its divergent series and the
//! principal-value integral whose asymptotic expansion mirrors it.

mod growth;
mod pv;

pub use growth::{growth_analysis, GrowthDiagnostic};
pub use pv::{asymptotic_coefficient, direct_integral, pole_scale, pv_integral, pv_integral_with, shi, PvOptions};
