//! `U` and `V = -(ln²s) U`: series evaluation, the hardened forms `U₀`/`U₁`,
//! the switchback family `V_n^(m)`, closed forms and the `s ↔ 2 - s` duality.

mod closed;
mod dual;
mod family;
mod useries;

pub use closed::{closed_form_u, v_from_u};
pub use dual::{dual_parameter, dual_transform_u, dual_transform_with};
pub use family::{
    family_letter, family_node, family_node_default, family_node_with, preimage, recipe, recipe_domain, EvalDomain,
    PotentialNode, Sign,
};
pub use useries::{eval_u, eval_u0, eval_u1, USeries, GUARD_FRACTION};
