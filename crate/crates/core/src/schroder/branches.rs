use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Signed;

use super::interp::MonotoneCubic;
use super::quadratic::QuadraticMap;
use crate::algebra::{rational_to_f64, Scalar};
use crate::dynamics::build_chemin_with;
use crate::error::{Error, Result};
use crate::math;
use crate::potentials::{preimage, recipe_domain, Sign, USeries};

/// Points per tabulated branch.
pub const BRANCH_GRID: usize = 512;

/// `Ψ_R(x) = s^{|R|} Ψ₀(x_R)`, with `x_R` the nested preimage selected by
/// the sign recipe `R` (outermost first). This is the continuation of `Ψ`
/// along the same path as the potential branch with recipe `R`.
#[derive(Clone, Debug)]
pub struct PsiBranch {
    pub index: usize,
    pub label: String,
    pub s: Scalar,
    pub recipe: Vec<Sign>,
    /// Domain `[lo, hi]`, shared with the potential branch.
    pub domain: (f64, f64),
    /// Turning point where the particle enters this branch.
    pub entry: BigRational,
    /// Turning point where it leaves.
    pub exit: BigRational,
    s_exact: BigRational,
    map: Arc<QuadraticMap>,
    table: MonotoneCubic,
}

impl PsiBranch {
    pub fn eval(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.domain;
        if x < lo - 1e-12 || x > hi + 1e-12 {
            return Err(Error::DomainError("outside the branch domain"));
        }
        psi_on_recipe(&self.map, &self.recipe, x.clamp(lo, hi))
    }

    /// `Ψ_R` at an exact point. Preimages are taken in exact arithmetic as
    /// long as they stay rational, which is the case along the critical
    /// orbit; this avoids the `√ε` loss at turning points, where `Ψ_R` has
    /// a square-root branch point.
    pub fn eval_exact(&self, x: &BigRational) -> Result<f64> {
        let s = self.map.lambda;
        let quarter = BigRational::new(1.into(), 4.into());
        let half = BigRational::new(1.into(), 2.into());
        let mut exact = Some(x.clone());
        let mut y = rational_to_f64(x);
        for &sign in &self.recipe {
            if let Some(q) = exact.take() {
                let r = &quarter - &q / &self.s_exact;
                if r.is_negative() {
                    return Err(Error::ComplexValued { lo: y, hi: y });
                }
                if let Some(root) = rational_sqrt(&r) {
                    let next = match sign {
                        Sign::Plus => &half + root,
                        Sign::Minus => &half - root,
                    };
                    y = rational_to_f64(&next);
                    exact = Some(next);
                    continue;
                }
            }
            y = preimage(y, s, sign)?;
        }
        let y = y.clamp(0.0, s / 4.0);
        Ok(math::powi(s, self.recipe.len() as i32) * self.map.psi(y)?)
    }

    /// Monotone-cubic interpolation of the tabulated values.
    pub fn interpolate(&self, x: f64) -> Option<f64> {
        self.table.eval(x)
    }

    pub fn table(&self) -> &MonotoneCubic {
        &self.table
    }

    /// `s Ψ_R(x) - Ψ_{σ(x)R}(f(x))`, where `σ(x)` is the side of `½` holding `x`.
    pub fn sfe_residual(&self, x: f64) -> Result<f64> {
        let s = self.map.lambda;
        let mut extended = Vec::with_capacity(self.recipe.len() + 1);
        extended.push(Sign::of(x));
        extended.extend_from_slice(&self.recipe);
        let lhs = s * self.eval(x)?;
        let rhs = psi_on_recipe(&self.map, &extended, s * x * (1.0 - x))?;
        Ok(lhs - rhs)
    }

    /// `Φ(Ψ_R(x)) - x`.
    pub fn inversion_residual(&self, x: f64) -> Result<f64> {
        Ok(self.map.phi(self.eval(x)?)? - x)
    }
}

/// Square root of a nonnegative rational when it is rational.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// `s^{|R|} Ψ₀(x_R)`.
pub fn psi_on_recipe(map: &QuadraticMap, recipe: &[Sign], x: f64) -> Result<f64> {
    let s = map.lambda;
    let mut y = x;
    for &sign in recipe {
        y = preimage(y, s, sign)?;
    }
    let y = y.clamp(0.0, s / 4.0);
    Ok(math::powi(s, recipe.len() as i32) * map.psi(y)?)
}

/// The first `count` branches of `Ψ` in the order the particle meets them.
///
/// Branch 0 is `Ψ₀` on `[0, s/4]`; the rest follow the potential path, so
/// each branch shares its entry point with the previous branch's exit.
pub fn psi_branches(s: &Scalar, count: usize, order: usize) -> Result<Vec<PsiBranch>> {
    let sf = s.to_f64();
    if !(sf > 2.0 && sf <= 4.0) {
        return Err(Error::DomainError("Ψ branches need 2 < s <= 4"));
    }
    let exact = s.to_rational().ok_or(Error::DomainError("s must be finite"))?;
    let map = Arc::new(QuadraticMap::logistic(s, order)?);
    // The chemin is only needed for its turning points, so a short U-series suffices.
    let useries = Arc::new(USeries::new(s, 8)?);
    let mut nodes = Vec::new();
    let mut groups = 0;
    while nodes.len() < count {
        let schedule = build_chemin_with(&useries, groups)?;
        nodes = schedule.groups.into_iter().flat_map(|g| g.legs).collect();
        groups += 1;
    }
    nodes.truncate(count);
    let mut out = Vec::with_capacity(count);
    for (index, leg) in nodes.into_iter().enumerate() {
        let recipe = leg.node.recipe.clone();
        let (lo, hi) = recipe_domain(&recipe, &exact)?;
        let (lo_f, hi_f) = (rational_to_f64(&lo), rational_to_f64(&hi));
        let xs: Vec<f64> = (0..BRANCH_GRID)
            .map(|i| lo_f + (hi_f - lo_f) * i as f64 / (BRANCH_GRID - 1) as f64)
            .collect();
        let ys = xs
            .iter()
            .map(|&x| psi_on_recipe(&map, &recipe, x))
            .collect::<Result<Vec<f64>>>()?;
        out.push(PsiBranch {
            index,
            label: leg.node.label(),
            s: s.clone(),
            recipe,
            domain: (lo_f, hi_f),
            entry: leg.from.clone(),
            exit: leg.to.clone(),
            s_exact: exact.clone(),
            map: Arc::clone(&map),
            table: MonotoneCubic::new(xs, ys)?,
        });
    }
    Ok(out)
}

/// `|Ψ_k(exit_k) - Ψ_{k+1}(entry_{k+1})|` for consecutive branches.
pub fn branch_continuity(branches: &[PsiBranch]) -> Result<Vec<(usize, f64, f64)>> {
    branches
        .windows(2)
        .map(|w| {
            let a = w[0].eval_exact(&w[0].exit)?;
            let b = w[1].eval_exact(&w[1].entry)?;
            Ok((w[0].index, rational_to_f64(&w[0].exit), (a - b).abs()))
        })
        .collect()
}
