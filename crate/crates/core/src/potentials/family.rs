use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::useries::{lower_preimage, radicand, USeries};
use crate::algebra::{rational_to_f64, Scalar};
use crate::error::{Error, Result};
use crate::math;
use crate::series::DEFAULT_ORDER;

/// Which preimage `x_± = ½ ± √(¼ - x/s)` a substitution step takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Side of `½` on which `x` lies; `½` itself counts as `+`.
    pub fn of(x: f64) -> Sign {
        if x >= 0.5 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `½ ± √(¼ - x/s)`, taking the cancellation-free form for the `-` root.
pub fn preimage(x: f64, s: f64, sign: Sign) -> Result<f64> {
    let r = radicand(x, s);
    if r < -1e-13 {
        return Err(Error::ComplexValued { lo: x, hi: x });
    }
    let r = r.max(0.0);
    Ok(match sign {
        Sign::Plus => 0.5 + math::sqrt(r),
        Sign::Minus => lower_preimage(x.min(s / 4.0), s)?,
    })
}

/// Interval on which every nested radicand of a node is nonnegative.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalDomain {
    pub lo: Scalar,
    pub hi: Scalar,
}

impl EvalDomain {
    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64()
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64()
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo_f64() && x <= self.hi_f64()
    }
}

/// One switchback potential `V_n^(m)`.
///
/// The recipe lists the substitution signs outermost first; the innermost
/// function is `U₀`. Family `m` starts with `m` alternating signs ending in
/// `-` next to `U₀`'s successors, followed by `n` plus signs:
/// `W_n = [-, +…]`, `X_n = [+, -, +…]`, `Y_n = [-, +, -, +…]`, and so on.
#[derive(Clone, Debug)]
pub struct PotentialNode {
    pub family: usize,
    pub index: usize,
    pub s: Scalar,
    pub recipe: Vec<Sign>,
    pub domain: EvalDomain,
    series: Arc<USeries>,
}

impl PotentialNode {
    pub fn lower_tp(&self) -> &Scalar {
        &self.domain.lo
    }

    pub fn upper_tp(&self) -> &Scalar {
        &self.domain.hi
    }

    pub fn series(&self) -> &Arc<USeries> {
        &self.series
    }

    /// `V`, `W`, `X`, `Y`, `Z` for families 0..=4, `F5`, `F6`, … beyond.
    pub fn family_letter(&self) -> String {
        family_letter(self.family)
    }

    pub fn label(&self) -> String {
        format!("{}_{}", self.family_letter(), self.index)
    }

    /// Families past `Z` are not among the defined families.
    pub fn is_extrapolated(&self) -> bool {
        self.family > 4
    }

    pub fn recipe_string(&self) -> String {
        self.recipe.iter().map(|s| s.symbol()).collect()
    }

    /// `U` on this branch. Arguments within `1e-12` of the domain are clamped.
    pub fn u(&self, x: f64) -> Result<f64> {
        let (lo, hi) = (self.domain.lo_f64(), self.domain.hi_f64());
        let tol = 1e-12;
        if x < lo - tol || x > hi + tol {
            return Err(Error::ComplexValued { lo: x, hi: x });
        }
        let s = self.series.s_f64();
        let mut x = x.clamp(lo, hi);
        let mut prefactor = 1.0;
        for &sign in &self.recipe {
            prefactor *= s * (s - 4.0 * x);
            x = preimage(x, s, sign)?;
        }
        let c = s / 4.0;
        Ok(prefactor * self.series.eval_u0(x.clamp(0.0, c))?)
    }

    /// `V = -(ln s)² U`.
    pub fn v(&self, x: f64) -> Result<f64> {
        let l = math::ln(self.series.s_f64());
        Ok(-l * l * self.u(x)?)
    }
}

impl fmt::Display for PotentialNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}, {}]", self.label(), self.domain.lo, self.domain.hi)
    }
}

pub fn family_letter(m: usize) -> String {
    match m {
        0 => "V".into(),
        1 => "W".into(),
        2 => "X".into(),
        3 => "Y".into(),
        4 => "Z".into(),
        _ => format!("F{m}"),
    }
}

/// Sign recipe of `V_n^(m)`, outermost first.
pub fn recipe(m: usize, n: usize) -> Vec<Sign> {
    let mut out = Vec::with_capacity(m + n);
    for i in 0..m {
        out.push(if (m - 1 - i).is_multiple_of(2) {
            Sign::Minus
        } else {
            Sign::Plus
        });
    }
    out.extend(core::iter::repeat_n(Sign::Plus, n));
    out
}

/// Real domain of a recipe, propagated outward from `U₀`'s `[0, s/4]`
/// in exact arithmetic.
pub fn recipe_domain(recipe: &[Sign], s: &BigRational) -> Result<(BigRational, BigRational)> {
    if !s.is_positive() {
        return Err(Error::DomainError("potential families need s > 0"));
    }
    let half = BigRational::new(1.into(), 2.into());
    let map = |x: &BigRational| s * x * (BigRational::one() - x);
    let mut lo = BigRational::zero();
    let mut hi = s / BigRational::from_integer(4.into());
    for sign in recipe.iter().rev() {
        match sign {
            Sign::Plus => lo = lo.max(half.clone()),
            Sign::Minus => hi = hi.min(half.clone()),
        }
        if lo >= hi {
            return Err(Error::ComplexValued {
                lo: rational_to_f64(&lo),
                hi: rational_to_f64(&hi),
            });
        }
        let (a, b) = (map(&lo), map(&hi));
        (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    }
    Ok((lo, hi))
}

/// `V_n^(m)` sharing a prebuilt series.
pub fn family_node_with(series: &Arc<USeries>, m: usize, n: usize) -> Result<PotentialNode> {
    let s = series.s().clone();
    let exact = s.to_rational().ok_or(Error::DomainError("s must be finite"))?;
    let recipe = recipe(m, n);
    let (lo, hi) = recipe_domain(&recipe, &exact)?;
    let wrap = |v: BigRational| {
        if s.is_exact() {
            Scalar::Exact(v)
        } else {
            Scalar::Float(rational_to_f64(&v))
        }
    };
    Ok(PotentialNode {
        family: m,
        index: n,
        s: s.clone(),
        recipe,
        domain: EvalDomain {
            lo: wrap(lo),
            hi: wrap(hi),
        },
        series: Arc::clone(series),
    })
}

/// `V_n^(m)` at parameter `s` with a fresh series of the given order.
pub fn family_node(m: usize, n: usize, s: &Scalar, order: usize) -> Result<PotentialNode> {
    let series = Arc::new(USeries::new(s, order)?);
    family_node_with(&series, m, n)
}

/// `V_n^(m)` at the default order.
pub fn family_node_default(m: usize, n: usize, s: &Scalar) -> Result<PotentialNode> {
    family_node(m, n, s, DEFAULT_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn recipes_follow_the_family_pattern() {
        use Sign::{Minus as M, Plus as P};
        assert_eq!(recipe(0, 2), vec![P, P]);
        assert_eq!(recipe(1, 1), vec![M, P]);
        assert_eq!(recipe(2, 1), vec![P, M, P]);
        assert_eq!(recipe(3, 0), vec![M, P, M]);
    }

    #[test]
    fn known_turning_points() {
        let s = q(10, 3);
        let (lo, hi) = recipe_domain(&recipe(1, 1), &s).unwrap();
        assert_eq!((lo, hi), (q(3625, 4374), q(5, 6)));
        let (lo, hi) = recipe_domain(&recipe(2, 1), &s).unwrap();
        assert_eq!((lo, hi), (q(25, 54), q(13575625, 28697814)));
        let s = q(5, 2);
        assert_eq!(recipe_domain(&recipe(0, 2), &s).unwrap(), (q(75, 128), q(19875, 32768)));
        assert!(matches!(
            recipe_domain(&recipe(1, 1), &s),
            Err(Error::ComplexValued { .. })
        ));
    }
}
