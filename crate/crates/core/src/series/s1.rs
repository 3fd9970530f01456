//! The `s = 1` potential `V(x,1) = -x⁴(1 + Σ c_n xⁿ)`.
//!
//! Power matching in `V(x(1-x),1) = (1-2x)² V(x,1)` yields
//! `n c_n = Σ_{k=k₀}^{n-1} (-1)^{n+1-k} C(k+4, n+1-k) c_k - 4 c_{n-1}`
//! with `k₀ = max(0, ⌈(n-3)/2⌉)`. The integers `γ_n = n! c_n` obey the same
//! relation multiplied through by `(n-1)!`, which keeps the recursion gcd-free.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::power_series::PowerSeries;
use crate::algebra::{binomial_table, ln_abs_big, Scalar};
use crate::math;

/// `γ_0..=γ_N` with `γ_n = n! c_n` and `γ_0 = 1`.
pub fn s1_integer_form(n_max: usize) -> Vec<BigInt> {
    let binom = binomial_table(n_max + 4);
    let mut g = vec![BigInt::one()];
    for n in 1..=n_max {
        let k0 = if n <= 3 { 0 } else { (n - 3).div_ceil(2) };
        let mut acc = BigInt::zero();
        for k in k0..n {
            if k > k0 {
                acc *= k;
            }
            let term = &binom[k + 4][n + 1 - k] * &g[k];
            if (n + 1 - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let next = acc - BigInt::from(4) * &g[n - 1];
        g.push(next);
    }
    g
}

/// `ln |c_n|` for `n = 0..=N`, `None` where `c_n = 0`.
pub fn s1_ln_abs(n_max: usize) -> Vec<Option<f64>> {
    s1_integer_form(n_max)
        .iter()
        .enumerate()
        .map(|(n, g)| (!g.is_zero()).then(|| ln_abs_big(g) - libm::lgamma(n as f64 + 1.0)))
        .collect()
}

/// Series `1 + Σ c_n xⁿ` (so `V(x,1) = -x⁴` times this), exact, about 0.
pub fn s1_coefficients(n_max: usize) -> PowerSeries {
    let mut fact = BigInt::one();
    let coefficients = s1_integer_form(n_max)
        .into_iter()
        .enumerate()
        .map(|(n, g)| {
            if n > 0 {
                fact *= n;
            }
            Scalar::Exact(BigRational::new(g, fact.clone()))
        })
        .collect();
    PowerSeries::new(Scalar::int(0), Scalar::int(1), coefficients)
}

/// `ln f_n` with `f_n = 2^{-n/2} e^{-3n/2} n!`.
pub fn ln_f_reference(n: usize) -> f64 {
    let n = n as f64;
    -n * (0.5 * core::f64::consts::LN_2 + 1.5) + libm::lgamma(n + 1.0)
}

/// `f_n` itself; overflows to infinity for large `n`.
pub fn f_reference(n: usize) -> f64 {
    math::exp(ln_f_reference(n))
}
