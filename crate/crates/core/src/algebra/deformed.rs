use alloc::vec;

use num_rational::BigRational;
use num_traits::One;

use super::poly::SPolynomial;
use super::scalar::Scalar;

/// `[k]_s = (s^k - 1)/(s - 1)`, with the limit `k` at `s = 1`.
///
/// Evaluated as `1 + s + … + s^{k-1}`, which is the same polynomial and
/// needs no special case at `s = 1`.
pub fn deformed_integer(k: u32, s: &Scalar) -> Scalar {
    assert!(k >= 1, "deformed integers start at k = 1");
    let mut acc = s.one_like();
    for _ in 1..k {
        acc = &(&acc * s) + &s.one_like();
    }
    acc
}

/// `[n]_s! = [1]_s [2]_s … [n]_s`; the empty product is 1.
pub fn deformed_factorial(n: u32, s: &Scalar) -> Scalar {
    (1..=n).fold(s.one_like(), |acc, k| &acc * &deformed_integer(k, s))
}

/// `[k]_s` as a polynomial in `s`.
pub fn deformed_integer_poly(k: usize) -> SPolynomial {
    SPolynomial::new(vec![BigRational::one(); k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(deformed_integer(3, &Scalar::int(2)), Scalar::int(7));
        assert_eq!(deformed_integer(4, &Scalar::int(1)), Scalar::int(4));
        assert_eq!(deformed_integer(2, &Scalar::ratio(5, 2)), Scalar::ratio(7, 2));
        assert_eq!(deformed_factorial(0, &Scalar::int(3)), Scalar::int(1));
        assert_eq!(deformed_factorial(3, &Scalar::int(2)), Scalar::int(21));
        assert_eq!(deformed_factorial(2, &Scalar::int(1)), Scalar::int(2));
    }

    #[test]
    fn float_mode_is_preserved() {
        let v = deformed_integer(3, &Scalar::float(2.0));
        assert_eq!(v, Scalar::float(7.0));
    }
}
