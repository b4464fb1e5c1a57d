//! Exact scalar arithmetic: big integers, big rationals, Gaussian rationals,
//! plus the complex-double gamma function.
//!
//! `BigRational` (from `num-rational`) already maintains the canonical form
//! this crate relies on: the denominator is positive and coprime to the
//! numerator after every operation, and zero is `0/1`. [`GaussianRational`]
//! builds the field `Q(i)` componentwise on top of it.

mod gamma;
mod gaussian;

pub use gamma::complex_gamma;
pub use gaussian::GaussianRational;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Complex number with 64-bit float components.
pub type ComplexDouble = num_complex::Complex64;

use num_traits::{One, Signed, Zero};

/// Binomial coefficient `C(n, k)` as a big integer.
///
/// Out-of-range `k` (negative or greater than `n`) yields zero. A negative
/// upper index is unrepresentable by the signature; the gamma-function route
/// covers every generalized case this crate needs.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Exact rational from an `f64`; panics on NaN or infinity.
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float required")
}

/// Round-to-nearest conversion of a big rational to `f64`.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).expect("rational out of f64 range")
}

/// Smallest power of two `2^-k` with `2^-k <= eps`, as an exact rational.
/// Helper for turning float tolerances into exact comparisons.
pub fn pow2_rational(exp: i64) -> BigRational {
    let one = BigInt::one();
    if exp >= 0 {
        BigRational::from_integer(one << exp as usize)
    } else {
        BigRational::new(one.clone(), one << (-exp) as usize)
    }
}

/// True iff `|a| < bound` for rationals, compared exactly.
pub fn abs_lt(a: &BigRational, bound: &BigRational) -> bool {
    a.abs() < *bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, -1), BigInt::zero());
        assert_eq!(binomial(7, 8), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_against_pascal_triangle_oracle() {
        // Pascal triangle built by repeated addition only.
        let mut row: Vec<BigInt> = vec![BigInt::one()];
        for n in 1..=200u64 {
            let mut next = vec![BigInt::one()];
            for i in 1..n as usize {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(BigInt::one());
            row = next;
            if n == 12 {
                assert_eq!(row[5], BigInt::from(792));
            }
            for (k, v) in row.iter().enumerate() {
                assert_eq!(binomial(n, k as i64), *v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn factorial_matches_gamma_shift() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(12), BigInt::from(479001600u64));
    }

    #[test]
    fn rational_canonical_form_is_idempotent() {
        let r = BigRational::new(BigInt::from(-6), BigInt::from(-8));
        assert_eq!(r.numer(), &BigInt::from(3));
        assert_eq!(r.denom(), &BigInt::from(4));
        let again = BigRational::new(r.numer().clone(), r.denom().clone());
        assert_eq!(r, again);
    }

    #[test]
    fn rational_to_f64_round_trips_dyadics() {
        let r = BigRational::new(BigInt::from(-5), BigInt::from(32));
        assert_eq!(rational_to_f64(&r), -5.0 / 32.0);
        let back = rational_from_f64(-5.0 / 32.0);
        assert_eq!(back, r);
    }

    #[test]
    fn pow2_rational_both_signs() {
        assert_eq!(pow2_rational(3).to_f64().unwrap(), 8.0);
        assert_eq!(pow2_rational(-40).to_f64().unwrap(), 2f64.powi(-40));
    }
}
