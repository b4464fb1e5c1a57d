//! Chebyshev polynomials of the second kind, their order-coupled scaled
//! derivatives, and the Gegenbauer alias — all over exact integer
//! coefficients.
//!
//! The central object is
//!
//! ```text
//!   P(N,s)(z) = d^s/dz^s U_{N+s-1}(z) / (2^s s!)
//!             = sum_j (-1)^j a(N,s,j) z^(N-1-2j),   j = 0 .. floor((N-1)/2),
//!   a(N,s,j) = C(N-1+s-j, j) C(N-1+s-2j, s) 2^(N-1-2j),
//! ```
//!
//! a degree-(N-1) polynomial whose exponents all share the parity of N-1.
//! The coefficient formula is the constructor; s-fold symbolic
//! differentiation of `U_{N+s-1}` serves as the independent test oracle.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{binomial, ComplexDouble, GaussianRational};

/// Dense polynomial with big-integer coefficients, indexed by degree.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// `c * z^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^d` (zero outside the stored range).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// First formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, c)| c * BigInt::from(d))
            .collect();
        IntPolynomial::new(coeffs)
    }

    /// s-fold formal derivative, exact. `s = 0` is the identity.
    pub fn nth_derivative(&self, s: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..s {
            p = p.derivative();
            if p.is_zero() {
                break;
            }
        }
        p
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at an exact Gaussian-rational point.
    pub fn eval_exact(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &GaussianRational::from_bigint(c.clone());
        }
        acc
    }

    /// Horner evaluation at a real rational point.
    pub fn eval_rational(&self, z: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Horner evaluation in complex doubles. Coefficients are converted
    /// per-term; fine for the desk-scale degrees this crate works at.
    pub fn eval_complex(&self, z: ComplexDouble) -> ComplexDouble {
        let mut acc = ComplexDouble::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            let cf = BigRational::from_integer(c.clone());
            acc = acc * z + num_traits::ToPrimitive::to_f64(&cf).unwrap_or(f64::NAN);
        }
        acc
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending-degree rendering, e.g. `16z^4-12z^2+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = c.abs();
            if d == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if d == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{d}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Identifies the scaled derivative `P(N,s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaledDerivativeId {
    pub n: u32,
    pub s: u32,
}

impl ScaledDerivativeId {
    pub fn new(n: u32, s: u32) -> Self {
        assert!(n >= 1, "scaled derivative requires N >= 1");
        ScaledDerivativeId { n, s }
    }

    pub fn polynomial(&self) -> IntPolynomial {
        scaled_deriv_poly(self.n, self.s)
    }
}

/// Chebyshev polynomial of the second kind, for any integer index.
///
/// Nonnegative indices use the explicit alternating-binomial expansion in
/// `2z`; negative indices follow `U_{-N} = -U_{N-2}` (so `U_{-1} = 0`).
pub fn u_poly(n: i64) -> IntPolynomial {
    if n == -1 {
        return IntPolynomial::zero();
    }
    if n < 0 {
        return -&u_poly(-n - 2);
    }
    let n = n as u64;
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    for j in 0..=(n / 2) {
        let deg = (n - 2 * j) as usize;
        let c = binomial(n - j, j as i64) * (BigInt::one() << deg);
        coeffs[deg] = if j % 2 == 0 { c } else { -c };
    }
    IntPolynomial::new(coeffs)
}

/// The scaled derivative `P(N,s)` built directly from its coefficient
/// formula — O(N) binomials, no factorial division.
pub fn scaled_deriv_poly(n: u32, s: u32) -> IntPolynomial {
    assert!(n >= 1, "scaled derivative requires N >= 1");
    let (n, s) = (n as u64, s as u64);
    let mut coeffs = vec![BigInt::zero(); n as usize];
    for j in 0..=((n - 1) / 2) {
        let deg = (n - 1 - 2 * j) as usize;
        let c = binomial(n - 1 + s - j, j as i64)
            * binomial(n - 1 + s - 2 * j, s as i64)
            * (BigInt::one() << deg);
        coeffs[deg] = if j % 2 == 0 { c } else { -c };
    }
    IntPolynomial::new(coeffs)
}

/// Gegenbauer polynomial `C_n^(alpha)` for integer `alpha >= 1`; by
/// definition the scaled derivative with `N = n + 1`, `s = alpha - 1`.
pub fn gegenbauer_poly(n: u32, alpha: u32) -> IntPolynomial {
    assert!(alpha >= 1, "gegenbauer index must satisfy alpha >= 1");
    scaled_deriv_poly(n + 1, alpha - 1)
}

/// `U_n(x)` at a complex point by the three-term recurrence
/// `U_{k+1} = 2x U_k - U_{k-1}`; negative indices via `U_{-n} = -U_{n-2}`.
pub fn u_value_complex(n: i64, x: ComplexDouble) -> ComplexDouble {
    if n == -1 {
        return ComplexDouble::new(0.0, 0.0);
    }
    if n < 0 {
        return -u_value_complex(-n - 2, x);
    }
    let mut prev = ComplexDouble::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let two_x = 2.0 * x;
    let mut cur = two_x;
    for _ in 1..n {
        let next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::factorial;

    /// Three-term recurrence oracle: U_{k+1} = 2z U_k - U_{k-1}.
    fn u_poly_recurrence(n: u32) -> IntPolynomial {
        let two_z = IntPolynomial::from_i64(&[0, 2]);
        let mut prev = IntPolynomial::one();
        let mut cur = two_z.clone();
        if n == 0 {
            return prev;
        }
        for _ in 1..n {
            let next = &(&two_z * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    #[test]
    fn u_poly_small_cases() {
        assert_eq!(u_poly(0), IntPolynomial::one());
        assert_eq!(u_poly(4), IntPolynomial::from_i64(&[1, 0, -12, 0, 16]));
        // negative indices: U_{-1} = 0, U_{-3} = -U_1 = -2z
        assert!(u_poly(-1).is_zero());
        assert_eq!(u_poly(-3), IntPolynomial::from_i64(&[0, -2]));
    }

    #[test]
    fn u_poly_matches_recurrence_oracle() {
        for n in 0..=30 {
            assert_eq!(u_poly(n as i64), u_poly_recurrence(n), "U_{n}");
        }
    }

    #[test]
    fn negative_index_consistency() {
        assert!(u_poly(-1).is_zero());
        for n in 2..=20i64 {
            assert_eq!(u_poly(-n), -&u_poly(n - 2));
        }
    }

    #[test]
    fn scaled_deriv_examples() {
        // N = 2: 2z(s+1); at s = 3 this is 8z
        assert_eq!(scaled_deriv_poly(2, 3), IntPolynomial::from_i64(&[0, 8]));
        // s = 0 reduces to the plain polynomial
        assert_eq!(scaled_deriv_poly(3, 0), u_poly(2));
        assert_eq!(scaled_deriv_poly(3, 0), IntPolynomial::from_i64(&[-1, 0, 4]));
        // N = 4, s = 1: differentiate U_4 once, divide by 2
        assert_eq!(scaled_deriv_poly(4, 1), IntPolynomial::from_i64(&[0, -12, 0, 32]));
    }

    #[test]
    fn scaled_deriv_matches_symbolic_derivative_oracle() {
        for n in 1..=25u32 {
            for s in 0..=25u32 {
                let direct = scaled_deriv_poly(n, s);
                let factor = factorial(s as u64) * (BigInt::one() << s);
                let oracle = u_poly((n + s) as i64 - 1).nth_derivative(s);
                assert_eq!(direct.scale(&factor), oracle, "N={n} s={s}");
            }
        }
    }

    #[test]
    fn parity_and_degree_and_leading_coefficient() {
        for n in 1..=20u32 {
            for s in 0..=12u32 {
                let p = scaled_deriv_poly(n, s);
                assert_eq!(p.degree(), Some(n as usize - 1));
                for (d, c) in p.coeffs().iter().enumerate() {
                    if d % 2 != (n as usize - 1) % 2 {
                        assert!(c.is_zero(), "parity violated at N={n} s={s} deg={d}");
                    }
                }
                let lead = binomial(n as u64 - 1 + s as u64, s as i64)
                    * (BigInt::one() << (n - 1));
                assert_eq!(p.coeff(n as usize - 1), lead);
            }
        }
    }

    #[test]
    fn derivative_vanishes_below_order() {
        for j in 0..12u32 {
            for s in (j + 1)..=12 {
                assert!(u_poly(j as i64).nth_derivative(s).is_zero());
            }
        }
    }

    #[test]
    fn symbolic_derivative_basics() {
        let p = IntPolynomial::from_i64(&[1, 0, -12, 0, 16]);
        assert_eq!(p.derivative(), IntPolynomial::from_i64(&[0, -24, 0, 64]));
        assert_eq!(p.nth_derivative(0), p);
        assert!(IntPolynomial::from_i64(&[0, 2]).nth_derivative(2).is_zero());
    }

    #[test]
    fn eval_exact_fibonacci_point() {
        // U_4(i/2) = 5 (= F_5 after the trivial (-i)^4 phase)
        let z = GaussianRational::ratio_complex(0, 1, 1, 2);
        assert_eq!(u_poly(4).eval_exact(&z), GaussianRational::from_int(5));
        // U_2(i) = 4i^2 - 1 = -5
        assert_eq!(
            u_poly(2).eval_exact(&GaussianRational::i()),
            GaussianRational::from_int(-5)
        );
        assert!(IntPolynomial::zero().eval_exact(&z).is_zero());
    }

    #[test]
    fn gegenbauer_alias() {
        for alpha in 1..=6u32 {
            assert_eq!(gegenbauer_poly(0, alpha), IntPolynomial::one());
        }
        assert_eq!(gegenbauer_poly(1, 3), IntPolynomial::from_i64(&[0, 6]));
        assert_eq!(gegenbauer_poly(2, 1), u_poly(2));
        for n in 0..=10u32 {
            for alpha in 1..=8u32 {
                assert_eq!(gegenbauer_poly(n, alpha), scaled_deriv_poly(n + 1, alpha - 1));
            }
        }
    }

    #[test]
    fn display_rendering() {
        assert_eq!(u_poly(4).to_string(), "16z^4-12z^2+1");
        assert_eq!(u_poly(1).to_string(), "2z");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[-1, 1]).to_string(), "z-1");
    }

    #[test]
    fn scaled_derivative_id_delegates() {
        let id = ScaledDerivativeId::new(4, 1);
        assert_eq!(id.polynomial(), scaled_deriv_poly(4, 1));
    }

    #[test]
    fn complex_recurrence_matches_polynomial_evaluation() {
        let x = ComplexDouble::new(0.3, -0.7);
        for n in -6..=12i64 {
            let via_poly = u_poly(n).eval_complex(x);
            let via_recurrence = u_value_complex(n, x);
            assert!(
                (via_poly - via_recurrence).norm() < 1e-10 * via_poly.norm().max(1.0),
                "U_{n}"
            );
        }
    }
}
