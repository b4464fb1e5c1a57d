//! Gaussian rationals: the field `Q(i)` with exact componentwise arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::ComplexDouble;

/// A complex number `re + im*i` with exact rational components.
///
/// Both components stay in canonical reduced form because every operation is
/// delegated to `BigRational`. Division by a nonzero element is exact, so the
/// type is a field containing every argument the series machinery needs
/// (`i/2`, `i`, `L_k/2`, `i*L_k/2`, `-1`, ...).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    /// `a/b` as a real Gaussian rational; panics if `b == 0`.
    pub fn ratio(a: i64, b: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
    }

    /// `(a/b) + (c/d) i`; panics if `b == 0` or `d == 0`.
    pub fn ratio_complex(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True iff the value is a (real) integer.
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, the square of the complex modulus.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact division; the only failure mode is a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Ok(GaussianRational {
            re: num.re / &d,
            im: num.im / &d,
        })
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inverse(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Integer power by binary exponentiation. Negative exponents require a
    /// nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            if self.is_zero() {
                return Err(Error::ZeroToNegativePower);
            }
            return self.inverse()?.pow(-exp);
        }
        let mut base = self.clone();
        let mut e = exp as u64;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// `(-i)^e` — the phase factor relating Chebyshev evaluations at
    /// imaginary arguments to integer sequences.
    pub fn neg_i_pow(e: i64) -> Self {
        let r = e.rem_euclid(4);
        match r {
            0 => Self::one(),
            1 => -Self::i(),
            2 => -Self::one(),
            _ => Self::i(),
        }
    }

    /// Round-to-nearest conversion per component.
    pub fn to_complex(&self) -> ComplexDouble {
        ComplexDouble::new(
            self.re.to_f64().expect("re out of f64 range"),
            self.im.to_f64().expect("im out of f64 range"),
        )
    }

    /// The real part, provided the value is real.
    pub fn expect_real(&self, context: &str) -> Result<BigRational> {
        if self.is_real() {
            Ok(self.re.clone())
        } else {
            Err(Error::identity(format!(
                "{context}: expected a real value, got {self}"
            )))
        }
    }

    /// The value as a big integer, provided it is one.
    pub fn expect_integer(&self, context: &str) -> Result<BigInt> {
        if self.is_integer() {
            Ok(self.re.to_integer())
        } else {
            Err(Error::identity(format!(
                "{context}: expected an integer value, got {self}"
            )))
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical form `a/b+c/d*i`, collapsing zero parts and unit
    /// imaginary coefficients (`i`, `-i`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            if !self.re.is_zero() && self.im.is_positive() {
                out.push('+');
            }
            if self.im == BigRational::one() {
                out.push('i');
            } else if self.im == -BigRational::one() {
                out.push_str("-i");
            } else {
                out.push_str(&fmt_rational(&self.im));
                out.push_str("*i");
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One signed term of an exact literal: a rational, optionally times `i`.
fn parse_term(term: &str) -> Result<(BigRational, bool)> {
    let bad = || Error::Parse(format!("invalid exact literal term `{term}`"));
    let mut body = term.trim();
    let mut negative = false;
    if let Some(rest) = body.strip_prefix('+') {
        body = rest;
    } else if let Some(rest) = body.strip_prefix('-') {
        negative = true;
        body = rest;
    }
    let mut imaginary = false;
    let rewritten;
    if let Some(den) = body.strip_prefix("i/") {
        // `i/2` spelling: the unit sits in the numerator
        imaginary = true;
        rewritten = format!("1/{den}");
        body = &rewritten;
    } else if let Some(stripped) = body.strip_suffix('i') {
        imaginary = true;
        body = stripped.strip_suffix('*').unwrap_or(stripped).trim();
        if body.is_empty() {
            let one = if negative { -BigRational::one() } else { BigRational::one() };
            return Ok((one, true));
        }
    }
    // strip one optional layer of parentheses, then a possible inner sign
    let mut body = body
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(body)
        .trim();
    if let Some(rest) = body.strip_prefix('-') {
        negative = !negative;
        body = rest;
    }
    let (num_str, den_str) = match body.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (body, "1"),
    };
    let num = BigInt::from_str(num_str).map_err(|_| bad())?;
    let den = BigInt::from_str(den_str).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{term}`")));
    }
    let value = BigRational::new(num, den);
    Ok((if negative { -value } else { value }, imaginary))
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Parses the exact-literal grammar `(a/b)+(c/d)i` with optional parts,
    /// e.g. `5`, `-1/2`, `i`, `-i`, `3/4*i`, `1/2+3/4i`, `(4/5)-(2/5)i`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty exact literal".into()));
        }
        // split into at most two signed terms at a top-level +/- (not the
        // leading sign, not inside parentheses, not after '/' or '*')
        let chars: Vec<char> = s.chars().collect();
        let mut depth = 0i32;
        let mut split = None;
        for (idx, &c) in chars.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && idx > 0 => {
                    let prev = chars[idx - 1];
                    if prev != '/' && prev != '*' && prev != '+' && prev != '-' {
                        split = Some(idx);
                    }
                }
                _ => {}
            }
        }
        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        let mut assign = |(value, imaginary): (BigRational, bool)| -> Result<()> {
            let slot = if imaginary { &mut im } else { &mut re };
            if !slot.is_zero() {
                return Err(Error::Parse(format!("duplicate component in `{s}`")));
            }
            *slot = value;
            Ok(())
        };
        match split {
            Some(idx) => {
                assign(parse_term(&s[..idx])?)?;
                assign(parse_term(&s[idx..])?)?;
            }
            None => assign(parse_term(&s)?)?,
        }
        Ok(GaussianRational { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio_complex(a, b, c, d)
    }

    #[test]
    fn division_example_from_fib_series() {
        // 1 / (1 - i/2) = 4/5 + (2/5) i
        let one = GaussianRational::one();
        let den = &one - &g(0, 1, 1, 2);
        let q = one.checked_div(&den).unwrap();
        assert_eq!(q, g(4, 5, 2, 5));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, -GaussianRational::one());
        assert_eq!(i.pow(4).unwrap(), GaussianRational::one());
    }

    #[test]
    fn pow_edge_cases() {
        let half_i = g(0, 1, 1, 2);
        assert_eq!(half_i.pow(2).unwrap(), GaussianRational::ratio(-1, 4));
        assert_eq!(half_i.pow(0).unwrap(), GaussianRational::one());
        assert!(GaussianRational::zero().pow(-1).is_err());
        assert_eq!(
            GaussianRational::zero().checked_div(&GaussianRational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn neg_i_pow_cycle() {
        let mut acc = GaussianRational::one();
        for e in 0..8 {
            assert_eq!(GaussianRational::neg_i_pow(e), acc);
            acc = &acc * &(-GaussianRational::i());
        }
    }

    #[test]
    fn display_and_parse_forms() {
        for (text, value) in [
            ("0", GaussianRational::zero()),
            ("5", GaussianRational::from_int(5)),
            ("-1/2", GaussianRational::ratio(-1, 2)),
            ("i", GaussianRational::i()),
            ("-i", -GaussianRational::i()),
            ("4/5+2/5*i", g(4, 5, 2, 5)),
            ("4/5-2/5*i", g(4, 5, -2, 5)),
        ] {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<GaussianRational>().unwrap(), value);
        }
        // alternative spellings accepted on input
        assert_eq!("(1/2)+(3/4)i".parse::<GaussianRational>().unwrap(), g(1, 2, 3, 4));
        assert_eq!("1/2+3/4i".parse::<GaussianRational>().unwrap(), g(1, 2, 3, 4));
        assert_eq!("2i".parse::<GaussianRational>().unwrap(), g(0, 1, 2, 1));
        assert_eq!("i/2".parse::<GaussianRational>().unwrap(), g(0, 1, 1, 2));
        assert_eq!("-i/2".parse::<GaussianRational>().unwrap(), g(0, 1, -1, 2));
        assert_eq!("3/2+i/2".parse::<GaussianRational>().unwrap(), g(3, 2, 1, 2));
        assert!("1//2".parse::<GaussianRational>().is_err());
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("".parse::<GaussianRational>().is_err());
    }

    fn arb_gauss() -> impl Strategy<Value = GaussianRational> {
        (
            -50i64..50,
            1i64..20,
            -50i64..50,
            1i64..20,
        )
            .prop_map(|(a, b, c, d)| g(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms_spot_check(x in arb_gauss(), y in arb_gauss(), z in arb_gauss()) {
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &GaussianRational::one(), x.clone());
            if !y.is_zero() {
                let q = x.checked_div(&y).unwrap();
                prop_assert_eq!(&q * &y, x.clone());
            }
        }

        #[test]
        fn pow_is_additive_in_the_exponent(x in arb_gauss(), m in -30i64..30, n in -30i64..30) {
            prop_assume!(!x.is_zero());
            let lhs = x.pow(m + n).unwrap();
            let rhs = &x.pow(m).unwrap() * &x.pow(n).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn display_parse_round_trip(x in arb_gauss()) {
            let text = x.to_string();
            prop_assert_eq!(text.parse::<GaussianRational>().unwrap(), x);
        }
    }
}
