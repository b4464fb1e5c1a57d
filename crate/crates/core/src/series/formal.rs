//! Truncated formal power series over Gaussian rationals, used for the
//! generating-function cross checks: expanding the rational closed forms as
//! series in `z` and reproducing sequence convolutions from
//! `z / (1 - 2tz + z^2)^(s+1)` at `t = i`.

use num_bigint::BigInt;
use num_traits::One;

use crate::chebpoly::scaled_deriv_poly;
use crate::exactnum::{binomial, GaussianRational};
use crate::sequences::{ConvolutionTable, SequenceKind};

/// Power series in `z` tracked exactly through order `K` (coefficients of
/// `z^0 .. z^K` inclusive).
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries {
    coeffs: Vec<GaussianRational>,
}

impl FormalSeries {
    pub fn zero(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![GaussianRational::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<GaussianRational>) -> Self {
        assert!(!coeffs.is_empty());
        FormalSeries { coeffs }
    }

    /// Highest tracked power of `z`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^k`; zero beyond the tracked order.
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn set_coeff(&mut self, k: usize, value: GaussianRational) {
        self.coeffs[k] = value;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        FormalSeries { coeffs }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `c * z^k * self`, truncated at the original order.
    pub fn mul_monomial(&self, c: &GaussianRational, k: usize) -> Self {
        let mut out = FormalSeries::zero(self.order());
        for d in 0..=self.order().saturating_sub(k) {
            out.coeffs[d + k] = &self.coeffs[d] * c;
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = FormalSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    /// Reciprocal of a series with nonzero constant term, to the same order:
    /// `c_0 = 1/a_0`, `c_n = -(1/a_0) sum_{k=1..n} a_k c_{n-k}`.
    pub fn reciprocal(&self) -> Self {
        let a0 = self.coeff(0);
        assert!(!a0.is_zero(), "reciprocal requires a unit constant term");
        let inv_a0 = a0.inverse().expect("nonzero by the assert above");
        let mut out = FormalSeries::zero(self.order());
        out.coeffs[0] = inv_a0.clone();
        for m in 1..=self.order() {
            let mut acc = GaussianRational::zero();
            for k in 1..=m {
                let ak = self.coeff(k);
                if ak.is_zero() {
                    continue;
                }
                acc = &acc + &(&ak * &out.coeffs[m - k]);
            }
            out.coeffs[m] = -&(&inv_a0 * &acc);
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = FormalSeries::zero(self.order());
        acc.coeffs[0] = GaussianRational::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `1/(1-z)^m` expanded to the requested order: coefficients
/// `C(m-1+k, k)`, all exact integers.
fn geometric_power(m: u64, order: usize) -> FormalSeries {
    let coeffs = (0..=order)
        .map(|k| GaussianRational::from_bigint(binomial(m - 1 + k as u64, k as i64)))
        .collect();
    FormalSeries { coeffs }
}

/// The ascending-weight rational closed form expanded as a power series in
/// `z` through order `K`. Term by term:
/// `sum_j (-1)^j C(N-1-j, j) 2^(N-1-2j) z^(N-1-2j) / (1-z)^(N-j)`.
pub fn expand_closed_form(n: u32, order: usize) -> FormalSeries {
    let n = n as u64;
    assert!(n >= 1);
    let mut acc = FormalSeries::zero(order);
    for j in 0..=((n - 1) / 2) {
        let c = binomial(n - 1 - j, j as i64) * (BigInt::one() << (n - 1 - 2 * j));
        let c = if j % 2 == 0 { c } else { -c };
        let block = geometric_power(n - j, order)
            .mul_monomial(&GaussianRational::from_bigint(c), (n - 1 - 2 * j) as usize);
        acc = acc.add(&block);
    }
    acc
}

/// The series side collected by powers of `z`: the coefficient of `z^m` in
/// `sum_s z^s P(N,s)(z)` is `sum_{s<=m} [z^(m-s)] P(N,s)`.
pub fn collect_series_lhs(n: u32, order: usize) -> FormalSeries {
    let mut acc = FormalSeries::zero(order);
    for s in 0..=order {
        let p = scaled_deriv_poly(n, s as u32);
        for d in 0..=p.degree().unwrap_or(0) {
            let m = s + d;
            if m > order {
                break;
            }
            let c = GaussianRational::from_bigint(p.coeff(d));
            acc.coeffs[m] = &acc.coeffs[m] + &c;
        }
    }
    acc
}

/// Generating-function check for the convolved Pell route: the expansion of
/// `z / (1 - 2tz + z^2)^(s+1)` at `t = i` must have `[z^N] = i^(N-1) P_N^(s)`
/// for all `N <= k_max`, with the right side supplied by the convolution
/// dynamic program.
pub fn pell_gf_check(k_max: u32, s: u32) -> bool {
    let order = k_max as usize;
    // 1 - 2iz + z^2
    let denom = FormalSeries::from_coeffs(
        (0..=order)
            .map(|k| match k {
                0 => GaussianRational::one(),
                1 => &GaussianRational::from_int(-2) * &GaussianRational::i(),
                2 => GaussianRational::one(),
                _ => GaussianRational::zero(),
            })
            .collect(),
    );
    let expansion = denom.pow(s as usize + 1).reciprocal();
    let shifted = expansion.mul_monomial(&GaussianRational::one(), 1);
    let mut pell = ConvolutionTable::new(SequenceKind::Pell);
    for n in 1..=k_max {
        let expected = &GaussianRational::i().pow(n as i64 - 1).expect("nonzero base")
            * &GaussianRational::from_bigint(pell.term(n, s));
        if shifted.coeff(n as usize) != expected {
            return false;
        }
    }
    true
}
