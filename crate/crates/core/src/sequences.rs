//! Fibonacci, Lucas, Pell, and Fibonacci k-section numbers, their
//! convolutions, and the Chebyshev-derivative route to the same values.
//!
//! The s-fold convolution of a sequence `a` is
//!
//! ```text
//!   a_N^(0) = a_N,    a_N^(s) = sum_{j=0}^{N-1} a_{j+1} a_{N-j}^(s-1),
//! ```
//!
//! and for the Fibonacci / Pell / k-section families these convolved numbers
//! equal scaled Chebyshev-U derivatives evaluated at a fixed Gaussian-rational
//! point (`i/2`, `i`, `i*L_k/2` or `L_k/2`), up to a power of `-i`.
//! [`convolved_via_chebyshev`] computes that route and treats any nonzero
//! imaginary residue or non-integer result as a hard error: the identity is
//! exact, so a residue is a bug detector, not noise.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chebpoly::scaled_deriv_poly;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, GaussianRational};

/// The base sequence families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Fibonacci,
    Lucas,
    Pell,
    /// k-section of the Fibonacci sequence, `F_{Nk}/F_k`; `k = 1` coincides
    /// with the Fibonacci numbers.
    PhiSection(u32),
}

impl SequenceKind {
    /// Seeds `(x_1, x_2)` and recurrence coefficients `(p, q)` of
    /// `x_{N+2} = p x_{N+1} + q x_N`.
    fn recurrence(self) -> (BigInt, BigInt, BigInt, BigInt) {
        match self {
            SequenceKind::Fibonacci => (1.into(), 1.into(), 1.into(), 1.into()),
            SequenceKind::Lucas => (1.into(), 3.into(), 1.into(), 1.into()),
            SequenceKind::Pell => (1.into(), 2.into(), 2.into(), 1.into()),
            SequenceKind::PhiSection(k) => {
                assert!(k >= 1, "k-section requires k >= 1");
                let lk = lucas_for(k);
                let q = if k % 2 == 0 { -BigInt::one() } else { BigInt::one() };
                (BigInt::one(), lk.clone(), lk, q)
            }
        }
    }
}

/// First `count` terms (`x_1 .. x_count`) of a base sequence.
pub fn base_terms(kind: SequenceKind, count: u32) -> Vec<BigInt> {
    let (x1, x2, p, q) = kind.recurrence();
    let mut terms = Vec::with_capacity(count as usize);
    if count >= 1 {
        terms.push(x1);
    }
    if count >= 2 {
        terms.push(x2);
    }
    for n in 2..count as usize {
        let next = &p * &terms[n - 1] + &q * &terms[n - 2];
        terms.push(next);
    }
    terms
}

/// N-th term of a base sequence, `N >= 1`.
pub fn base_term(kind: SequenceKind, n: u32) -> BigInt {
    assert!(n >= 1, "sequence index starts at 1");
    base_terms(kind, n).pop().unwrap()
}

/// N-th Lucas number.
pub fn lucas_for(k: u32) -> BigInt {
    base_term(SequenceKind::Lucas, k)
}

/// k-section of the Fibonacci sequence in closed form over Lucas powers:
/// `sum_j (-1)^((k-1)j) C(N-1-j, j) L_k^(N-1-2j)`.
pub fn phi_explicit(n: u32, k: u32) -> BigInt {
    assert!(n >= 1 && k >= 1);
    let lk = lucas_for(k);
    let n = n as u64;
    let mut acc = BigInt::zero();
    for j in 0..=((n - 1) / 2) {
        let term = binomial(n - 1 - j, j as i64) * lk.pow((n - 1 - 2 * j) as u32);
        if (k as u64 - 1) * j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Addresses one convolved number `a_N^(s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConvolvedId {
    pub kind: SequenceKind,
    pub n: u32,
    pub s: u32,
}

impl ConvolvedId {
    pub fn new(kind: SequenceKind, n: u32, s: u32) -> Self {
        assert!(n >= 1, "sequence index starts at 1");
        ConvolvedId { kind, n, s }
    }
}

/// Memoized convolution table for one sequence kind. Identity sweeps revisit
/// entries heavily, so the whole (N, s) rectangle is kept.
pub struct ConvolutionTable {
    kind: SequenceKind,
    /// `rows[s][n-1] = a_n^(s)`; row 0 is the base sequence.
    rows: Vec<Vec<BigInt>>,
}

impl ConvolutionTable {
    pub fn new(kind: SequenceKind) -> Self {
        ConvolutionTable {
            kind,
            rows: vec![Vec::new()],
        }
    }

    fn ensure(&mut self, n: u32, s: u32) {
        if self.rows[0].len() < n as usize {
            self.rows[0] = base_terms(self.kind, n);
            // base row grew; convolved rows must be rebuilt at the new width
            self.rows.truncate(1);
        }
        let width = self.rows[0].len();
        while self.rows.len() <= s as usize {
            let base = &self.rows[0];
            let prev = self.rows.last().unwrap();
            let mut row = Vec::with_capacity(width);
            for m in 1..=width {
                let mut acc = BigInt::zero();
                for j in 0..m {
                    acc += &base[j] * &prev[m - 1 - j];
                }
                row.push(acc);
            }
            self.rows.push(row);
        }
    }

    pub fn term(&mut self, n: u32, s: u32) -> BigInt {
        assert!(n >= 1);
        self.ensure(n, s);
        self.rows[s as usize][n as usize - 1].clone()
    }
}

/// Convolved number by the defining dynamic program.
pub fn convolved_term(id: ConvolvedId) -> BigInt {
    ConvolutionTable::new(id.kind).term(id.n, id.s)
}

/// The Gaussian-rational evaluation point and `-i` phase exponent used by
/// the Chebyshev-derivative route for a convolvable kind.
fn chebyshev_route(kind: SequenceKind) -> Result<(GaussianRational, i64)> {
    let half = GaussianRational::ratio(1, 2);
    match kind {
        SequenceKind::Fibonacci => Ok((&GaussianRational::i() * &half, 1)),
        SequenceKind::Pell => Ok((GaussianRational::i(), 1)),
        SequenceKind::PhiSection(k) => {
            let lk = GaussianRational::from_bigint(lucas_for(k));
            let half_lk = &half * &lk;
            if k % 2 == 1 {
                Ok((&GaussianRational::i() * &half_lk, 1))
            } else {
                Ok((half_lk, 0))
            }
        }
        SequenceKind::Lucas => Err(Error::domain(
            "no Chebyshev-derivative route is defined for Lucas numbers",
        )),
    }
}

/// Convolved number via the scaled Chebyshev derivative: evaluates
/// `P(N,s)` at the kind's fixed point, applies the `(-i)^(N-1)` phase where
/// required, and demands an exactly integer result.
pub fn convolved_via_chebyshev(id: ConvolvedId) -> Result<BigInt> {
    let (point, phase_on) = chebyshev_route(id.kind)?;
    let value = scaled_deriv_poly(id.n, id.s).eval_exact(&point);
    let phased = if phase_on == 1 {
        &GaussianRational::neg_i_pow(id.n as i64 - 1) * &value
    } else {
        value
    };
    phased.expect_integer(&format!(
        "chebyshev route for {:?} N={} s={}",
        id.kind, id.n, id.s
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_sequences() {
        let fib: Vec<BigInt> = base_terms(SequenceKind::Fibonacci, 6);
        assert_eq!(fib, [1, 1, 2, 3, 5, 8].map(BigInt::from));
        assert_eq!(base_term(SequenceKind::Lucas, 2), BigInt::from(3));
        let pell: Vec<BigInt> = base_terms(SequenceKind::Pell, 6);
        assert_eq!(pell, [1, 2, 5, 12, 29, 70].map(BigInt::from));
        // Phi_{3,2} = F_6 / F_2 = 8
        assert_eq!(base_term(SequenceKind::PhiSection(2), 3), BigInt::from(8));
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas_for(1), BigInt::one());
        assert_eq!(lucas_for(4), BigInt::from(7));
        assert_eq!(lucas_for(6), BigInt::from(18));
    }

    #[test]
    fn phi_explicit_examples() {
        for k in 1..=6 {
            assert_eq!(phi_explicit(1, k), BigInt::one());
            assert_eq!(phi_explicit(2, k), lucas_for(k));
        }
        // Phi_{4,3} = F_12/F_3 = 144/2 = 72
        assert_eq!(phi_explicit(4, 3), BigInt::from(72));
    }

    #[test]
    fn phi_three_routes_agree() {
        // explicit Lucas-power formula == recurrence == F_{Nk}/F_k
        let fib = base_terms(SequenceKind::Fibonacci, 220);
        for k in 1..=10u32 {
            for n in 1..=20u32 {
                let by_recurrence = base_term(SequenceKind::PhiSection(k), n);
                let by_formula = phi_explicit(n, k);
                let quotient = &fib[(n * k) as usize - 1] / &fib[k as usize - 1];
                assert_eq!(by_recurrence, by_formula, "k={k} N={n}");
                assert_eq!(by_recurrence, quotient, "k={k} N={n}");
            }
        }
    }

    #[test]
    fn phi_section_k1_is_fibonacci() {
        let mut phi = ConvolutionTable::new(SequenceKind::PhiSection(1));
        let mut fib = ConvolutionTable::new(SequenceKind::Fibonacci);
        for n in 1..=12 {
            for s in 0..=6 {
                assert_eq!(phi.term(n, s), fib.term(n, s));
            }
        }
    }

    #[test]
    fn convolved_small_closed_forms() {
        let mut fib = ConvolutionTable::new(SequenceKind::Fibonacci);
        let mut pell = ConvolutionTable::new(SequenceKind::Pell);
        for s in 0..=40u32 {
            let sb = BigInt::from(s);
            // F_2^(s) = s+1; F_3^(s) = (s+1)(s+4)/2; F_5^(s) = (s+1)(s+2)(s+4)(s+15)/24
            assert_eq!(fib.term(2, s), &sb + 1);
            assert_eq!(fib.term(3, s), (&sb + 1) * (&sb + 4) / 2);
            assert_eq!(fib.term(5, s), (&sb + 1) * (&sb + 2) * (&sb + 4) * (&sb + 15) / 24);
            // P_2^(s) = 2(s+1); P_5^(s) = (s+1)(s+2)(4s^2+40s+87)/6
            assert_eq!(pell.term(2, s), (&sb + 1) * 2);
            assert_eq!(
                pell.term(5, s),
                (&sb + 1) * (&sb + 2) * (&sb * &sb * 4 + &sb * 40 + 87) / 6
            );
        }
        assert_eq!(fib.term(3, 2), BigInt::from(9));
        assert_eq!(pell.term(2, 3), BigInt::from(8));
    }

    #[test]
    fn convolved_phi_closed_form() {
        // Phi_{3,k}^(s) = (s+1)(s+2) L_k^2 / 2 - (-1)^k (s+1) and
        // Phi_{4,k}^(s) = (s+1)(s+2)(s+3) L_k^3 / 6 - (-1)^k (s+1)(s+2) L_k;
        // both follow from the scaled-derivative polynomials at L_k/2 resp.
        // i L_k/2 and reduce to the convolved Fibonacci values at k = 1.
        for k in 1..=8u32 {
            let lk = lucas_for(k);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let mut table = ConvolutionTable::new(SequenceKind::PhiSection(k));
            for s in 0..=40u32 {
                let sb = BigInt::from(s);
                let expected3 =
                    (&sb + 1) * (&sb + 2) * lk.pow(2) / 2 - (&sb + 1) * sign;
                assert_eq!(table.term(3, s), expected3, "N=3 k={k} s={s}");
                let expected4 = (&sb + 1) * (&sb + 2) * (&sb + 3) * lk.pow(3) / 6
                    - (&sb + 1) * (&sb + 2) * &lk * sign;
                assert_eq!(table.term(4, s), expected4, "N=4 k={k} s={s}");
            }
        }
        // Phi_{3,2}^(1) with L_2 = 3: 2*3*9/2 - 2 = 25
        assert_eq!(
            convolved_term(ConvolvedId::new(SequenceKind::PhiSection(2), 3, 1)),
            BigInt::from(25)
        );
    }

    #[test]
    fn chebyshev_route_spot_values() {
        let f = |n, s| convolved_via_chebyshev(ConvolvedId::new(SequenceKind::Fibonacci, n, s));
        let p = |n, s| convolved_via_chebyshev(ConvolvedId::new(SequenceKind::Pell, n, s));
        assert_eq!(f(5, 0).unwrap(), BigInt::from(5));
        assert_eq!(f(4, 1).unwrap(), BigInt::from(10));
        assert_eq!(p(3, 0).unwrap(), BigInt::from(5));
        assert!(convolved_via_chebyshev(ConvolvedId::new(SequenceKind::Lucas, 3, 0)).is_err());
    }

    #[test]
    fn chebyshev_route_matches_convolution_dp() {
        for kind in [SequenceKind::Fibonacci, SequenceKind::Pell] {
            let mut table = ConvolutionTable::new(kind);
            for n in 1..=12u32 {
                for s in 0..=10u32 {
                    let id = ConvolvedId::new(kind, n, s);
                    assert_eq!(convolved_via_chebyshev(id).unwrap(), table.term(n, s));
                }
            }
        }
        for k in 1..=5u32 {
            let kind = SequenceKind::PhiSection(k);
            let mut table = ConvolutionTable::new(kind);
            for n in 1..=8u32 {
                for s in 0..=6u32 {
                    let id = ConvolvedId::new(kind, n, s);
                    assert_eq!(convolved_via_chebyshev(id).unwrap(), table.term(n, s), "k={k}");
                }
            }
        }
    }
}
