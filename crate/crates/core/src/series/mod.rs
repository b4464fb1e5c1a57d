//! Partial summation, closed forms, and certified truncation for the two
//! series families
//!
//! ```text
//!   S+(N, z) = sum_{s>=0} z^s    P(N,s)(z),   |z| < 1,
//!   S-(N, z) = sum_{s>=0} z^(-s) P(N,s)(z),   |z| > 1,
//! ```
//!
//! where `P(N,s)` is the scaled Chebyshev-U derivative. Both converge to
//! rational functions of `z`:
//!
//! ```text
//!   S+(N, z) = sum_j (-1)^j C(N-1-j, j) (2z)^(N-1-2j) / (1-z)^(N-j),
//!   S-(N, z) = sum_j (-1)^j C(N-1-j, j) 2^(N-1-2j) z^(2N-1-3j) / (z-1)^(N-j),
//! ```
//!
//! and equivalently to surd closed forms built from a single Chebyshev
//! polynomial at a transformed argument:
//!
//! ```text
//!   S+(N, z) = w^-(N+1) U_{N-1}(z / w),      w = sqrt(1 - z),
//!   S-(N, z) = v^(N+1)  U_{N-1}(z * v),      v = sqrt(z / (z - 1)).
//! ```
//!
//! The surd forms are invariant under the sign choice of the square root
//! (the prefactor flips by (-1)^(N+1), the polynomial by (-1)^(N-1)), so the
//! principal branch is used throughout. The rational forms are exact over
//! Gaussian rationals and remain the authority on the boundary `|z| = 1`
//! (see [`crate::continuation`]).

mod formal;

pub use formal::{collect_series_lhs, expand_closed_form, pell_gf_check, FormalSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chebpoly::{scaled_deriv_poly, u_value_complex};
use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, rational_from_f64, rational_to_f64, ComplexDouble, GaussianRational,
};
use crate::sequences::lucas_for;

/// Which weight family a series query uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Weights `z^s`; the series converges for `|z| < 1`.
    PosPower,
    /// Weights `z^(-s)`; the series converges for `|z| > 1`.
    NegPower,
}

/// One truncated series evaluation at an exact point.
#[derive(Clone, Debug)]
pub struct SeriesQuery {
    pub n: u32,
    pub z: GaussianRational,
    pub direction: Direction,
    /// Last summation index included (the sum has `truncation + 1` terms).
    pub truncation: u32,
}

impl SeriesQuery {
    pub fn new(n: u32, z: GaussianRational, direction: Direction, truncation: u32) -> Self {
        assert!(n >= 1);
        SeriesQuery {
            n,
            z,
            direction,
            truncation,
        }
    }

    /// Checks the modulus condition of the direction against `|z|^2`,
    /// compared exactly as rationals.
    pub fn check_domain(&self) -> Result<()> {
        let msq = self.z.norm_sqr();
        let one = BigRational::one();
        match self.direction {
            Direction::PosPower if msq < one => Ok(()),
            Direction::NegPower if msq > one => Ok(()),
            Direction::PosPower => Err(Error::domain(format!(
                "ascending weights need |z| < 1, got z = {}",
                self.z
            ))),
            Direction::NegPower => Err(Error::domain(format!(
                "descending weights need |z| > 1, got z = {}",
                self.z
            ))),
        }
    }
}

/// Exact partial sum `sum_{s=0}^{S} z^(+/-s) P(N,s)(z)`.
pub fn partial_sum(q: &SeriesQuery) -> Result<GaussianRational> {
    q.check_domain()?;
    let weight = match q.direction {
        Direction::PosPower => q.z.clone(),
        Direction::NegPower => q.z.inverse()?,
    };
    let mut acc = GaussianRational::zero();
    let mut wpow = GaussianRational::one();
    for s in 0..=q.truncation {
        let term = scaled_deriv_poly(q.n, s).eval_exact(&q.z);
        acc = &acc + &(&wpow * &term);
        if s < q.truncation {
            wpow = &wpow * &weight;
        }
    }
    Ok(acc)
}

/// Exact rational closed form of the series. Defined for every Gaussian
/// rational except the pole `z = 1`; on and beyond the circle of convergence
/// the value is the analytic continuation.
pub fn closed_form_rational(
    n: u32,
    z: &GaussianRational,
    direction: Direction,
) -> Result<GaussianRational> {
    if *z == GaussianRational::one() {
        return Err(Error::domain("closed form has a pole at z = 1"));
    }
    let n = n as u64;
    assert!(n >= 1);
    let one = GaussianRational::one();
    let mut acc = GaussianRational::zero();
    for j in 0..=((n - 1) / 2) {
        let c = binomial(n - 1 - j, j as i64);
        let c = if j % 2 == 0 { c } else { -c };
        let coeff = GaussianRational::from_bigint(c);
        let term = match direction {
            Direction::PosPower => {
                let two_z = &GaussianRational::from_int(2) * z;
                let num = &coeff * &two_z.pow((n - 1 - 2 * j) as i64)?;
                let den = (&one - z).pow((n - j) as i64)?;
                num.checked_div(&den)?
            }
            Direction::NegPower => {
                let pow2 = GaussianRational::from_bigint(BigInt::one() << (n - 1 - 2 * j));
                let num = &(&coeff * &pow2) * &z.pow((2 * n - 1 - 3 * j) as i64)?;
                let den = (z - &one).pow((n - j) as i64)?;
                num.checked_div(&den)?
            }
        };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Surd closed form in complex doubles, with an explicit square-root branch.
///
/// `flip_branch = false` is the principal branch; flipping is observationally
/// irrelevant (see the module docs) and exposed only so tests can prove that.
pub fn closed_form_surd_branch(
    n: u32,
    z: ComplexDouble,
    direction: Direction,
    flip_branch: bool,
) -> Result<ComplexDouble> {
    assert!(n >= 1);
    if z == ComplexDouble::new(1.0, 0.0) {
        return Err(Error::domain("closed form has a pole at z = 1"));
    }
    let m = n as i64 - 1;
    match direction {
        Direction::PosPower => {
            let mut w = (ComplexDouble::new(1.0, 0.0) - z).sqrt();
            if flip_branch {
                w = -w;
            }
            let prefactor = w.powi(-(n as i32 + 1));
            Ok(prefactor * u_value_complex(m, z / w))
        }
        Direction::NegPower => {
            if z == ComplexDouble::new(0.0, 0.0) {
                return Err(Error::domain(
                    "descending-weight closed form is undefined at z = 0",
                ));
            }
            let mut v = (z / (z - 1.0)).sqrt();
            if flip_branch {
                v = -v;
            }
            let prefactor = v.powi(n as i32 + 1);
            Ok(prefactor * u_value_complex(m, z * v))
        }
    }
}

/// Surd closed form on the principal square-root branch.
pub fn closed_form_surd(n: u32, z: ComplexDouble, direction: Direction) -> Result<ComplexDouble> {
    closed_form_surd_branch(n, z, direction, false)
}

/// Exact value of `sum_s (i/2)^s F_N^(s)` (convolved Fibonacci weights),
/// computed as `(-i)^(N-1)` times the rational closed form at `z = i/2`.
pub fn fib_conv_sum(n: u32) -> GaussianRational {
    let half_i = &GaussianRational::i() * &GaussianRational::ratio(1, 2);
    let value = closed_form_rational(n, &half_i, Direction::PosPower)
        .expect("i/2 is not a pole");
    &GaussianRational::neg_i_pow(n as i64 - 1) * &value
}

/// Exact value of the convolved k-section sums: `sum_s (2/L_k)^s Phi_{N,k}^(s)`
/// for even k, and `sum_s (-2i/L_k)^s Phi_{N,k}^(s)` for odd k >= 3. Both run
/// through the descending-weight closed form at `z = L_k/2` resp. `i L_k/2`.
///
/// `k = 1` is rejected: `|2/L_1| = 2`, so that series diverges.
pub fn phi_conv_sum(n: u32, k: u32) -> Result<GaussianRational> {
    if k < 2 {
        return Err(Error::domain(
            "k-section series requires k >= 2 (the k = 1 weights have modulus 2)",
        ));
    }
    let half_lk =
        GaussianRational::from_rational(BigRational::new(lucas_for(k), BigInt::from(2)));
    if k % 2 == 0 {
        let value = closed_form_rational(n, &half_lk, Direction::NegPower)?;
        if !value.is_real() {
            return Err(Error::identity(format!(
                "even-k section sum must be real, got {value} at N={n} k={k}"
            )));
        }
        Ok(value)
    } else {
        let z = &GaussianRational::i() * &half_lk;
        let value = closed_form_rational(n, &z, Direction::NegPower)?;
        Ok(&GaussianRational::neg_i_pow(n as i64 - 1) * &value)
    }
}

/// The boundary evaluation point `z0 = (1 + i sqrt(15))/8` with `|z0| = 1/2`,
/// chosen so that `z0 / sqrt(1 - z0) = i/2`.
pub fn fib_boundary_point() -> ComplexDouble {
    ComplexDouble::new(0.125, 15.0_f64.sqrt() / 8.0)
}

/// Fibonacci recovery from inside the disc: sums the ascending-weight
/// series at `z0` to convergence and applies the phase
/// `(-i)^(N-1) (1 - z0)^((N+1)/2)`. The result approximates `F_N`.
pub fn fib_from_boundary(n: u32) -> ComplexDouble {
    let z0 = fib_boundary_point();
    // |z0| = 1/2 exactly, so the generic tail bound applies with m = 1/2.
    let terms = tail_terms_needed(n, &BigRational::new(1.into(), 2.into()), 1e-13)
        .expect("1/2 is a valid modulus");
    let mut acc = ComplexDouble::new(0.0, 0.0);
    let mut zpow = ComplexDouble::new(1.0, 0.0);
    for s in 0..=terms {
        acc += zpow * scaled_deriv_poly(n, s).eval_complex(z0);
        zpow *= z0;
    }
    let phase = GaussianRational::neg_i_pow(n as i64 - 1).to_complex();
    let prefactor = (ComplexDouble::new(1.0, 0.0) - z0).powf((n as f64 + 1.0) / 2.0);
    phase * prefactor * acc
}

/// Smallest `S` such that the majorant tail
/// `sum_{s > S} C(N-1+s, s) (1 + 2 m)^(N-1) m^s` is at most `eps`,
/// bounded by a geometric series from the first omitted term.
///
/// The majorant dominates `|z^s P(N,s)(z)|` for `|z| <= m < 1`, so summing
/// the ascending-weight series to `S` leaves a truncation error below `eps`.
pub fn tail_terms_needed(n: u32, mod_z: &BigRational, eps: f64) -> Result<u32> {
    if !eps.is_finite() || eps <= 0.0 {
        return Err(Error::domain("eps must be a positive finite float"));
    }
    if !mod_z.is_positive() || *mod_z >= BigRational::one() {
        return Err(Error::domain("mod_z must lie strictly between 0 and 1"));
    }
    let eps = rational_from_f64(eps);
    let n_big = BigRational::from_integer(BigInt::from(n));
    let prefactor = (BigRational::one() + mod_z * BigRational::from_integer(2.into()))
        .pow((n - 1) as i32);
    // t = majorant term at index S+1, maintained incrementally
    let mut t = &prefactor * &n_big * mod_z; // C(n, 1) m^1 * prefactor
    let mut s: u32 = 0;
    loop {
        // ratio of consecutive majorant terms is (n+s)/(s+1) * m, decreasing;
        // its value just past S bounds the whole tail geometrically
        let rho = BigRational::new(BigInt::from(n as u64 + s as u64 + 1), BigInt::from(s + 2))
            * mod_z;
        if rho < BigRational::one() {
            let bound = &t / (BigRational::one() - rho);
            if bound <= eps {
                return Ok(s);
            }
        }
        t = t * BigRational::new(BigInt::from(n as u64 + s as u64 + 1), BigInt::from(s + 2))
            * mod_z;
        s += 1;
        if s > 2_000_000 {
            return Err(Error::domain("truncation bound failed to certify"));
        }
    }
}

/// A rational `m` with `m^2 >= x` (tight to ~1e-12), for exact-safe use of
/// [`tail_terms_needed`] at points with irrational modulus.
fn sqrt_upper(x: &BigRational) -> BigRational {
    let est = rational_to_f64(x).sqrt();
    let mut m = rational_from_f64(est * (1.0 + 1e-12) + f64::MIN_POSITIVE);
    let bump = BigRational::new(BigInt::from(1048577), BigInt::from(1048576));
    while &(&m * &m) < x {
        m *= &bump;
    }
    m
}

/// Truncation index sufficient for `|partial_sum(S) - closed_form| <= eps`
/// at an exact point, in either direction.
///
/// For descending weights the geometric ratio is `1/|z|` but the polynomial
/// growth envelope scales with `(1 + 2|z|)^(N-1)` rather than the bound's
/// `(1 + 2/|z|)^(N-1)`; the requested `eps` is pre-shrunk by that fixed
/// ratio so the generic bound stays sufficient.
pub fn certified_truncation(
    n: u32,
    z: &GaussianRational,
    direction: Direction,
    eps: f64,
) -> Result<u32> {
    let msq = z.norm_sqr();
    match direction {
        Direction::PosPower => {
            if z.is_zero() {
                return Ok(0);
            }
            if msq >= BigRational::one() {
                return Err(Error::domain("ascending weights need |z| < 1"));
            }
            let m = sqrt_upper(&msq);
            if m >= BigRational::one() {
                return Err(Error::domain("|z| too close to 1 to certify a tail"));
            }
            tail_terms_needed(n, &m, eps)
        }
        Direction::NegPower => {
            if msq <= BigRational::one() {
                return Err(Error::domain("descending weights need |z| > 1"));
            }
            let m = sqrt_upper(&msq.recip());
            let z_abs = rational_to_f64(&msq).sqrt();
            let m_f = rational_to_f64(&m);
            let scale = ((1.0 + 2.0 * m_f) / (1.0 + 2.0 * z_abs)).powi(n as i32 - 1);
            tail_terms_needed(n, &m, eps * scale * 0.5)
        }
    }
}

/// Certified bound on `|partial_sum(terms) - closed_form|` at an exact
/// point: the geometric majorant of the omitted tail, as an exact rational.
/// Convergent sums are therefore reported as (partial value, bound) pairs;
/// the closed form remains the limit authority.
pub fn truncation_error_bound(
    n: u32,
    z: &GaussianRational,
    direction: Direction,
    terms: u32,
) -> Result<BigRational> {
    let msq = z.norm_sqr();
    let (m, envelope_scale) = match direction {
        Direction::PosPower => {
            if z.is_zero() {
                return Ok(BigRational::zero());
            }
            if msq >= BigRational::one() {
                return Err(Error::domain("ascending weights need |z| < 1"));
            }
            let m = sqrt_upper(&msq);
            if m >= BigRational::one() {
                return Err(Error::domain("|z| too close to 1 to certify a tail"));
            }
            (m, None)
        }
        Direction::NegPower => {
            if msq <= BigRational::one() {
                return Err(Error::domain("descending weights need |z| > 1"));
            }
            (sqrt_upper(&msq.recip()), Some(sqrt_upper(&msq)))
        }
    };
    // envelope (1 + 2 |z|)^(N-1): |z| itself for descending weights, the
    // weight ratio m for ascending (where m bounds |z| from above)
    let envelope_base = match &envelope_scale {
        Some(z_abs) => z_abs.clone(),
        None => m.clone(),
    };
    let prefactor = (BigRational::one()
        + &envelope_base * BigRational::from_integer(2.into()))
    .pow((n - 1) as i32);
    // first omitted majorant term C(N-1+terms+1, terms+1) m^(terms+1)
    let mut t = prefactor * m.pow(terms as i32 + 1);
    let mut c = BigRational::one();
    for i in 1..=(terms as u64 + 1) {
        c *= BigRational::new(BigInt::from(n as u64 + i - 1), BigInt::from(i));
    }
    t *= c;
    let rho = BigRational::new(
        BigInt::from(n as u64 + terms as u64 + 1),
        BigInt::from(terms + 2),
    ) * &m;
    if rho >= BigRational::one() {
        return Err(Error::domain(
            "truncation too short for a geometric tail bound at this point",
        ));
    }
    Ok(&t / (BigRational::one() - rho))
}

/// The two routes to the degenerate argument-1/2 sum
/// `sum_s (1/2)^s C_N^(1+s)(1/2)`: the rational closed form at `z = 1/2`,
/// and the sine form `2^((N+2)/2) sin((N+1)pi/4) / sin(pi/4)` reduced to the
/// rational it always collapses to (the sqrt(2) factors cancel for every N).
#[derive(Clone, Debug, PartialEq)]
pub struct MagicValue {
    pub series_sum: BigRational,
    pub closed_form: BigRational,
}

/// Evaluates both routes for the Gegenbauer index `N >= 0`.
pub fn magic_value(n: u32) -> MagicValue {
    let half = GaussianRational::ratio(1, 2);
    let series_sum = closed_form_rational(n + 1, &half, Direction::PosPower)
        .expect("1/2 is not a pole")
        .expect_real("argument-1/2 sum")
        .expect("closed form at a real point is real");
    // 2^((N+3)/2) sin((N+1)pi/4) as an exact rational, case by (N+1) mod 8
    let m = (n + 1) % 8;
    let closed_form = if m % 4 == 0 {
        BigRational::zero()
    } else {
        let (sign, exp) = match m {
            1 | 3 => (1, (n + 2) / 2),
            5 | 7 => (-1, (n + 2) / 2),
            2 => (1, (n + 3) / 2),
            _ => (-1, (n + 3) / 2), // m == 6
        };
        BigRational::from_integer(BigInt::from(sign) * (BigInt::one() << exp))
    };
    MagicValue {
        series_sum,
        closed_form,
    }
}
