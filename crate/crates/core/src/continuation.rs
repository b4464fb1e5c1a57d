//! Regularized summation on the boundary `|z| = 1`.
//!
//! The ascending/descending closed forms are rational functions defined
//! everywhere except `z = 1`, so the divergent boundary series are assigned
//! the value of the continued closed form at `z = e^(it)` — no Cesaro or
//! Borel machinery. At the quarter-turn points the value is an exact
//! Gaussian rational; elsewhere it is a complex double, cross-checked
//! against the explicit trigonometric rewriting of the closed form.
//!
//! Specializations implemented here:
//!
//! * `t = pi/3`: descending phase recovers the Pell numbers;
//! * `t = pi/2`: `sum_s i^s P_N^(s)` as exact Gaussian rationals;
//! * `t = pi`:  `sum_s (-1)^s C(N+2s, N-1) = 2^(-N/2) sin(N pi/4)`, exact,
//!   with the evaluation `P(N,s)(+/-1)` pinned by a Vandermonde-type
//!   binomial identity;
//! * Euler-style monomial sums `sum_s w^s s^p` for `w` in `{-1, i}`,
//!   recovered by exact triangular elimination from the family above and
//!   cross-checked by Abel summation;
//! * the gamma-factor form `Gamma(z) 2^(-z/2) sin(z pi/4)` interpolating the
//!   alternating binomial sums at integer `z`.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chebpoly::{scaled_deriv_poly, u_value_complex, IntPolynomial};
use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, complex_gamma, factorial, rational_to_f64, ComplexDouble, GaussianRational,
};
use crate::series::{closed_form_rational, closed_form_surd, Direction};

/// A boundary point `z = e^(it)` with the angle kept as an exact rational
/// multiple of pi, reduced into `[0, 2)`. `t = 0` (the pole `z = 1`) is
/// rejected at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryPoint {
    t_over_pi: BigRational,
}

impl BoundaryPoint {
    pub fn new(t_over_pi: BigRational) -> Result<Self> {
        let two = BigRational::from_integer(2.into());
        let reduced = &t_over_pi - (&t_over_pi / &two).floor() * &two;
        if reduced.is_zero() {
            return Err(Error::domain("t = 0 is the singular point z = 1"));
        }
        Ok(BoundaryPoint { t_over_pi: reduced })
    }

    /// Convenience constructor for `t = (num/den) pi`.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        Self::new(BigRational::new(num.into(), den.into()))
    }

    pub fn t_over_pi(&self) -> &BigRational {
        &self.t_over_pi
    }

    pub fn t(&self) -> f64 {
        rational_to_f64(&self.t_over_pi) * PI
    }

    /// The exact value of `e^(it)` when it is a Gaussian rational
    /// (quarter turns: i, -1, -i).
    pub fn exact_point(&self) -> Option<GaussianRational> {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        if self.t_over_pi == r(1, 2) {
            Some(GaussianRational::i())
        } else if self.t_over_pi == r(1, 1) {
            Some(GaussianRational::from_int(-1))
        } else if self.t_over_pi == r(3, 2) {
            Some(-GaussianRational::i())
        } else {
            None
        }
    }

    pub fn complex_point(&self) -> ComplexDouble {
        ComplexDouble::new(0.0, self.t()).exp()
    }
}

/// Which closed form produced a regularized value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormKind {
    RationalAscending,
    RationalDescending,
    SurdAscending,
    SurdDescending,
}

impl fmt::Display for ClosedFormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClosedFormKind::RationalAscending => "ascending-weight rational closed form",
            ClosedFormKind::RationalDescending => "descending-weight rational closed form",
            ClosedFormKind::SurdAscending => "ascending-weight surd closed form",
            ClosedFormKind::SurdDescending => "descending-weight surd closed form",
        };
        write!(f, "{name}")
    }
}

/// Where a regularized value came from: the closed form used and the point
/// it was evaluated at.
#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub form: ClosedFormKind,
    pub at: String,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at z = {}", self.form, self.at)
    }
}

/// A regularized sum: exact when the boundary point is a Gaussian rational,
/// otherwise a complex double with a heuristic error bound.
#[derive(Clone, Debug, PartialEq)]
pub enum SumValue {
    Exact(GaussianRational),
    Approx { value: ComplexDouble, error_bound: f64 },
}

impl SumValue {
    pub fn to_complex(&self) -> ComplexDouble {
        match self {
            SumValue::Exact(g) => g.to_complex(),
            SumValue::Approx { value, .. } => *value,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SumValue::Exact(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularizedValue {
    pub value: SumValue,
    pub provenance: Provenance,
    /// Absolute gap between the closed-form value and the trigonometric
    /// rewriting of the same form, when the latter was evaluated.
    pub trig_discrepancy: Option<f64>,
}

/// The trigonometric rewriting of the closed forms at `z = e^(it)`,
/// `t` in `(0, 2 pi)`:
///
/// ```text
///   ascending:  (2 sin(t/2))^(-(N+1)/2) e^(-i(t-pi)(N+1)/4)
///                 * U_{N-1}( e^(i(3t+pi)/4) / sqrt(2 sin(t/2)) )
///   descending: (2 sin(t/2))^(-(N+1)/2) e^(+i(t-pi)(N+1)/4)
///                 * U_{N-1}( e^(i(5t-pi)/4) / sqrt(2 sin(t/2)) )
/// ```
pub fn boundary_trig_form(n: u32, t: f64, direction: Direction) -> ComplexDouble {
    let s2 = 2.0 * (t / 2.0).sin();
    let half_n1 = (n as f64 + 1.0) / 2.0;
    let prefactor = s2.powf(-half_n1);
    let (phase, arg_angle) = match direction {
        Direction::PosPower => (-(t - PI) * (n as f64 + 1.0) / 4.0, (3.0 * t + PI) / 4.0),
        Direction::NegPower => ((t - PI) * (n as f64 + 1.0) / 4.0, (5.0 * t - PI) / 4.0),
    };
    let rotation = ComplexDouble::new(0.0, phase).exp();
    let argument = ComplexDouble::new(0.0, arg_angle).exp() / s2.sqrt();
    prefactor * rotation * u_value_complex(n as i64 - 1, argument)
}

/// Regularized boundary sum at `z = e^(it)`: the continued closed form,
/// exact at quarter turns, with the trigonometric form cross-evaluated and
/// its discrepancy reported.
pub fn boundary_sum(
    n: u32,
    point: &BoundaryPoint,
    direction: Direction,
) -> Result<RegularizedValue> {
    let trig = boundary_trig_form(n, point.t(), direction);
    match point.exact_point() {
        Some(z) => {
            let value = closed_form_rational(n, &z, direction)?;
            let discrepancy = (value.to_complex() - trig).norm();
            let form = match direction {
                Direction::PosPower => ClosedFormKind::RationalAscending,
                Direction::NegPower => ClosedFormKind::RationalDescending,
            };
            Ok(RegularizedValue {
                provenance: Provenance {
                    form,
                    at: z.to_string(),
                },
                value: SumValue::Exact(value),
                trig_discrepancy: Some(discrepancy),
            })
        }
        None => {
            let z = point.complex_point();
            let value = closed_form_surd(n, z, direction)?;
            let discrepancy = (value - trig).norm();
            let form = match direction {
                Direction::PosPower => ClosedFormKind::SurdAscending,
                Direction::NegPower => ClosedFormKind::SurdDescending,
            };
            Ok(RegularizedValue {
                provenance: Provenance {
                    form,
                    at: format!("{z}"),
                },
                value: SumValue::Approx {
                    value,
                    error_bound: (1e-12 * (1.0 + value.norm())).max(discrepancy),
                },
                trig_discrepancy: Some(discrepancy),
            })
        }
    }
}

/// Exact regularized value of `sum_s i^s P_N^(s)` (convolved Pell weights):
/// `(-i)^(N-1)` times the ascending closed form at `z = i`.
pub fn pell_regularized(n: u32) -> RegularizedValue {
    let value = closed_form_rational(n, &GaussianRational::i(), Direction::PosPower)
        .expect("i is not a pole");
    let value = &GaussianRational::neg_i_pow(n as i64 - 1) * &value;
    let trig = pell_trig_form(n);
    let discrepancy = (value.to_complex() - trig).norm();
    RegularizedValue {
        provenance: Provenance {
            form: ClosedFormKind::RationalAscending,
            at: "i".into(),
        },
        value: SumValue::Exact(value),
        trig_discrepancy: Some(discrepancy),
    }
}

/// Surd form of the same Pell sum:
/// `2^(-(N+1)/4) e^(i(5-3N)pi/8) U_{N-1}(2^(-1/4) e^(i 5pi/8))`.
pub fn pell_trig_form(n: u32) -> ComplexDouble {
    let prefactor = 2f64.powf(-(n as f64 + 1.0) / 4.0);
    let rotation = ComplexDouble::new(0.0, (5.0 - 3.0 * n as f64) * PI / 8.0).exp();
    let argument = 2f64.powf(-0.25) * ComplexDouble::new(0.0, 5.0 * PI / 8.0).exp();
    prefactor * rotation * u_value_complex(n as i64 - 1, argument)
}

/// Pell number recovered from the sixth-root boundary point:
/// `e^(-i(2N-1)pi/3)` times the ascending closed form at `z = e^(i pi/3)`.
pub fn pell_from_angle(n: u32) -> ComplexDouble {
    let z = ComplexDouble::new(0.0, PI / 3.0).exp();
    let value = closed_form_surd(n, z, Direction::PosPower).expect("e^(i pi/3) != 1");
    ComplexDouble::new(0.0, -(2.0 * n as f64 - 1.0) * PI / 3.0).exp() * value
}

/// Evaluation point of [`scaled_deriv_at_unit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitPoint {
    PlusOne,
    MinusOne,
}

/// `P(N,s)(+/-1)` computed two ways — direct polynomial evaluation and the
/// closed form `(+/-1)^(N-1) C(N+2s, N-1)` — with the Vandermonde-type
/// decomposition `sum_j C(N+s-1-j, N-1-j) C(s+j, j) = C(N+2s, N-1)` verified
/// along the way. Any mismatch is an identity violation (a bug detector).
pub fn scaled_deriv_at_unit(n: u32, s: u32, point: UnitPoint) -> Result<BigInt> {
    assert!(n >= 1);
    let x = match point {
        UnitPoint::PlusOne => BigRational::one(),
        UnitPoint::MinusOne => -BigRational::one(),
    };
    let direct = scaled_deriv_poly(n, s).eval_rational(&x);
    if !direct.is_integer() {
        return Err(Error::identity("integer polynomial at ±1 must be integral"));
    }
    let direct = direct.to_integer();

    let central = binomial((n + 2 * s) as u64, n as i64 - 1);
    let vandermonde: BigInt = (0..n as u64)
        .map(|j| {
            binomial(
                (n + s) as u64 - 1 - j,
                (n as u64 - 1 - j) as i64,
            ) * binomial(s as u64 + j, j as i64)
        })
        .sum();
    if vandermonde != central {
        return Err(Error::identity(format!(
            "Vandermonde sum mismatch at N={n} s={s}: {vandermonde} vs {central}"
        )));
    }

    let closed = match point {
        UnitPoint::PlusOne => central,
        UnitPoint::MinusOne => {
            if n % 2 == 1 {
                central
            } else {
                -central
            }
        }
    };
    if direct != closed {
        return Err(Error::identity(format!(
            "unit evaluation mismatch at N={n} s={s} ({point:?}): {direct} vs {closed}"
        )));
    }
    Ok(direct)
}

/// Exact value of `sum_s (-1)^s C(N+2s, N-1)`, by continuing the descending
/// closed form to `z = -1` (where ascending and descending weights coincide).
pub fn binom_alternating(n: u32) -> BigRational {
    let minus_one = GaussianRational::from_int(-1);
    let value = closed_form_rational(n, &minus_one, Direction::NegPower)
        .expect("-1 is not a pole")
        .expect_real("alternating binomial sum")
        .expect("closed form at a real point is real");
    if n % 2 == 1 {
        value
    } else {
        -value
    }
}

/// The same sum from the sine side, `2^(-N/2) sin(N pi/4)`, collapsed to the
/// exact rational it always equals: zero when `N = 0 (mod 4)`, otherwise
/// `(-1)^floor(N/4) / 2^floor((N+1)/2)`.
pub fn binom_alternating_piecewise(n: u32) -> BigRational {
    if n % 4 == 0 {
        return BigRational::zero();
    }
    let sign = if (n / 4) % 2 == 0 { 1 } else { -1 };
    BigRational::new(BigInt::from(sign), BigInt::one() << n.div_ceil(2))
}

/// Weight of an Euler-style monomial sum `sum_s w^s s^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerWeight {
    /// `w = -1`
    AlternatingReal,
    /// `w = i`
    ImaginaryUnit,
}

impl EulerWeight {
    pub fn value(self) -> GaussianRational {
        match self {
            EulerWeight::AlternatingReal => GaussianRational::from_int(-1),
            EulerWeight::ImaginaryUnit => GaussianRational::i(),
        }
    }
}

/// Most monomial exponent the triangular elimination is configured for.
pub const EULER_POWER_CAP: u32 = 16;

/// multiply `poly` (coefficients in ascending powers of sigma) by `a*sigma + b`
fn poly_mul_linear(poly: &mut Vec<BigRational>, a: i64, b: BigRational) {
    let a = BigRational::from_integer(a.into());
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i] += c * &b;
        out[i + 1] += c * &a;
    }
    *poly = out;
}

fn poly_scale(poly: &mut [BigRational], c: &BigRational) {
    for x in poly.iter_mut() {
        *x *= c;
    }
}

/// `C(N + 2 sigma, N - 1)` as a polynomial in sigma:
/// `prod_{m=2..N} (2 sigma + m) / (N-1)!`.
fn alternating_basis_poly(n: u32) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for m in 2..=n as i64 {
        poly_mul_linear(&mut poly, 2, BigRational::from_integer(m.into()));
    }
    let inv = BigRational::new(BigInt::one(), factorial(n as u64 - 1));
    poly_scale(&mut poly, &inv);
    poly
}

/// The convolved Pell number `P_N^(s)` as a polynomial in `s`:
/// `sum_j 2^(N-1-2j) C(N-1+s-j, j) C(N-1+s-2j, N-1-2j)`, where each binomial
/// is expanded as a product of linear factors in `s`.
fn pell_basis_poly(n: u32) -> Vec<BigRational> {
    let n = n as i64;
    let mut total = vec![BigRational::zero(); n as usize];
    for j in 0..=((n - 1) / 2) {
        let mut c = vec![BigRational::one()];
        for t in 0..j {
            poly_mul_linear(&mut c, 1, BigRational::from_integer((n - 1 - j - t).into()));
        }
        poly_scale(&mut c, &BigRational::new(BigInt::one(), factorial(j as u64)));
        let mut d = vec![BigRational::one()];
        for t in 1..=(n - 1 - 2 * j) {
            poly_mul_linear(&mut d, 1, BigRational::from_integer(t.into()));
        }
        poly_scale(
            &mut d,
            &BigRational::new(BigInt::one(), factorial((n - 1 - 2 * j) as u64)),
        );
        let scale = BigRational::from_integer(BigInt::one() << (n - 1 - 2 * j));
        for (ic, cc) in c.iter().enumerate() {
            for (id, dd) in d.iter().enumerate() {
                total[ic + id] += cc * dd * &scale;
            }
        }
    }
    total
}

fn basis_poly(weight: EulerWeight, n: u32) -> Vec<BigRational> {
    match weight {
        EulerWeight::AlternatingReal => alternating_basis_poly(n),
        EulerWeight::ImaginaryUnit => pell_basis_poly(n),
    }
}

fn basis_regularized_value(weight: EulerWeight, n: u32) -> GaussianRational {
    match weight {
        EulerWeight::AlternatingReal => GaussianRational::from_rational(binom_alternating(n)),
        EulerWeight::ImaginaryUnit => match pell_regularized(n).value {
            SumValue::Exact(v) => v,
            SumValue::Approx { .. } => unreachable!("pell regularization is exact"),
        },
    }
}

/// Regularized monomial sum `sum_s w^s s^p`, obtained by exact triangular
/// elimination: the degree-(N-1) basis polynomial `B_N(s)` satisfies
/// `sum_s w^s B_N(s) = R_N` (the regularized family values), and solving the
/// triangle upward isolates each monomial in turn.
pub fn euler_power_sum(p: u32, weight: EulerWeight) -> Result<GaussianRational> {
    if p > EULER_POWER_CAP {
        return Err(Error::domain(format!(
            "monomial exponent {p} beyond the configured cap {EULER_POWER_CAP}"
        )));
    }
    let mut solved: Vec<GaussianRational> = Vec::new();
    for q in 0..=p {
        let basis = basis_poly(weight, q + 1);
        debug_assert_eq!(basis.len(), q as usize + 1);
        let mut acc = basis_regularized_value(weight, q + 1);
        for (idx, known) in solved.iter().enumerate() {
            let c = GaussianRational::from_rational(basis[idx].clone());
            acc = &acc - &(&c * known);
        }
        let lead = GaussianRational::from_rational(basis[q as usize].clone());
        solved.push(acc.checked_div(&lead)?);
    }
    Ok(solved.pop().expect("loop ran at least once"))
}

/// Numerator polynomials of the convergent monomial sums:
/// `sum_{s>=0} x^s s^p = M_p(x) / (1-x)^(p+1)` with
/// `M_0 = 1`, `M_{p+1} = x (M_p' (1-x) + (p+1) M_p)`.
fn monomial_sum_numerators(p_max: u32) -> Vec<IntPolynomial> {
    let one_minus_x = IntPolynomial::from_i64(&[1, -1]);
    let x = IntPolynomial::from_i64(&[0, 1]);
    let mut out = vec![IntPolynomial::one()];
    for p in 0..p_max {
        let m = out.last().unwrap();
        let bumped = &(&m.derivative() * &one_minus_x)
            + &m.scale(&BigInt::from(p as i64 + 1));
        out.push(&x * &bumped);
    }
    out
}

/// Exact Abel value `sum_s (r w)^s s^p` at rational `r` in `(0, 1)`, via the
/// closed monomial-sum form evaluated at the Gaussian rational `r w`.
pub fn abel_value_exact(p: u32, weight: EulerWeight, r: &BigRational) -> GaussianRational {
    let numerator = monomial_sum_numerators(p).pop().unwrap();
    let x = &GaussianRational::from_rational(r.clone()) * &weight.value();
    let den = (&GaussianRational::one() - &x)
        .pow(p as i64 + 1)
        .expect("positive power");
    numerator
        .eval_exact(&x)
        .checked_div(&den)
        .expect("r < 1 keeps the denominator away from zero")
}

/// Literal truncated Abel partial sum in floating point, for tying the
/// closed form to the series itself at moderate `r`.
pub fn abel_partial(p: u32, weight: EulerWeight, r: f64, terms: u32) -> ComplexDouble {
    let w = weight.value().to_complex() * r;
    let mut acc = ComplexDouble::new(0.0, 0.0);
    let mut wpow = ComplexDouble::new(1.0, 0.0);
    for s in 0..=terms {
        let monomial = if s == 0 {
            if p == 0 {
                1.0
            } else {
                0.0
            }
        } else {
            (s as f64).powi(p as i32)
        };
        acc += wpow * monomial;
        wpow *= w;
    }
    acc
}

/// Radii `1 - h` of the Abel–Richardson ladder. The first three are the
/// canonical coarse nodes; the two refinements keep the extrapolation error
/// below 1e-6 up to `p = 8` (three nodes alone stall near 7e-3 at `p = 5`).
pub const ABEL_LADDER_H: [(i64, i64); 5] = [(1, 10), (1, 20), (1, 100), (1, 200), (1, 1000)];

/// Abel-summation estimate of the regularized monomial sum: exact Abel
/// values along the ladder, extrapolated to `r = 1` by Neville's scheme.
pub fn abel_estimate(p: u32, weight: EulerWeight) -> ComplexDouble {
    let mut hs = Vec::new();
    let mut fs = Vec::new();
    for (num, den) in ABEL_LADDER_H {
        let h = BigRational::new(num.into(), den.into());
        let r = BigRational::one() - &h;
        hs.push(rational_to_f64(&h));
        fs.push(abel_value_exact(p, weight, &r).to_complex());
    }
    neville_to_zero(&hs, &fs)
}

fn neville_to_zero(hs: &[f64], fs: &[ComplexDouble]) -> ComplexDouble {
    let n = hs.len();
    let mut cur = fs.to_vec();
    for k in 1..n {
        for i in 0..n - k {
            cur[i] = (cur[i] * (0.0 - hs[i + k]) - cur[i + 1] * (0.0 - hs[i]))
                / (hs[i] - hs[i + k]);
        }
    }
    cur[0]
}

/// The gamma-factor interpolation `Gamma(z) 2^(-z/2) sin(z pi/4)`, which at
/// positive integers `z = N` equals `(N-1)!` times the alternating binomial
/// sum. Gamma poles propagate as errors.
pub fn gamma_regularized(z: ComplexDouble) -> Result<ComplexDouble> {
    let gamma = complex_gamma(z)?;
    let two_pow = (ComplexDouble::new(-0.5, 0.0) * z * std::f64::consts::LN_2).exp();
    let sine = (z * (PI / 4.0)).sin();
    Ok(gamma * two_pow * sine)
}
