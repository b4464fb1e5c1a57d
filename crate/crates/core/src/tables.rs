//! Canonical rendering of the two closed-form tables: per row, the series
//! sum as a single rational function `numerator / (1 -+ z)^N` with an
//! expanded integer-coefficient numerator in descending degree, plus exact
//! values at caller-supplied sample points.
//!
//! The N = 2 rows are conventionally listed with the constant monomial
//! factor `2z` of `P(2,s)(z) = 2z(s+1)` divided out of both sides, i.e. as
//! `sum z^(+/-s) (s+1)`; row values follow the listed (normalized) formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chebpoly::IntPolynomial;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, GaussianRational};
use crate::series::Direction;

/// Which of the two tables: ascending weights (`|z| < 1`) or descending
/// weights (`|z| > 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableId {
    One,
    Two,
}

impl TableId {
    pub fn direction(self) -> Direction {
        match self {
            TableId::One => Direction::PosPower,
            TableId::Two => Direction::NegPower,
        }
    }
}

/// A table request: rows `1..=n_max`, each evaluated at the sample points.
#[derive(Clone, Debug)]
pub struct TableSpec {
    pub table: TableId,
    pub n_max: u32,
    pub z_samples: Vec<GaussianRational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: u32,
    /// Canonical rational-function rendering of the row sum.
    pub formula: String,
    /// Row values at the sample points, canonically rendered.
    pub values: Vec<String>,
}

/// Numerator of the row sum over the common denominator `(1 -+ z)^N`,
/// before normalization.
fn raw_numerator(table: TableId, n: u32) -> IntPolynomial {
    let n = n as u64;
    let mut acc = IntPolynomial::zero();
    for j in 0..=((n - 1) / 2) {
        let c = binomial(n - 1 - j, j as i64);
        let c = if j % 2 == 0 { c } else { -c };
        let term = match table {
            TableId::One => {
                // (-1)^j C (2z)^(n-1-2j) (1-z)^j
                let lead = IntPolynomial::monomial(
                    c * (BigInt::one() << (n - 1 - 2 * j)),
                    (n - 1 - 2 * j) as usize,
                );
                &lead * &IntPolynomial::from_i64(&[1, -1]).pow(j as usize)
            }
            TableId::Two => {
                // (-1)^j C 2^(n-1-2j) z^(2n-1-3j) (z-1)^j
                let lead = IntPolynomial::monomial(
                    c * (BigInt::one() << (n - 1 - 2 * j)),
                    (2 * n - 1 - 3 * j) as usize,
                );
                &lead * &IntPolynomial::from_i64(&[-1, 1]).pow(j as usize)
            }
        };
        acc = &acc + &term;
    }
    acc
}

/// Exact division of a polynomial by the monomial `c z^d`, if possible.
fn div_monomial_exact(p: &IntPolynomial, c: &BigInt, d: usize) -> Option<IntPolynomial> {
    let mut out = Vec::new();
    for (deg, coeff) in p.coeffs().iter().enumerate() {
        if deg < d {
            if !coeff.is_zero() {
                return None;
            }
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(coeff, c);
        if !r.is_zero() {
            return None;
        }
        out.push(q);
    }
    Some(IntPolynomial::new(out))
}

/// The row's displayed rational function: `(numerator, denominator power)`,
/// with the N = 2 normalization applied.
pub fn row_closed_form(table: TableId, n: u32) -> (IntPolynomial, u32) {
    let raw = raw_numerator(table, n);
    let numerator = if n == 2 {
        div_monomial_exact(&raw, &BigInt::from(2), 1)
            .expect("the N = 2 numerator always carries the factor 2z")
    } else {
        raw
    };
    (numerator, n)
}

fn render(table: TableId, numerator: &IntPolynomial, denom_pow: u32) -> String {
    let nonzero_terms = numerator.coeffs().iter().filter(|c| !c.is_zero()).count();
    let num = if nonzero_terms > 1 {
        format!("({numerator})")
    } else {
        numerator.to_string()
    };
    let base = match table {
        TableId::One => "(1-z)",
        TableId::Two => "(z-1)",
    };
    if denom_pow == 1 {
        format!("{num}/{base}")
    } else {
        format!("{num}/{base}^{denom_pow}")
    }
}

/// Evaluate a row's displayed formula at an exact point (`z != 1`).
pub fn row_value(table: TableId, n: u32, z: &GaussianRational) -> Result<GaussianRational> {
    let (numerator, denom_pow) = row_closed_form(table, n);
    let one = GaussianRational::one();
    let base = match table {
        TableId::One => &one - z,
        TableId::Two => z - &one,
    };
    numerator.eval_exact(z).checked_div(&base.pow(denom_pow as i64)?)
}

/// Produce the table rows, checking every sample against the table's
/// modulus domain first.
pub fn table_rows(spec: &TableSpec) -> Result<Vec<TableRow>> {
    if spec.n_max < 1 {
        return Err(Error::domain("table requires n_max >= 1"));
    }
    let one = num_rational::BigRational::one();
    for z in &spec.z_samples {
        let msq = z.norm_sqr();
        let ok = match spec.table {
            TableId::One => msq < one,
            TableId::Two => msq > one,
        };
        if !ok {
            return Err(Error::domain(format!(
                "sample z = {z} violates the table's modulus domain"
            )));
        }
    }
    let mut rows = Vec::new();
    for n in 1..=spec.n_max {
        let (numerator, denom_pow) = row_closed_form(spec.table, n);
        let values = spec
            .z_samples
            .iter()
            .map(|z| row_value(spec.table, n, z).map(|v| v.to_string()))
            .collect::<Result<Vec<_>>>()?;
        rows.push(TableRow {
            n,
            formula: render(spec.table, &numerator, denom_pow),
            values,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::closed_form_rational;

    #[test]
    fn published_formula_strings() {
        let t1: Vec<String> = (1..=4)
            .map(|n| {
                let (num, m) = row_closed_form(TableId::One, n);
                render(TableId::One, &num, m)
            })
            .collect();
        assert_eq!(
            t1,
            ["1/(1-z)", "1/(1-z)^2", "(4z^2+z-1)/(1-z)^3", "(8z^3+4z^2-4z)/(1-z)^4"]
        );
        let t2: Vec<String> = (1..=4)
            .map(|n| {
                let (num, m) = row_closed_form(TableId::Two, n);
                render(TableId::Two, &num, m)
            })
            .collect();
        assert_eq!(
            t2,
            ["z/(z-1)", "z^2/(z-1)^2", "(4z^5-z^3+z^2)/(z-1)^3", "(8z^7-4z^5+4z^4)/(z-1)^4"]
        );
    }

    #[test]
    fn row_values_at_half() {
        let z = GaussianRational::ratio(1, 2);
        let values: Vec<GaussianRational> = (1..=4)
            .map(|n| row_value(TableId::One, n, &z).unwrap())
            .collect();
        assert_eq!(
            values,
            [2, 4, 4, 0].map(GaussianRational::from_int)
        );
    }

    #[test]
    fn rows_match_series_closed_form_up_to_the_listed_normalization() {
        let points = [
            GaussianRational::ratio(1, 3),
            GaussianRational::ratio_complex(1, 4, -1, 4),
        ];
        for z in &points {
            for n in 1..=6u32 {
                let row = row_value(TableId::One, n, z).unwrap();
                let series = closed_form_rational(n, z, Direction::PosPower).unwrap();
                if n == 2 {
                    let two_z = &GaussianRational::from_int(2) * z;
                    assert_eq!(&row * &two_z, series);
                } else {
                    assert_eq!(row, series, "N={n}");
                }
            }
        }
        let z = GaussianRational::ratio(5, 2);
        for n in 1..=6u32 {
            let row = row_value(TableId::Two, n, &z).unwrap();
            let series = closed_form_rational(n, &z, Direction::NegPower).unwrap();
            if n == 2 {
                let two_z = &GaussianRational::from_int(2) * &z;
                assert_eq!(&row * &two_z, series);
            } else {
                assert_eq!(row, series, "N={n}");
            }
        }
    }

    #[test]
    fn sample_domain_enforced() {
        let bad = TableSpec {
            table: TableId::One,
            n_max: 3,
            z_samples: vec![GaussianRational::from_int(2)],
        };
        assert!(matches!(table_rows(&bad), Err(Error::Domain(_))));
        let bad = TableSpec {
            table: TableId::Two,
            n_max: 3,
            z_samples: vec![GaussianRational::ratio(1, 2)],
        };
        assert!(matches!(table_rows(&bad), Err(Error::Domain(_))));
        let good = TableSpec {
            table: TableId::Two,
            n_max: 2,
            z_samples: vec![GaussianRational::from_int(3)],
        };
        let rows = table_rows(&good).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].values[0], "3/2");
    }
}
