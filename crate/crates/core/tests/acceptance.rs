//! Acceptance suite: one test per criterion, each printing a PASS line on
//! success (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Tolerances and bounds are pinned here, not configurable.

use std::time::{Duration, Instant};

use chebseries::chebpoly::IntPolynomial;
use chebseries::continuation::{
    binom_alternating, euler_power_sum, pell_from_angle, pell_regularized, EulerWeight, SumValue,
};
use chebseries::exactnum::{rational_to_f64, BigRational, GaussianRational};
use chebseries::sequences::{base_term, SequenceKind};
use chebseries::series::{fib_conv_sum, pell_gf_check};
use chebseries::tables::{row_closed_form, row_value, TableId};
use chebseries::verify::{Suite, VerifyOptions, VerifyReport};

fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let report = suite.run(opts);
    assert!(
        report.passed(),
        "suite {} failed; first failure: {:#?}",
        report.suite,
        report.failures.first()
    );
    report
}

fn announce(criterion: &str, detail: String) {
    println!("{criterion}: PASS — {detail}");
}

fn assert_within(elapsed: Duration, budget: Duration, what: &str) {
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_01_coefficient_identity() {
    let start = Instant::now();
    let report = run_suite(Suite::CoefficientIdentity, &VerifyOptions::default());
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(10), "coefficient identity sweep");
    announce(
        "criterion 01 (coefficient identity, N<=20 s<=60)",
        format!("{} cases in {elapsed:?}", report.cases_run),
    );
}

#[test]
fn criterion_02_certified_limits() {
    let start = Instant::now();
    // default eps inside the suite is 2^-40, compared exactly
    let report = run_suite(Suite::ClosedFormCertification, &VerifyOptions::default());
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(60), "limit certification");
    announce(
        "criterion 02 (certified limits at 2^-40, N<=12)",
        format!("{} cases in {elapsed:?}", report.cases_run),
    );
}

#[test]
fn criterion_03_tables_reproduced() {
    // published numerators, built here by expanding the printed products
    let z = |coeffs: &[i64]| IntPolynomial::from_i64(coeffs);
    let table1: Vec<IntPolynomial> = vec![
        z(&[1]),
        z(&[1]),
        z(&[-1, 1, 4]),
        // 4z (2z^2 + z - 1)
        &z(&[0, 4]) * &z(&[-1, 1, 2]),
    ];
    let table2: Vec<IntPolynomial> = vec![
        z(&[0, 1]),
        z(&[0, 0, 1]),
        // z^2 (4z^3 - z + 1)
        &z(&[0, 0, 1]) * &z(&[1, -1, 0, 4]),
        // 4z^4 (2z^3 - z + 1)
        &z(&[0, 0, 0, 0, 4]) * &z(&[1, -1, 0, 2]),
    ];
    for (n, want) in (1..=4u32).zip(table1) {
        let (numerator, pow) = row_closed_form(TableId::One, n);
        assert_eq!(numerator, want, "table 1 row N={n}");
        assert_eq!(pow, n);
    }
    for (n, want) in (1..=4u32).zip(table2) {
        let (numerator, pow) = row_closed_form(TableId::Two, n);
        assert_eq!(numerator, want, "table 2 row N={n}");
        assert_eq!(pow, n);
    }
    // spot values after substitution
    let half = GaussianRational::ratio(1, 2);
    let values: Vec<GaussianRational> = (1..=4)
        .map(|n| row_value(TableId::One, n, &half).unwrap())
        .collect();
    assert_eq!(values, [2, 4, 4, 0].map(GaussianRational::from_int));
    announce(
        "criterion 03 (tables reproduced symbolically, N<=4)",
        "8 rows match the published rational functions".into(),
    );
}

#[test]
fn criterion_04_fib_conv_values() {
    let published = [
        GaussianRational::ratio_complex(4, 5, 2, 5),
        GaussianRational::ratio_complex(12, 25, 16, 25),
        GaussianRational::ratio_complex(76, 125, 168, 125),
        GaussianRational::ratio_complex(48, 625, 1264, 625),
        GaussianRational::ratio_complex(-2496, 3125, 9272, 3125),
    ];
    for (n, want) in (1..=5u32).zip(published) {
        assert_eq!(fib_conv_sum(n), want, "N={n}");
    }
    let report = run_suite(Suite::FibConvSeries, &VerifyOptions::default());
    announce(
        "criterion 04 (five convolved-Fibonacci sums exact + 1e-9 partial sums)",
        format!("{} cases", report.cases_run),
    );
}

#[test]
fn criterion_05_convolution_identities() {
    let start = Instant::now();
    let report = run_suite(Suite::Sequences, &VerifyOptions::default());
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(60), "convolution identity sweep");
    announce(
        "criterion 05 (derivative route = convolution, fib/pell N,s<=20; sections k<=8 N,s<=15)",
        format!("{} cases in {elapsed:?}", report.cases_run),
    );
}

#[test]
fn criterion_06_unit_evaluations() {
    let report = run_suite(Suite::UnitEvaluation, &VerifyOptions::default());
    assert_eq!(report.cases_run, 31 * 30 * 2); // s in 0..=30, N in 1..=30, both signs
    announce(
        "criterion 06 (evaluations at ±1 + Vandermonde, N,s<=30)",
        format!("{} cases", report.cases_run),
    );
}

#[test]
fn criterion_07_alternating_binomial() {
    let report = run_suite(Suite::AlternatingBinomial, &VerifyOptions::default());
    // four worked values restated here
    let worked = [(1u32, (1, 2)), (2, (1, 2)), (3, (1, 4)), (4, (0, 1))];
    for (n, (num, den)) in worked {
        assert_eq!(
            binom_alternating(n),
            BigRational::new(num.into(), den.into()),
            "N={n}"
        );
    }
    announce(
        "criterion 07 (alternating binomial sums, both routes, N<=64)",
        format!("{} cases", report.cases_run),
    );
}

#[test]
fn criterion_08_euler_sums() {
    let gq = GaussianRational::ratio_complex;
    let alt = [gq(1, 2, 0, 1), gq(-1, 4, 0, 1), gq(0, 1, 0, 1), gq(1, 8, 0, 1)];
    let im = [gq(1, 2, 1, 2), gq(-1, 2, 0, 1), gq(0, 1, -1, 2), gq(1, 1, 0, 1)];
    for (p, want) in alt.into_iter().enumerate() {
        assert_eq!(
            euler_power_sum(p as u32, EulerWeight::AlternatingReal).unwrap(),
            want
        );
    }
    for (p, want) in im.into_iter().enumerate() {
        assert_eq!(
            euler_power_sum(p as u32, EulerWeight::ImaginaryUnit).unwrap(),
            want
        );
    }
    let report = run_suite(Suite::EulerSums, &VerifyOptions::default());
    announce(
        "criterion 08 (Euler monomial sums exact, Abel cross-check 1e-4 for p<=5)",
        format!("{} cases", report.cases_run),
    );
}

#[test]
fn criterion_09_pell_regularization() {
    let gq = GaussianRational::ratio_complex;
    let expected = [
        gq(1, 2, 1, 2),
        gq(0, 1, 1, 1),
        gq(-1, 1, 3, 2),
        gq(-3, 1, 1, 1),
    ];
    for (n, want) in (1..=4u32).zip(expected) {
        assert_eq!(pell_regularized(n).value, SumValue::Exact(want), "N={n}");
    }
    for n in 1..=10u32 {
        let want = rational_to_f64(&BigRational::from_integer(base_term(
            SequenceKind::Pell,
            n,
        )));
        assert!(
            (pell_from_angle(n) - want).norm() < 1e-8,
            "pell from angle N={n}"
        );
    }
    announce(
        "criterion 09 (Pell regularization exact N<=4, angle route 1e-8 N<=10)",
        "14 checks".into(),
    );
}

#[test]
fn criterion_10_fib_boundary() {
    let report = run_suite(Suite::FibBoundary, &VerifyOptions::default());
    assert_eq!(report.cases_run, 15);
    announce(
        "criterion 10 (Fibonacci boundary recovery 1e-7, N<=15)",
        format!("{} cases", report.cases_run),
    );
}

#[test]
fn criterion_11_surd_consistency() {
    let report = run_suite(Suite::SurdConsistency, &VerifyOptions::default());
    // 50 points per direction, each with a branch-flip twin
    assert!(report.cases_run >= 200);
    announce(
        "criterion 11 (surd vs rational 1e-10 at 100 points, branch flips 1e-12)",
        format!("{} cases", report.cases_run),
    );
}

#[test]
fn criterion_12_gamma_interpolation() {
    let report = run_suite(Suite::Gamma, &VerifyOptions::default());
    announce(
        "criterion 12 (gamma-factor form at integers 1e-11, recurrence grid 1e-11)",
        format!("{} cases", report.cases_run),
    );
}

#[test]
fn criterion_13_generating_function() {
    for s in 0..=4u32 {
        assert!(pell_gf_check(8, s), "s={s}");
    }
    announce(
        "criterion 13 (Pell generating-function expansion, order 8, s<=4)",
        "5 expansion orders".into(),
    );
}

#[test]
fn full_verification_under_budget() {
    let start = Instant::now();
    let opts = VerifyOptions::default();
    let mut cases = 0;
    for suite in chebseries::verify::ALL_SUITES {
        let report = suite.run(&opts);
        assert!(
            report.passed(),
            "suite {} failed: {:#?}",
            report.suite,
            report.failures.first()
        );
        cases += report.cases_run;
    }
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(300), "full verification");
    announce(
        "full `verify all` sweep",
        format!("{cases} cases in {elapsed:?} (budget 5 min)"),
    );
}
