//! Exact and floating evaluation of the series
//!
//! ```text
//!   sum_{s >= 0} z^(+/-s) * U'(N,s)(z),    U'(N,s) = d^s/dz^s U_{N+s-1}(z) / (2^s s!),
//! ```
//!
//! where `U_n` is the Chebyshev polynomial of the second kind. The scaled
//! derivative `U'(N,s)` is a degree-(N-1) integer polynomial (equivalently the
//! Gegenbauer polynomial `C_{N-1}^{(s+1)}`), and the two series above converge
//! for `|z| < 1` and `|z| > 1` respectively to rational functions of `z`.
//!
//! The crate provides:
//!
//! * [`exactnum`] — big-rational and Gaussian-rational scalars, binomial
//!   coefficients, and a complex Lanczos gamma function;
//! * [`chebpoly`] — `U_n`, the scaled derivatives, and the Gegenbauer alias,
//!   all with exact integer coefficients;
//! * [`sequences`] — Fibonacci, Lucas, Pell and Fibonacci k-section numbers,
//!   their convolutions, and the Chebyshev-derivative route to the same values;
//! * [`series`] — partial sums, rational and surd closed forms, certified
//!   truncation bounds, and formal-power-series cross checks;
//! * [`continuation`] — regularized sums on the boundary `|z| = 1`, the
//!   alternating binomial sums, Euler-style power sums, and the gamma-factor
//!   generalization;
//! * [`verify`] — the named verification suites behind the CLI, and
//! * [`tables`] — canonical rendering of the two closed-form tables.

pub mod chebpoly;
pub mod continuation;
mod error;
pub mod exactnum;
pub mod sequences;
pub mod series;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
