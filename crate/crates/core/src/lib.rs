//! Exact and arbitrary-precision tools for regularized sums `sum H_n n^k`,
//! the Euler sums `sum H_n / n^s`, and the values `zeta'(-k)`.
//!
//! Exact quantities (Bernoulli numbers, harmonic numbers, recurrence chains)
//! are rationals or elements of `Q + Q gamma + Q ln(2 pi)`; everything else is
//! a [`real::Real`] tagged with the [`real::PrecisionContext`] that produced it.

pub mod chain;
pub mod error;
pub mod euler_sums;
pub mod exact;
pub mod hankel;
pub mod ramanujan;
pub mod real;
pub mod report;
pub mod zeta;

pub use error::{Error, Result};
