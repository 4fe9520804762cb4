//! Exact rational layer: binomials, harmonic numbers and Bernoulli numbers.
//!
//! Nothing in here touches floating point, so every value produced by this
//! module can serve as an oracle for the numeric layers.

mod bernoulli;
mod rational;

pub use bernoulli::{bernoulli, bernoulli_self_identity, BernoulliConvention};
pub use rational::{binomial, factorial, harmonic, parse_rational, rational_to_string, Rational};
