//! Ramanujan summation with lower limit 1:
//!
//! ```text
//! sum^R f = sum_{n<=N} f(n) - int_1^N f - f(N)/2 - sum_{j<=J} B_2j/(2j)! f^(2j-1)(N)
//! ```
//!
//! applied to `f(t) = H(t) t^k` with `H(t) = gamma + psi(t+1)`. Derivatives
//! are exact through the product rule over polygamma values.

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler_sums::smooth::{em_corrections_fixed, hsmooth_float, HarmonicPower};
use crate::euler_sums::{Provenance, RegularizedSum, Value};
use crate::exact::BernoulliConvention;
use crate::real::{bernoulli_float, integrate_float, Interval, PrecisionContext, QuadOptions, Real};

/// Largest exponent `k` accepted by [`ramanujan_sum`].
pub const MAX_K: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EMScheme {
    /// Evaluation point `N`.
    pub n: u64,
    /// Number of Bernoulli corrections `J`.
    pub j: u32,
}

impl EMScheme {
    /// Lower limit of the normalizing integral.
    pub const INTEGRAL_LOWER_LIMIT: u64 = 1;

    pub fn new(n: u64, j: u32) -> Result<Self> {
        if n < 2 || j == 0 {
            return Err(Error::InvalidArgument(format!("scheme needs N >= 2 and J >= 1, got ({n}, {j})")));
        }
        Ok(EMScheme { n, j })
    }

    /// `N = digits + 10`, `J = digits/2 + 2`.
    pub fn for_precision(ctx: &PrecisionContext) -> Self {
        let d = ctx.digits();
        EMScheme { n: u64::from(d) + 10, j: d / 2 + 2 }
    }

    /// `(2N, J+1)`
    pub fn refined(&self) -> Self {
        EMScheme { n: 2 * self.n, j: self.j + 1 }
    }
}

/// `H(t)` for `t > 0`.
pub fn hsmooth(t: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    Ok(Real::from_float(hsmooth_float(&t.to_float(bits), bits)?, ctx))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RamanujanValue {
    pub sum: RegularizedSum,
    pub scheme: EMScheme,
    pub refined: EMScheme,
    /// `|value(N, J) - value(2N, J+1)|`
    pub spread: Real,
    pub stable: bool,
    /// Guard digits in use when the result was accepted.
    pub guard: u32,
}

impl RamanujanValue {
    pub fn value(&self) -> &Real {
        match &self.sum.value {
            Value::Numeric(r) => r,
            Value::Exact(_) => unreachable!("Ramanujan values are numeric"),
        }
    }
}

/// `S_k^R` for `sum H_n n^k`, with the scheme checked against its refinement.
/// An unstable result is retried once with doubled guard digits and then
/// returned flagged.
pub fn ramanujan_sum(k: u32, scheme: EMScheme, ctx: &PrecisionContext) -> Result<RamanujanValue> {
    if k > MAX_K {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds {MAX_K}")));
    }
    EMScheme::new(scheme.n, scheme.j)?;
    let tolerance = ctx.half_tolerance();
    let mut work = ctx.clone();
    let mut attempt = 0;
    loop {
        let refined = scheme.refined();
        let pair: Vec<Result<Float>> = [scheme, refined]
            .par_iter()
            .map(|s| harmonic_power_sum(k, *s, &work))
            .collect();
        let mut pair = pair.into_iter();
        let coarse = pair.next().expect("two schemes")?;
        let fine = pair.next().expect("two schemes")?;
        let spread = Real::from_float(Float::with_val(work.working_bits(), &coarse - &fine).abs(), ctx);
        let stable = spread < tolerance;
        if stable || attempt == 1 {
            let sum = RegularizedSum {
                k,
                value: Value::Numeric(Real::from_float(fine, ctx)),
                convention: None,
                bernoulli: BernoulliConvention::PaperPlus,
                provenance: Provenance::Ramanujan,
            };
            return Ok(RamanujanValue { sum, scheme, refined, spread, stable, guard: work.guard() });
        }
        work = work.escalated();
        attempt += 1;
    }
}

fn extra_bits(k: u32, n: u64) -> u32 {
    (k + 2) * ((2 * n) as f64).log2().ceil() as u32 + 16
}

fn harmonic_power_sum(k: u32, scheme: EMScheme, ctx: &PrecisionContext) -> Result<Float> {
    let bits = ctx.working_bits() + extra_bits(k, scheme.n);
    let f = HarmonicPower::new(Float::with_val(bits, k), 0);
    let mut partial = Float::new(bits);
    let mut h = Float::new(bits);
    for n in 1..=scheme.n {
        h += Float::with_val(bits, n).recip();
        partial += Float::with_val(bits, &h * Float::with_val(bits, n).pow(k));
    }
    let tol = Float::with_val(bits, Float::i_exp(1, -(bits as i32) + 32));
    let interval = Interval::Finite {
        a: Float::with_val(bits, EMScheme::INTEGRAL_LOWER_LIMIT),
        b: Float::with_val(bits, scheme.n),
    };
    let integrand = |t: &Float| f.value(t, bits).unwrap_or_else(|_| Float::with_val(bits, f64::NAN));
    let integral = integrate_float(&integrand, &interval, bits, &tol, &tol, QuadOptions::default())?;
    let nf = Float::with_val(bits, scheme.n);
    let mut table = f.derivatives_at(&nf, bits);
    let half = table.derivative(0)? / 2u32;
    let corrections = em_corrections_fixed(&mut table, scheme.j, bits)?;
    Ok(partial - integral.value - half - corrections)
}

/// `sum^R n^(-2)` under the same scheme. Expected `zeta(2) - 1`.
pub fn inverse_square_sum(scheme: EMScheme, ctx: &PrecisionContext) -> Result<Real> {
    EMScheme::new(scheme.n, scheme.j)?;
    let bits = ctx.working_bits() + extra_bits(0, scheme.n);
    let mut partial = Float::new(bits);
    for n in 1..=scheme.n {
        partial += Float::with_val(bits, n).square().recip();
    }
    let nf = Float::with_val(bits, scheme.n);
    let integral = Float::with_val(bits, 1u32) - Float::with_val(bits, nf.recip_ref());
    let half = Float::with_val(bits, nf.square_ref()).recip() / 2u32;
    // f^(2j-1)(t) = -(2j)! t^(-2j-1), so B_2j/(2j)! f^(2j-1)(N) = -B_2j N^(-2j-1)
    let mut corrections = Float::new(bits);
    for j in 1..=scheme.j as usize {
        let p = Float::with_val(bits, (&nf).pow(2 * j as u32 + 1));
        corrections -= bernoulli_float(2 * j, bits) / p;
    }
    Ok(Real::from_float(partial - integral - half - corrections, ctx))
}

/// `|sum^R n^(-2) - (zeta(2) - 1)|`.
pub fn self_test_residual(scheme: EMScheme, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let expected = Float::with_val(bits, 2).zeta() - 1u32;
    let got = inverse_square_sum(scheme, ctx)?;
    Ok((&got - &Real::from_float(expected, ctx)).abs())
}
