//! The closed form
//!
//! ```text
//! (-1)^(k-1) k sum_n H_n n^(k-1)
//!     = -zeta(1-k) + k zeta'(1-k) + k B_(k-1) + gamma B_k
//!       - sum_{l+m=k} C(k,l) (B_l / l) B_m - B_k H_k
//! ```
//!
//! and the conversion `B'_k = -zeta(1-k) + k zeta'(1-k)`. Both are affine in
//! `zeta'(1-k)`, so they act on exact symbolic values and on reals alike.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::symbolic::SymbolicValue;
use crate::error::{Error, Result};
use crate::exact::{bernoulli, binomial, harmonic, BernoulliConvention, Rational};
use crate::real::{PrecisionContext, Real};
use crate::zeta::zeta_neg_int_exact;

/// Index range of `sum_{l+m=k}`; `l = 0` is always excluded since `B_l / l`
/// is undefined there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SumConvention {
    /// `l = 1..=k`, so `m = 0` contributes.
    A,
    /// `l = 1..k`, so `m >= 1`.
    B,
}

impl SumConvention {
    pub const ALL: [SumConvention; 2] = [SumConvention::A, SumConvention::B];
}

impl fmt::Display for SumConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumConvention::A => f.write_str("A"),
            SumConvention::B => f.write_str("B"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Chain,
    Ramanujan,
}

/// Exact symbolic value or a numeric one.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(SymbolicValue),
    Numeric(Real),
}

impl Value {
    pub fn evaluate(&self, ctx: &PrecisionContext) -> Real {
        match self {
            Value::Exact(v) => v.evaluate(ctx),
            Value::Numeric(r) => r.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&SymbolicValue> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Numeric(_) => None,
        }
    }
}

/// A value assigned to the divergent series `sum_{n>=1} H_n n^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularizedSum {
    /// Exponent `k` in `sum H_n n^k`.
    pub k: u32,
    pub value: Value,
    /// `None` for values that do not go through the closed form.
    pub convention: Option<SumConvention>,
    pub bernoulli: BernoulliConvention,
    pub provenance: Provenance,
}

/// `x -> scale * x + offset`
struct Affine {
    scale: Rational,
    offset: SymbolicValue,
}

impl Affine {
    fn apply(&self, x: &Value, ctx: &PrecisionContext) -> Value {
        match x {
            Value::Exact(v) => Value::Exact(&v.scale(&self.scale) + &self.offset),
            Value::Numeric(r) => {
                let scaled = r * &Real::from_rational(&self.scale, ctx);
                Value::Numeric(&scaled + &self.offset.evaluate(ctx))
            }
        }
    }

    fn inverse(&self) -> Affine {
        let inv = Rational::one() / &self.scale;
        Affine { offset: (-&self.offset).scale(&inv), scale: inv }
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    Ok(())
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `sum_{l+m=k} C(k,l) (B_l/l) B_m` with `B_1 = +1/2`.
pub fn sum_lm(k: u32, conv: SumConvention) -> Result<Rational> {
    sum_lm_with(k, conv, BernoulliConvention::PaperPlus)
}

pub fn sum_lm_with(k: u32, conv: SumConvention, bern: BernoulliConvention) -> Result<Rational> {
    check_k(k)?;
    let last = match conv {
        SumConvention::A => k,
        SumConvention::B => k - 1,
    };
    Ok((1..=last).fold(Rational::zero(), |acc, l| {
        let m = k - l;
        acc + binomial(k as u64, l as u64) * bernoulli(l as usize, bern) / q(l as i64)
            * bernoulli(m as usize, bern)
    }))
}

/// `B'_k = -zeta(1-k) + k zeta'(1-k)`.
pub fn bprime_conversion(k: u32, zprime: &Value, ctx: &PrecisionContext) -> Result<Value> {
    Ok(bprime_map(k)?.apply(zprime, ctx))
}

/// `zeta'(1-k) = (B'_k + zeta(1-k)) / k`.
pub fn bprime_to_zprime(k: u32, bprime: &Value, ctx: &PrecisionContext) -> Result<Value> {
    Ok(bprime_map(k)?.inverse().apply(bprime, ctx))
}

fn bprime_map(k: u32) -> Result<Affine> {
    check_k(k)?;
    let zeta = zeta_neg_int_exact(k as u64)?;
    Ok(Affine { scale: q(k as i64), offset: SymbolicValue::from_rational(-zeta) })
}

/// `S_(k-1) = sigma zeta'(1-k) + (sigma/k) C_k` with `sigma = (-1)^(k-1)` and
/// `C_k` every term of the closed form except `k zeta'(1-k)`.
fn closed_form_map(k: u32, conv: SumConvention, bern: BernoulliConvention) -> Result<Affine> {
    check_k(k)?;
    let kk = k as usize;
    let b_k = bernoulli(kk, bern);
    let rational = -zeta_neg_int_exact(k as u64)? + q(k as i64) * bernoulli(kk - 1, bern)
        - sum_lm_with(k, conv, bern)?
        - &b_k * harmonic(k as u64)?;
    let constant = SymbolicValue::new(rational, b_k, Rational::zero());
    let sigma = if k % 2 == 1 { q(1) } else { q(-1) };
    let offset = constant.scale(&(&sigma / q(k as i64)));
    Ok(Affine { scale: sigma, offset })
}

/// Regularized `S_(k-1) = sum H_n n^(k-1)` from `zeta'(1-k)`, `B_1 = +1/2`.
pub fn s_from_zprime(
    k: u32,
    zprime: &Value,
    conv: SumConvention,
    ctx: &PrecisionContext,
) -> Result<RegularizedSum> {
    s_from_zprime_with(k, zprime, conv, BernoulliConvention::PaperPlus, ctx)
}

pub fn s_from_zprime_with(
    k: u32,
    zprime: &Value,
    conv: SumConvention,
    bern: BernoulliConvention,
    ctx: &PrecisionContext,
) -> Result<RegularizedSum> {
    let value = closed_form_map(k, conv, bern)?.apply(zprime, ctx);
    Ok(RegularizedSum {
        k: k - 1,
        value,
        convention: Some(conv),
        bernoulli: bern,
        provenance: Provenance::ClosedForm,
    })
}

/// Inverts the closed form for `zeta'(1-k)`. Sums carrying no index-range
/// convention (for instance Ramanujan values) are converted under `conv`.
pub fn zprime_from_s(
    k: u32,
    s_val: &RegularizedSum,
    conv: SumConvention,
    ctx: &PrecisionContext,
) -> Result<Value> {
    check_k(k)?;
    if s_val.k + 1 != k {
        return Err(Error::InvalidArgument(format!(
            "zeta'(1-{k}) needs S_{}, got S_{}",
            k - 1,
            s_val.k
        )));
    }
    if let Some(found) = s_val.convention {
        if found != conv {
            return Err(Error::ConventionMismatch {
                found: found.to_string(),
                requested: conv.to_string(),
            });
        }
    }
    Ok(closed_form_map(k, conv, s_val.bernoulli)?.inverse().apply(&s_val.value, ctx))
}
