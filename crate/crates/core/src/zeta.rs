//! Classical evaluation of `zeta(s)` and `zeta'(s)` on the real axis.
//!
//! Euler–Maclaurin with `N` explicit terms and `J` Bernoulli corrections:
//!
//! ```text
//! zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//!         + sum_{j=1}^{J} B_2j/(2j)! s(s+1)...(s+2j-2) N^(1-s-2j) + R
//! ```
//!
//! For real `s > -2J-1` the remainder is bounded by the first omitted
//! correction, so `J` grows until the next correction falls below the
//! target. If the corrections start growing first, `N` is doubled. The
//! derivative differentiates every term analytically in `s`.

use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, BernoulliConvention, Rational};
use crate::real::{
    as_integer, bernoulli_float, gamma_fn_float, log2pi_float, pi_float, PrecisionContext, Real,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaMethod {
    EulerMaclaurin,
    ExactRational,
    FunctionalEquation,
}

#[derive(Debug, Clone)]
pub struct ZetaValue {
    pub s: Real,
    pub value: Real,
    pub derivative_order: u8,
    pub method: ZetaMethod,
}

/// Truncation parameters of one Euler–Maclaurin evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmParams {
    pub terms: u64,
    pub corrections: u32,
}

pub fn zeta_em(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    zeta_em_detailed(s, ctx).map(|(v, _)| v)
}

/// `zeta(s)` together with the `(N, J)` the error bound selected.
pub fn zeta_em_detailed(s: &Real, ctx: &PrecisionContext) -> Result<(Real, EmParams)> {
    let bits = ctx.working_bits();
    let em = em_adaptive(&s.to_float(bits), bits, false)?;
    Ok((Real::from_float(em.value, ctx), em.params))
}

/// Euler–Maclaurin at fixed `(N, J)`, no adaptivity.
pub fn zeta_em_fixed(s: &Real, params: EmParams, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let s = s.to_float(bits);
    check_not_pole(&s)?;
    let em = em_sum(&s, params.terms, params.corrections, bits, false, true);
    Ok(Real::from_float(em.value, ctx))
}

/// `zeta'(s)` by termwise-differentiated Euler–Maclaurin, no closed-form shortcuts.
pub fn zeta_prime_em(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let em = em_adaptive(&s.to_float(bits), bits, true)?;
    Ok(Real::from_float(em.derivative, ctx))
}

/// Exact `zeta(1-k) = -B_k / k` with `B_1 = +1/2`, so `zeta(0) = -1/2`.
pub fn zeta_neg_int_exact(k: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Pole("zeta(1)".into()));
    }
    let b = bernoulli(k as usize, BernoulliConvention::PaperPlus);
    Ok(-b / Rational::from_integer(k.into()))
}

/// Classical `zeta'(a)`: closed forms at `0` and the trivial zeros,
/// differentiated Euler–Maclaurin elsewhere.
pub fn zeta_prime_oracle(a: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let v = zeta_prime_float(&a.to_float(bits), bits)?;
    Ok(Real::from_float(v, ctx))
}

/// Picks the method the way the oracle does and records it.
pub fn evaluate(s: &Real, derivative_order: u8, ctx: &PrecisionContext) -> Result<ZetaValue> {
    let bits = ctx.working_bits();
    let sf = s.to_float(bits);
    let int = as_integer(&sf);
    let (value, method) = match (derivative_order, int) {
        (0, Some(n)) if n <= 0 => {
            let q = zeta_neg_int_exact((1 - n) as u64)?;
            (Real::from_rational(&q, ctx), ZetaMethod::ExactRational)
        }
        (0, _) => (zeta_em(s, ctx)?, ZetaMethod::EulerMaclaurin),
        (1, Some(n)) if n <= 0 && n % 2 == 0 => {
            (zeta_prime_oracle(s, ctx)?, ZetaMethod::FunctionalEquation)
        }
        (1, _) => (zeta_prime_em(s, ctx)?, ZetaMethod::EulerMaclaurin),
        (d, _) => {
            return Err(Error::InvalidArgument(format!("derivative order {d} not supported")))
        }
    };
    Ok(ZetaValue { s: s.clone(), value, derivative_order, method })
}

/// Both sides of `zeta(1-s) = 2 (2 pi)^-s Gamma(s) cos(pi s/2) zeta(s)`.
pub fn functional_equation_sides(s: &Real, ctx: &PrecisionContext) -> Result<(Real, Real)> {
    let bits = ctx.working_bits();
    let sf = s.to_float(bits);
    if sf <= 1 {
        return Err(Error::Domain(format!("functional equation check needs s > 1, got {sf}")));
    }
    let one_minus = Float::with_val(bits, 1 - &sf);
    let lhs = zeta_float(&one_minus, bits)?;
    let rhs = functional_equation_rhs(&sf, bits)?;
    Ok((Real::from_float(lhs, ctx), Real::from_float(rhs, ctx)))
}

pub fn functional_equation_residual(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let (lhs, rhs) = functional_equation_sides(s, ctx)?;
    Ok((&lhs - &rhs).abs())
}

fn functional_equation_rhs(s: &Float, bits: u32) -> Result<Float> {
    let cos = cos_half_pi(s, bits);
    if cos.is_zero() {
        return Ok(Float::new(bits));
    }
    let two_pi = pi_float(bits) * 2u32;
    let scale = Float::with_val(bits, (-s.clone()) * two_pi.ln()).exp() * 2u32;
    Ok(scale * gamma_fn_float(s, bits)? * cos * zeta_float(s, bits)?)
}

/// `cos(pi s / 2)`, exact at integers.
fn cos_half_pi(s: &Float, bits: u32) -> Float {
    match as_integer(s) {
        Some(n) => Float::with_val(bits, [1, 0, -1, 0][n.rem_euclid(4) as usize]),
        None => Float::with_val(bits, pi_float(bits) * s / 2u32).cos(),
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1 (zeta(1) diverges)".into()));
    }
    Ok(())
}

/// `(-1)^k 2 (2 pi)^(2k) / (2k)!`
fn odd_bridge_factor(k: u32, bits: u32) -> Float {
    let two_pi = pi_float(bits) * 2u32;
    let mut f = two_pi.pow(2 * k) * 2u32 / Float::with_val(bits, Float::factorial(2 * k));
    if k % 2 == 1 {
        f = -f;
    }
    f
}

/// `zeta(2k+1) = (-1)^k 2 (2 pi)^(2k) / (2k)! * zeta'(-2k)`.
pub fn zeta_odd_from_zprime(k: u32, zprime: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_k(k)?;
    let bits = ctx.working_bits();
    Ok(Real::from_float(odd_bridge_factor(k, bits) * zprime.to_float(bits), ctx))
}

/// Inverse of [`zeta_odd_from_zprime`].
pub fn zprime_from_zeta_odd(k: u32, zeta_odd: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_k(k)?;
    let bits = ctx.working_bits();
    Ok(Real::from_float(zeta_odd.to_float(bits) / odd_bridge_factor(k, bits), ctx))
}

/// The same bridge written through `B'_{2k+1}`:
/// `zeta(2k+1) = (-1)^k (2 pi)^(2k+1) / (2k+1)! * B'_{2k+1} / pi`.
pub fn zeta_odd_from_bprime(k: u32, bprime: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_k(k)?;
    let bits = ctx.working_bits();
    let pi = pi_float(bits);
    let two_pi = Float::with_val(bits, &pi * 2u32);
    let mut f = two_pi.pow(2 * k + 1) / Float::with_val(bits, Float::factorial(2 * k + 1)) / pi;
    if k % 2 == 1 {
        f = -f;
    }
    Ok(Real::from_float(f * bprime.to_float(bits), ctx))
}

fn check_not_pole(s: &Float) -> Result<()> {
    if *s == 1 {
        return Err(Error::Pole("zeta(1)".into()));
    }
    if !s.is_finite() {
        return Err(Error::Domain(format!("zeta at {s}")));
    }
    Ok(())
}

pub(crate) fn zeta_float(s: &Float, bits: u32) -> Result<Float> {
    Ok(em_adaptive(s, bits, false)?.value)
}

pub(crate) fn zeta_prime_float(a: &Float, bits: u32) -> Result<Float> {
    check_not_pole(a)?;
    if a.is_zero() {
        return Ok(-log2pi_float(bits) / 2u32);
    }
    if let Some(n) = as_integer(a) {
        if n < 0 && n % 2 == 0 {
            // zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2 (2 pi)^(2k))
            let k = (-n / 2) as u32;
            let work = bits + 8;
            let odd = zeta_float(&Float::with_val(work, 2 * k + 1), work)?;
            return Ok(Float::with_val(bits, odd / odd_bridge_factor(k, work)));
        }
    }
    Ok(em_adaptive(a, bits, true)?.derivative)
}

struct EmOutcome {
    value: Float,
    derivative: Float,
    params: EmParams,
    converged: bool,
}

fn em_adaptive(s: &Float, bits: u32, derivative: bool) -> Result<EmOutcome> {
    check_not_pole(s)?;
    let sf = s.to_f64();
    let mut n = (0.12 * bits as f64).ceil() as u64 + 5;
    if sf < 0.0 {
        n = n.max((sf.abs() / std::f64::consts::PI).ceil() as u64 + 5);
    }
    let max_j = 4 * bits;
    for _ in 0..12 {
        let out = em_sum(s, n, max_j, bits, derivative, false);
        if out.converged {
            return Ok(out);
        }
        n *= 2;
    }
    Err(Error::NoConvergence {
        what: "Euler-Maclaurin zeta",
        estimate: String::new(),
        error_bound: format!("N = {n}"),
    })
}

/// One Euler–Maclaurin evaluation. With `fixed`, exactly `j_max` corrections
/// are applied; otherwise summation stops at the first correction below
/// `2^-bits` and reports non-convergence if the corrections start growing.
fn em_sum(s: &Float, n: u64, j_max: u32, bits: u32, derivative: bool, fixed: bool) -> EmOutcome {
    let sf = s.to_f64();
    let log2n = (n as f64).log2();
    // cancellation among terms of size N^(1-s) for s < 1
    let extra = if sf < 1.0 { ((1.0 - sf) * log2n).ceil() as u32 } else { 0 };
    let work = bits + extra + 16;
    let s = Float::with_val(work, s);
    let eps = Float::with_val(work, Float::i_exp(1, -(bits as i32) - 2));

    let mut value = Float::new(work);
    let mut deriv = Float::new(work);
    for m in 1..n {
        let mf = Float::with_val(work, m);
        let p = Float::with_val(work, (-s.clone()) * mf.clone().ln()).exp();
        if derivative {
            deriv -= Float::with_val(work, &p * mf.ln());
        }
        value += p;
    }
    let nf = Float::with_val(work, n);
    let ln_n = nf.clone().ln();
    let n_pow_neg_s = Float::with_val(work, (-s.clone()) * &ln_n).exp(); // N^-s
    let s_minus_1 = Float::with_val(work, &s - 1u32);
    let tail = Float::with_val(work, &n_pow_neg_s * &nf) / &s_minus_1; // N^(1-s)/(s-1)
    let half = Float::with_val(work, &n_pow_neg_s / 2u32);
    if derivative {
        deriv -= Float::with_val(work, &tail * &ln_n);
        deriv -= Float::with_val(work, &tail / &s_minus_1);
        deriv -= Float::with_val(work, &half * &ln_n);
    }
    value += tail;
    value += half;

    let n2 = Float::with_val(work, &nf * &nf);
    // N^(1-s-2j), starting at j=1: N^(-s-1)
    let mut npow = Float::with_val(work, &n_pow_neg_s / &nf);
    let mut poch = s.clone(); // s(s+1)...(s+2j-2)
    let mut poch_d = Float::with_val(work, 1);
    let mut fact = Float::with_val(work, 2); // (2j)!
    let mut prev: Option<(Float, Float)> = None;
    let mut converged = fixed;
    let mut used = 0;
    for j in 1..=j_max {
        if j > 1 {
            for shift in [2 * j - 3, 2 * j - 2] {
                let factor = Float::with_val(work, &s + shift);
                poch_d = Float::with_val(work, &poch_d * &factor) + &poch;
                poch *= factor;
            }
            npow /= &n2;
            fact *= (2 * j - 1) * (2 * j);
        }
        let coef = Float::with_val(work, bernoulli_float(2 * j as usize, work) / &fact) * &npow;
        let term = Float::with_val(work, &coef * &poch);
        let dterm = if derivative {
            Float::with_val(work, &coef * (Float::with_val(work, &poch_d) - Float::with_val(work, &poch * &ln_n)))
        } else {
            Float::new(work)
        };
        used = j;
        let size = term.clone().abs();
        let dsize = dterm.clone().abs();
        value += &term;
        deriv += &dterm;
        if fixed {
            continue;
        }
        if size < eps && dsize < eps {
            converged = true;
            break;
        }
        if let Some((ps, pd)) = &prev {
            let growing = (size > *ps && !ps.is_zero()) || (derivative && dsize > *pd && !pd.is_zero());
            if j > 2 && growing {
                break;
            }
        }
        prev = Some((size, dsize));
    }
    EmOutcome {
        value: Float::with_val(bits, value),
        derivative: Float::with_val(bits, deriv),
        params: EmParams { terms: n, corrections: used },
        converged,
    }
}

impl EmParams {
    pub fn new(terms: u64, corrections: u32) -> Self {
        EmParams { terms, corrections }
    }
}
