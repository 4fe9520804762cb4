//! `h(s) = sum_{n>=1} H_n / n^s` and `sum_{n>=1} H_n / (n+1)^s` for `s > 1`:
//! explicit partial sums to `N`, then an Euler–Maclaurin tail on the smooth
//! extension `H(t)`, shared by both sums.

use rug::ops::Pow;
use rug::Float;

use super::smooth::{em_corrections_adaptive, HarmonicPower};
use crate::error::{Error, Result};
use crate::real::{bernoulli_float, gamma_float, PrecisionContext, Real};
use crate::zeta::zeta_float;

pub fn h_euler(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    Ok(Real::from_float(h_euler_float(&s.to_float(bits), bits)?, ctx))
}

/// `sum_{n>=1} H_n / (n+1)^s`.
pub fn shifted_euler_sum(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    Ok(Real::from_float(shifted_float(&s.to_float(bits), bits)?, ctx))
}

/// `|sum H_n/(n+1)^s - h(s) + zeta(s+1)|`.
pub fn fundamental_lemma_residual(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let sf = s.to_float(bits);
    let shifted = shifted_float(&sf, bits)?;
    let h = h_euler_float(&sf, bits)?;
    let zeta = zeta_float(&Float::with_val(bits, &sf + 1u32), bits)?;
    Ok(Real::from_float((shifted - h + zeta).abs(), ctx))
}

fn check_s(s: &Float) -> Result<()> {
    if !(s.is_finite() && *s > 1) {
        return Err(Error::Domain(format!("Euler sum diverges for s = {s}")));
    }
    Ok(())
}

fn tail_start(bits: u32) -> u64 {
    (0.12 * bits as f64).ceil() as u64 + 8
}

pub(crate) fn h_euler_float(s: &Float, bits: u32) -> Result<Float> {
    check_s(s)?;
    let work = bits + 16;
    let s = Float::with_val(work, s);
    let n = tail_start(work);
    let mut acc = Float::new(work);
    let mut h = Float::new(work);
    for m in 1..n {
        h += Float::with_val(work, m).recip();
        acc += Float::with_val(work, &h / Float::with_val(work, m).pow(&s));
    }
    let f = HarmonicPower::new(Float::with_val(work, -&s), 0);
    acc += em_tail(&f, n, tail_integral(n, &s, work), work)?;
    Ok(Float::with_val(bits, acc))
}

pub(crate) fn shifted_float(s: &Float, bits: u32) -> Result<Float> {
    check_s(s)?;
    let work = bits + 16;
    let s = Float::with_val(work, s);
    let n = tail_start(work);
    let mut acc = Float::new(work);
    let mut h = Float::new(work);
    for m in 1..n {
        h += Float::with_val(work, m).recip();
        acc += Float::with_val(work, &h / Float::with_val(work, m + 1).pow(&s));
    }
    // int_N^inf H(t) (t+1)^-s dt = int_{N+1}^inf (H(u) - 1/u) u^-s du
    let np1 = Float::with_val(work, n + 1);
    let correction = Float::with_val(work, np1.pow(&-s.clone())) / &s;
    let integral = tail_integral(n + 1, &s, work) - correction;
    let f = HarmonicPower::new(Float::with_val(work, -&s), 1);
    acc += em_tail(&f, n, integral, work)?;
    Ok(Float::with_val(bits, acc))
}

/// `sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_j B_2j/(2j)! f^(2j-1)(N)`.
fn em_tail(f: &HarmonicPower, n: u64, integral: Float, bits: u32) -> Result<Float> {
    let nf = Float::with_val(bits, n);
    let mut table = f.derivatives_at(&nf, bits);
    let half = table.derivative(0)? / 2u32;
    let eps = Float::with_val(bits, Float::i_exp(1, -(bits as i32)));
    let corrections = em_corrections_adaptive(&mut table, &eps, bits)?;
    Ok(integral + half - corrections)
}

/// `int_N^inf (gamma + psi(t+1)) t^-s dt`, integrating the asymptotic series
/// `psi(t+1) = ln t + 1/(2t) - sum B_2j / (2j t^2j)` term by term.
fn tail_integral(n: u64, s: &Float, bits: u32) -> Float {
    let nf = Float::with_val(bits, n);
    let ln_n = nf.clone().ln();
    let n_neg_s = Float::with_val(bits, (-s.clone()) * &ln_n).exp();
    let sm1 = Float::with_val(bits, s - 1u32);
    let lead = Float::with_val(bits, &n_neg_s * &nf)
        * ((gamma_float(bits) + &ln_n) / &sm1 + Float::with_val(bits, sm1.square_ref()).recip());
    let mut acc = lead + Float::with_val(bits, &n_neg_s / s) / 2u32;
    let eps = Float::with_val(bits, Float::i_exp(1, -(bits as i32)));
    let n2 = Float::with_val(bits, nf.square_ref());
    let mut npow = Float::with_val(bits, &n_neg_s / &nf); // N^(1-s-2j) at j = 1
    for j in 1..=bits as usize {
        let denom = Float::with_val(bits, s + (2 * j - 1) as u32) * (2 * j) as u32;
        let term = bernoulli_float(2 * j, bits) * &npow / denom;
        let done = Float::with_val(bits, term.abs_ref()) < eps;
        acc -= term;
        if done {
            break;
        }
        npow /= &n2;
    }
    acc
}
