//! Gamma, digamma and polygamma by upward argument shift plus the
//! asymptotic (Stirling-type) expansions in Bernoulli numbers.

use std::collections::HashMap;
use std::sync::Mutex;

use rug::ops::Pow;
use rug::Float;

use super::constants::{log2pi_float, pi_float};
use super::precision::{PrecisionContext, Real};
use super::{as_integer, rational_to_float};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, BernoulliConvention};

static BERNOULLI_FLOATS: Mutex<Option<HashMap<u32, Vec<Float>>>> = Mutex::new(None);

/// Conventional `B_n` rounded to `bits`.
pub(crate) fn bernoulli_float(n: usize, bits: u32) -> Float {
    let mut guard = BERNOULLI_FLOATS.lock().unwrap_or_else(|e| e.into_inner());
    let table = guard.get_or_insert_with(HashMap::new).entry(bits).or_default();
    while table.len() <= n {
        let b = bernoulli(table.len(), BernoulliConvention::ConventionalMinus);
        table.push(rational_to_float(&b, bits));
    }
    table[n].clone()
}

/// Argument above which the asymptotic series for the `m`-th derivative
/// reaches `2^-bits` before it starts to diverge.
fn asymptotic_threshold(bits: u32, order: u32) -> f64 {
    0.12 * bits as f64 + 0.5 * order as f64 + 8.0
}

fn shift_count(x: &Float, threshold: f64) -> u32 {
    let xf = x.to_f64();
    if xf >= threshold {
        0
    } else {
        (threshold - xf).ceil() as u32
    }
}

pub fn gamma_fn(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let v = gamma_fn_float(&s.to_float(ctx.working_bits()), ctx.working_bits())?;
    Ok(Real::from_float(v, ctx))
}

pub fn digamma(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let v = digamma_float(&x.to_float(ctx.working_bits()), ctx.working_bits())?;
    Ok(Real::from_float(v, ctx))
}

pub fn polygamma(m: u32, x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let v = polygamma_float(m, &x.to_float(ctx.working_bits()), ctx.working_bits())?;
    Ok(Real::from_float(v, ctx))
}

pub(crate) fn gamma_fn_float(x: &Float, bits: u32) -> Result<Float> {
    if let Some(n) = as_integer(x) {
        if n <= 0 {
            return Err(Error::Pole(format!("Gamma at non-positive integer {n}")));
        }
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("Gamma at {x}")));
    }
    if *x < 0.5 {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let work = bits + 16;
        let pi = pi_float(work);
        let one_minus = Float::with_val(work, 1 - x);
        let g = gamma_fn_float(&one_minus, work)?;
        let sin = Float::with_val(work, &pi * x).sin();
        return Ok(Float::with_val(bits, pi / (sin * g)));
    }
    let threshold = asymptotic_threshold(bits, 0);
    let shift = shift_count(x, threshold);
    let xf = x.to_f64() + shift as f64;
    let magnitude_bits = (xf * xf.ln()).abs().max(1.0).log2().ceil() as u32;
    let work = bits + 16 + magnitude_bits;
    let x = Float::with_val(work, x);
    let z = Float::with_val(work, &x + shift);
    let mut lg = stirling_ln_gamma(&z, work);
    let mut denom = Float::with_val(work, 1);
    for i in 0..shift {
        denom *= Float::with_val(work, &x + i);
    }
    lg = lg.exp();
    Ok(Float::with_val(bits, lg / denom))
}

/// `ln Gamma(z)` for `z` beyond the asymptotic threshold.
fn stirling_ln_gamma(z: &Float, bits: u32) -> Float {
    let half = Float::with_val(bits, 0.5);
    let mut acc = Float::with_val(bits, z - &half) * z.clone().ln() - z + log2pi_float(bits) * half;
    let z2 = Float::with_val(bits, z * z);
    let mut zpow = z.clone();
    let eps = super::epsilon(bits + 4);
    for j in 1..=4 * bits as usize {
        let b = bernoulli_float(2 * j, bits);
        let denom = (2 * j * (2 * j - 1)) as u32;
        let term = b / Float::with_val(bits, &zpow * denom);
        let done = term.clone().abs() < eps;
        acc += term;
        if done {
            break;
        }
        zpow *= &z2;
    }
    acc
}

pub(crate) fn digamma_float(x: &Float, bits: u32) -> Result<Float> {
    polygamma_float(0, x, bits)
}

/// `psi^(m)(x)` for `x > 0`.
pub(crate) fn polygamma_float(m: u32, x: &Float, bits: u32) -> Result<Float> {
    if !(x.is_finite() && *x > 0) {
        return Err(Error::Domain(format!("polygamma requires x > 0, got {x}")));
    }
    let threshold = asymptotic_threshold(bits, m);
    let shift = shift_count(x, threshold);
    let work = bits + 16;
    let x = Float::with_val(work, x);
    let z = Float::with_val(work, &x + shift);
    let mut value = polygamma_asymptotic(m, &z, work);
    if m == 0 {
        // psi(x) = psi(x+n) - sum 1/(x+i)
        for i in 0..shift {
            value -= Float::with_val(work, &x + i).recip();
        }
    } else {
        // psi^(m)(x) = psi^(m)(x+n) - (-1)^m m! sum (x+i)^-(m+1)
        let mut tail = Float::new(work);
        for i in 0..shift {
            let t = Float::with_val(work, &x + i);
            tail += t.pow(-(m as i32 + 1));
        }
        let fact = Float::with_val(work, Float::factorial(m));
        tail *= fact;
        if m % 2 == 0 {
            value -= tail;
        } else {
            value += tail;
        }
    }
    Ok(Float::with_val(bits, value))
}

fn polygamma_asymptotic(m: u32, z: &Float, bits: u32) -> Float {
    let eps = super::epsilon(bits + 4);
    let z2 = Float::with_val(bits, z * z);
    if m == 0 {
        // ln z - 1/(2z) - sum B_2j / (2j z^2j)
        let mut acc = z.clone().ln() - Float::with_val(bits, z * 2u32).recip();
        let mut zpow = z2.clone();
        for j in 1..=4 * bits as usize {
            let term = bernoulli_float(2 * j, bits) / Float::with_val(bits, &zpow * (2 * j) as u32);
            let done = term.clone().abs() < eps;
            acc -= term;
            if done {
                break;
            }
            zpow *= &z2;
        }
        return acc;
    }
    // (-1)^(m+1) [ (m-1)!/z^m + m!/(2 z^(m+1)) + sum B_2j (2j+m-1)!/((2j)! z^(2j+m)) ]
    let fact_m1 = Float::with_val(bits, Float::factorial(m - 1));
    let zm = Float::with_val(bits, z.clone().pow(m));
    let mut acc = Float::with_val(bits, &fact_m1 / &zm);
    let lead = acc.clone();
    acc += Float::with_val(bits, &fact_m1 * m) / Float::with_val(bits, &zm * z) / 2u32;
    // ratio (2j+m-1)!/(2j)! built incrementally
    let mut ratio = fact_m1.clone(); // j = 0: (m-1)!/0!
    let mut zpow = Float::with_val(bits, &zm);
    let cutoff = Float::with_val(bits, &eps * lead.abs());
    let mut previous: Option<Float> = None;
    for j in 1..=4 * bits as u64 {
        let a = 2 * j - 1 + m as u64 - 1; // (2j+m-2)
        ratio = ratio * Float::with_val(bits, a) * Float::with_val(bits, a + 1)
            / Float::with_val(bits, (2 * j - 1) * (2 * j));
        zpow *= &z2;
        let term = bernoulli_float(2 * j as usize, bits) * &ratio / &zpow;
        let size = term.clone().abs();
        if let Some(prev) = &previous {
            debug_assert!(size <= *prev || size < cutoff, "asymptotic series diverging");
        }
        acc += term;
        if size < cutoff {
            break;
        }
        previous = Some(size);
    }
    if m % 2 == 0 {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::const_gamma;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn close(a: &Float, b: &Float, tol: &Real) -> bool {
        Float::with_val(a.prec(), a - b).abs() < *tol.as_float()
    }

    fn real(x: f64) -> Real {
        Real::from_f64(x, &ctx())
    }

    #[test]
    fn gamma_examples() {
        let c = ctx();
        let bits = c.working_bits();
        let tol = c.tolerance(1);
        assert!(close(gamma_fn(&real(1.0), &c).unwrap().as_float(), &Float::with_val(bits, 1), &tol));
        assert!(close(gamma_fn(&real(4.0), &c).unwrap().as_float(), &Float::with_val(bits, 6), &tol));
        let sqrt_pi = pi_float(bits).sqrt();
        assert!(close(gamma_fn(&real(0.5), &c).unwrap().as_float(), &sqrt_pi, &tol));
        // Gamma(-1/2) = -2 sqrt(pi)
        let v = gamma_fn(&real(-0.5), &c).unwrap();
        assert!(close(v.as_float(), &(Float::with_val(bits, &sqrt_pi * -2i32)), &tol));
    }

    #[test]
    fn gamma_poles_rejected() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma_fn(&real(x), &ctx()), Err(Error::Pole(_))));
        }
    }

    #[test]
    fn gamma_against_mpfr() {
        let c = ctx();
        let bits = c.working_bits();
        for x in [0.1, 0.75, 2.5, 7.3, 33.25, 61.5, -2.25] {
            let ours = gamma_fn(&real(x), &c).unwrap();
            let mpfr = Float::with_val(bits, x).gamma();
            let rel = Float::with_val(bits, ours.as_float() - &mpfr).abs() / mpfr.abs();
            assert!(rel < c.tolerance(1).to_f64(), "x={x}");
        }
    }

    #[test]
    fn gamma_recurrence() {
        let c = ctx();
        let tol = c.tolerance(3);
        for s in [0.5, 1.3, 2.7, 5.1] {
            let g = gamma_fn(&real(s), &c).unwrap();
            let g1 = gamma_fn(&(&real(s) + &real(1.0)), &c).unwrap();
            let rhs = &real(s) * &g;
            assert!((&g1 - &rhs).abs() < tol, "s={s}");
        }
    }

    #[test]
    fn digamma_examples() {
        let c = ctx();
        let bits = c.working_bits();
        let gamma = const_gamma(&c).to_float(bits);
        let tol = c.tolerance(1);
        assert!(close(digamma(&real(1.0), &c).unwrap().as_float(), &(-gamma.clone()), &tol));
        let psi2 = Float::with_val(bits, 1 - &gamma);
        assert!(close(digamma(&real(2.0), &c).unwrap().as_float(), &psi2, &tol));
        let ln2 = Float::with_val(bits, 2).ln();
        let psi32 = Float::with_val(bits, 2 - &gamma) - ln2 * 2u32;
        assert!(close(digamma(&real(1.5), &c).unwrap().as_float(), &psi32, &tol));
        assert!(digamma(&real(0.0), &c).is_err());
        assert!(digamma(&real(-1.5), &c).is_err());
    }

    #[test]
    fn digamma_against_mpfr_and_recurrence() {
        let c = ctx();
        let bits = c.working_bits();
        let tol = c.tolerance(3);
        for x in [0.01, 0.5, 1.7, 9.0, 40.5, 123.25] {
            let ours = digamma(&real(x), &c).unwrap();
            let mpfr = Float::with_val(bits, x).digamma();
            assert!(close(ours.as_float(), &mpfr, &c.tolerance(1)), "x={x}");
            let next = digamma(&(&real(x) + &real(1.0)), &c).unwrap();
            let step = &next - &ours;
            let recip = &real(1.0) / &real(x);
            assert!((&step - &recip).abs() < tol, "x={x}");
        }
    }

    #[test]
    fn polygamma_known_values() {
        let c = ctx();
        let bits = c.working_bits();
        let pi = pi_float(bits);
        // psi'(1) = pi^2/6, psi''(1) = -2 zeta(3), psi'''(1) = pi^4/15
        let z3 = Float::with_val(bits, 3).zeta();
        let expect = [
            Float::with_val(bits, pi.clone().square() / 6u32),
            Float::with_val(bits, &z3 * -2i32),
            Float::with_val(bits, pi.clone().pow(4u32) / 15u32),
        ];
        for (m, e) in (1..=3).zip(expect.iter()) {
            let v = polygamma(m, &real(1.0), &c).unwrap();
            let rel = Float::with_val(bits, v.as_float() - e).abs() / e.clone().abs();
            assert!(rel < c.tolerance(1).to_f64(), "m={m}");
        }
        assert_eq!(polygamma(0, &real(2.5), &c).unwrap(), digamma(&real(2.5), &c).unwrap());
    }

    #[test]
    fn polygamma_recurrence_high_order() {
        // psi^(m)(x+1) - psi^(m)(x) = (-1)^m m! / x^(m+1)
        let c = ctx();
        let bits = c.working_bits();
        for m in [1u32, 5, 17, 40, 63] {
            for x in [0.75, 3.0, 35.5] {
                let a = polygamma(m, &real(x), &c).unwrap();
                let b = polygamma(m, &real(x + 1.0), &c).unwrap();
                let mut expect = Float::with_val(bits, Float::factorial(m))
                    / Float::with_val(bits, x).pow(m + 1);
                if m % 2 == 1 {
                    expect = -expect;
                }
                let diff = Float::with_val(bits, b.as_float() - a.as_float());
                let rel = Float::with_val(bits, &diff - &expect).abs() / a.as_float().clone().abs();
                assert!(rel < c.tolerance(3).to_f64(), "m={m} x={x}");
            }
        }
    }
}
