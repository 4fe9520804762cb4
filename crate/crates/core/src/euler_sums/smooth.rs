//! Smooth extension `H(t) = gamma + psi(t+1)` of the harmonic numbers and
//! derivatives of `H(t) (t + c)^a` through the product rule.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::real::{bernoulli_float, gamma_float, polygamma_float};

pub(crate) fn hsmooth_float(t: &Float, bits: u32) -> Result<Float> {
    if !(t.is_finite() && *t > 0) {
        return Err(Error::Domain(format!("smooth harmonic number needs t > 0, got {t}")));
    }
    let arg = Float::with_val(bits, t + 1u32);
    Ok(gamma_float(bits) + polygamma_float(0, &arg, bits)?)
}

/// `f(t) = H(t) (t + shift)^exponent`.
#[derive(Debug, Clone)]
pub(crate) struct HarmonicPower {
    pub exponent: Float,
    pub shift: u32,
}

impl HarmonicPower {
    pub fn new(exponent: Float, shift: u32) -> Self {
        HarmonicPower { exponent, shift }
    }

    pub fn value(&self, t: &Float, bits: u32) -> Result<Float> {
        let base = Float::with_val(bits, t + self.shift);
        Ok(hsmooth_float(t, bits)? * base.pow(&self.exponent))
    }

    pub fn derivatives_at(&self, t: &Float, bits: u32) -> DerivativeTable<'_> {
        DerivativeTable {
            f: self,
            t: Float::with_val(bits, t),
            base: Float::with_val(bits, t + self.shift),
            bits,
            harmonic: Vec::new(),
            power: Vec::new(),
        }
    }
}

/// Lazily grown table of `f^(n)(t)`.
pub(crate) struct DerivativeTable<'a> {
    f: &'a HarmonicPower,
    t: Float,
    base: Float,
    bits: u32,
    harmonic: Vec<Float>,
    power: Vec<Float>,
}

impl DerivativeTable<'_> {
    fn extend(&mut self, n: usize) -> Result<()> {
        let bits = self.bits;
        while self.harmonic.len() <= n {
            let i = self.harmonic.len() as u32;
            let h = if i == 0 {
                hsmooth_float(&self.t, bits)?
            } else {
                let arg = Float::with_val(bits, &self.t + 1u32);
                polygamma_float(i, &arg, bits)?
            };
            self.harmonic.push(h);
        }
        while self.power.len() <= n {
            // a (a-1) ... (a-r+1) (t+c)^(a-r)
            let r = self.power.len() as u32;
            let mut falling = Float::with_val(bits, 1);
            for i in 0..r {
                falling *= Float::with_val(bits, &self.f.exponent - i);
            }
            let p = if falling.is_zero() {
                falling
            } else {
                let e = Float::with_val(bits, &self.f.exponent - r);
                falling * Float::with_val(bits, (&self.base).pow(&e))
            };
            self.power.push(p);
        }
        Ok(())
    }

    pub fn derivative(&mut self, n: usize) -> Result<Float> {
        self.extend(n)?;
        let bits = self.bits;
        let mut acc = Float::new(bits);
        let mut binom = Float::with_val(bits, 1);
        for i in 0..=n {
            if i > 0 {
                binom = binom * (n - i + 1) as u32 / i as u32;
            }
            if !self.power[n - i].is_zero() {
                acc += Float::with_val(bits, &binom * &self.harmonic[i]) * &self.power[n - i];
            }
        }
        Ok(acc)
    }
}

/// `sum_{j=1}^{J} B_2j/(2j)! f^(2j-1)(t)` for a fixed `J`.
pub(crate) fn em_corrections_fixed(table: &mut DerivativeTable<'_>, j_count: u32, bits: u32) -> Result<Float> {
    let mut acc = Float::new(bits);
    let mut fact = Float::with_val(bits, 1);
    for j in 1..=j_count as usize {
        fact *= ((2 * j - 1) * (2 * j)) as u32;
        let d = table.derivative(2 * j - 1)?;
        acc += bernoulli_float(2 * j, bits) / &fact * d;
    }
    Ok(acc)
}

/// Same sum with `J` grown until the next correction is below `eps`.
pub(crate) fn em_corrections_adaptive(
    table: &mut DerivativeTable<'_>,
    eps: &Float,
    bits: u32,
) -> Result<Float> {
    let mut acc = Float::new(bits);
    let mut fact = Float::with_val(bits, 1);
    let mut previous: Option<Float> = None;
    let mut rising = 0;
    for j in 1..=bits as usize {
        fact *= ((2 * j - 1) * (2 * j)) as u32;
        let d = table.derivative(2 * j - 1)?;
        let term = bernoulli_float(2 * j, bits) / &fact * d;
        let size = Float::with_val(bits, term.abs_ref());
        acc += term;
        if size < *eps {
            return Ok(acc);
        }
        // a single larger term can come from cancellation in the derivative
        if let Some(p) = &previous {
            rising = if size > *p { rising + 1 } else { 0 };
            if j > 3 && rising >= 2 {
                break;
            }
        }
        previous = Some(size);
    }
    Err(Error::NoConvergence {
        what: "Euler-Maclaurin tail",
        estimate: acc.to_string_radix(10, Some(20)),
        error_bound: previous.map(|p| p.to_string_radix(10, Some(6))).unwrap_or_default(),
    })
}
