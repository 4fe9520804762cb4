use std::collections::HashMap;
use std::sync::Mutex;

use rug::float::Constant;
use rug::Float;

use super::precision::{PrecisionContext, Real};

pub fn const_pi(ctx: &PrecisionContext) -> Real {
    Real::from_float(pi_float(ctx.working_bits()), ctx)
}

/// Euler–Mascheroni constant.
pub fn const_gamma(ctx: &PrecisionContext) -> Real {
    Real::from_float(gamma_float(ctx.working_bits()), ctx)
}

pub fn const_log2pi(ctx: &PrecisionContext) -> Real {
    Real::from_float(log2pi_float(ctx.working_bits()), ctx)
}

pub(crate) fn pi_float(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi)
}

pub(crate) fn log2pi_float(bits: u32) -> Float {
    let two_pi = pi_float(bits + 8) * 2u32;
    Float::with_val(bits, two_pi.ln())
}

static GAMMA_CACHE: Mutex<Option<HashMap<u32, Float>>> = Mutex::new(None);

pub(crate) fn gamma_float(bits: u32) -> Float {
    let mut guard = GAMMA_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    let cache = guard.get_or_insert_with(HashMap::new);
    if let Some(g) = cache.get(&bits) {
        return g.clone();
    }
    let g = euler_gamma_brent_mcmillan(bits);
    cache.insert(bits, g.clone());
    g
}

/// Brent–McMillan: with `A = sum (n^k/k!)^2 (H_k - ln n)` and
/// `B = sum (n^k/k!)^2`, `gamma = A/B + O(e^{-4n})`.
pub(crate) fn euler_gamma_brent_mcmillan(bits: u32) -> Float {
    let n = (bits as f64 * std::f64::consts::LN_2 / 4.0).ceil() as u32 + 2;
    // terms peak near e^{2n}
    let work = bits + (2.0 * n as f64 * std::f64::consts::LOG2_E).ceil() as u32 + 16;
    let n2 = Float::with_val(work, n) * n;
    let mut b_term = Float::with_val(work, 1);
    let mut a_term = -Float::with_val(work, n).ln();
    let mut a_sum = a_term.clone();
    let mut b_sum = b_term.clone();
    let cutoff = Float::with_val(work, Float::i_exp(1, -(work as i32)));
    let mut k = 1u32;
    loop {
        b_term = b_term * &n2 / (k * k);
        a_term = (a_term * &n2 / k + &b_term) / k;
        a_sum += &a_term;
        b_sum += &b_term;
        let scale = Float::with_val(work, &cutoff * &b_sum);
        if k > n && b_term < scale && Float::with_val(work, a_term.abs_ref()) < scale {
            break;
        }
        k += 1;
    }
    Float::with_val(bits, a_sum / b_sum)
}
