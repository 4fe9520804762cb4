//! Arbitrary-precision reals on top of MPFR, the constants and special
//! functions the other modules need, and a double-exponential quadrature.

mod complex;
mod constants;
mod precision;
mod quad;
mod special;

pub use complex::ComplexReal;
pub use constants::{const_gamma, const_log2pi, const_pi};
pub(crate) use constants::{gamma_float, log2pi_float, pi_float};
pub use precision::{PrecisionContext, Real};


pub use quad::{integrate, integrate_with, Interval, QuadOptions, Quadrature};
pub(crate) use quad::integrate_float;
pub use special::{digamma, gamma_fn, polygamma};
pub(crate) use special::{bernoulli_float, gamma_fn_float, polygamma_float};

use rug::Float;

/// Float at `bits` from an exact rational.
pub(crate) fn rational_to_float(q: &crate::exact::Rational, bits: u32) -> Float {
    let num = bigint_to_integer(q.numer());
    let den = bigint_to_integer(q.denom());
    Float::with_val(bits, num) / Float::with_val(bits, den)
}

fn bigint_to_integer(n: &num_bigint::BigInt) -> rug::Integer {
    let (sign, digits) = n.to_u32_digits();
    let mut out = rug::Integer::from_digits(&digits, rug::integer::Order::Lsf);
    if sign == num_bigint::Sign::Minus {
        out = -out;
    }
    out
}

/// Exact integer test for a float argument.
pub(crate) fn as_integer(x: &Float) -> Option<i64> {
    if x.is_integer() {
        x.to_i32_saturating().map(i64::from).filter(|v| v.unsigned_abs() < (1 << 30))
    } else {
        None
    }
}

pub(crate) fn epsilon(bits: u32) -> Float {
    Float::with_val(bits, Float::i_exp(1, -(bits as i32)))
}
