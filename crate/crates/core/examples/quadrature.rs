//! Double-exponential quadrature on finite and half-infinite intervals.

use harmonic_zeta::real::{integrate, Interval, PrecisionContext};
use rug::Float;

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(40)?;

    // int_0^1 ln(x) / (1 - x) dx = -pi^2/6, singular at both ends
    let q = integrate(
        |x: &Float| {
            let one_minus = Float::with_val(x.prec(), 1 - x);
            Float::with_val(x.prec(), x.ln_ref()) / one_minus
        },
        &Interval::finite(0.0, 1.0),
        &ctx,
    )?;
    println!("int_0^1 ln x/(1-x) = {}  (level {}, {} nodes)", q.value, q.level, q.evaluations);

    // int_0^inf x^3 / (e^x - 1) dx = pi^4/15
    let q = integrate(
        |x: &Float| Float::with_val(x.prec(), x * x) * x / Float::with_val(x.prec(), x.exp_m1_ref()),
        &Interval::from(0.0),
        &ctx,
    )?;
    println!("int_0^inf x^3/(e^x-1) = {}  (error estimate {})", q.value, q.error.to_sci_string(3));
    Ok(())
}
