//! Generating function `sum H_n e^(-nx) = -ln(1-e^(-x)) / (1-e^(-x))` and
//! the Mellin-transform route to the shifted-sum identity.

use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use super::convergent::{h_euler_float, shifted_float};
use crate::error::{Error, Result};
use crate::real::{gamma_fn_float, integrate_float, Interval, PrecisionContext, QuadOptions, Real};
use crate::zeta::zeta_float;

/// `ln(1 - e^(-x))`, accurate for small and large `x`.
fn log_kernel(x: &Float) -> Float {
    let bits = x.prec();
    if *x < 1 {
        (-Float::with_val(bits, -x).exp_m1()).ln()
    } else {
        (-Float::with_val(bits, -x).exp()).ln_1p()
    }
}

/// `1 - e^(-x)`.
fn denom(x: &Float) -> Float {
    -Float::with_val(x.prec(), -x).exp_m1()
}

fn check_x(x: &Float) -> Result<()> {
    if !(x.is_finite() && *x > 0) {
        return Err(Error::Domain(format!("generating function needs x > 0, got {x}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratingFunctionCheck {
    pub x: Real,
    pub terms: u64,
    pub residual: Real,
    /// Truncation bound `sum_{n>N} n q^n` plus accumulated rounding.
    pub bound: Real,
}

impl GeneratingFunctionCheck {
    pub fn within_bound(&self) -> bool {
        self.residual <= self.bound
    }
}

/// `|sum_{n<=N} H_n e^(-nx) + ln(1-e^(-x))/(1-e^(-x))|`.
pub fn generating_function_residual(x: &Real, terms: u64, ctx: &PrecisionContext) -> Result<Real> {
    Ok(generating_function_check(x, terms, ctx)?.residual)
}

pub fn generating_function_check(
    x: &Real,
    terms: u64,
    ctx: &PrecisionContext,
) -> Result<GeneratingFunctionCheck> {
    let bits = ctx.working_bits();
    let xf = x.to_float(bits);
    check_x(&xf)?;
    let q = Float::with_val(bits, -&xf).exp();
    let mut power = Float::with_val(bits, 1);
    let mut h = Float::new(bits);
    let mut sum = Float::new(bits);
    for n in 1..=terms {
        power *= &q;
        h += Float::with_val(bits, n).recip();
        sum += Float::with_val(bits, &h * &power);
    }
    let closed = log_kernel(&xf) / denom(&xf);
    let residual = Float::with_val(bits, &sum + &closed).abs();

    // H_n <= n, so the tail is at most q^(N+1) ((N+1) - N q) / (1-q)^2
    let one_minus_q = denom(&xf);
    let n = Float::with_val(bits, terms);
    let np1 = Float::with_val(bits, terms + 1);
    let tail = Float::with_val(bits, (&q).pow(terms + 1))
        * (Float::with_val(bits, &np1 - Float::with_val(bits, &n * &q)))
        / Float::with_val(bits, one_minus_q.square_ref());
    let rounding = crate::real::epsilon(bits)
        * Float::with_val(bits, closed.abs_ref())
        * Float::with_val(bits, terms + 4);
    Ok(GeneratingFunctionCheck {
        x: x.clone(),
        terms,
        residual: Real::from_float(residual, ctx),
        bound: Real::from_float(tail + rounding, ctx),
    })
}

/// `|L/D - e^(-x) L/D - L|` with `L = ln(1-e^(-x))`, `D = 1-e^(-x)`.
pub fn generating_function_identity_residual(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let xf = x.to_float(bits);
    check_x(&xf)?;
    let l = log_kernel(&xf);
    let d = denom(&xf);
    let q = Float::with_val(bits, -&xf).exp();
    let first = Float::with_val(bits, &l / &d);
    let middle = Float::with_val(bits, &q * &first);
    Ok(Real::from_float((first - middle - l).abs(), ctx))
}

#[derive(Debug, Clone, Serialize)]
pub struct MellinCheck {
    pub s: Real,
    /// `int x^(s-1) L/D`, expected `-Gamma(s) h(s)`.
    pub first_integral: Real,
    /// `int x^(s-1) e^(-x) L/D`, expected `-Gamma(s) sum H_n/(n+1)^s`.
    pub middle_integral: Real,
    /// `int x^(s-1) L`, expected `-Gamma(s) zeta(s+1)`.
    pub log_integral: Real,
    pub first_residual: Real,
    pub middle_residual: Real,
    pub log_residual: Real,
    /// `|I_first - I_middle - I_log| / Gamma(s)`.
    pub combined_residual: Real,
    /// The same identity through the series evaluations.
    pub direct_residual: Real,
    /// Largest level-to-level change across the three integrals.
    pub quadrature_error: Real,
}

impl MellinCheck {
    pub fn max_residual(&self) -> Real {
        [&self.first_residual, &self.middle_residual, &self.log_residual]
            .into_iter()
            .fold(self.first_residual.clone(), |m, r| if *r > m { r.clone() } else { m })
    }
}

pub fn mellin_fundamental_check(s: &Real, ctx: &PrecisionContext) -> Result<MellinCheck> {
    let bits = ctx.working_bits();
    let sf = s.to_float(bits);
    if !(sf.is_finite() && sf > 1) {
        return Err(Error::Domain(format!("Mellin check needs s > 1, got {sf}")));
    }
    let sm1 = Float::with_val(bits, &sf - 1u32);
    let tol = ctx.tolerance(0).to_float(bits);
    let rel = Float::new(bits);
    let opts = QuadOptions::default();
    let interval = Interval::from(0.0);
    let weight = |x: &Float| Float::with_val(bits, x.pow(&sm1));

    let first = integrate_float(&|x: &Float| weight(x) * log_kernel(x) / denom(x), &interval, bits, &tol, &rel, opts)?;
    let middle = integrate_float(
        &|x: &Float| weight(x) * Float::with_val(bits, -x).exp() * log_kernel(x) / denom(x),
        &interval,
        bits,
        &tol,
        &rel,
        opts,
    )?;
    let log = integrate_float(&|x: &Float| weight(x) * log_kernel(x), &interval, bits, &tol, &rel, opts)?;

    let gamma = gamma_fn_float(&sf, bits)?;
    let h = h_euler_float(&sf, bits)?;
    let shifted = shifted_float(&sf, bits)?;
    let zeta = zeta_float(&Float::with_val(bits, &sf + 1u32), bits)?;

    let resid = |value: &Float, series: &Float| {
        let expected = Float::with_val(bits, &gamma * series) * -1i32;
        Real::from_float(Float::with_val(bits, value - expected).abs(), ctx)
    };
    let combined = (Float::with_val(bits, &first.value - &middle.value) - &log.value).abs() / &gamma;
    let direct = (Float::with_val(bits, &shifted - &h) + &zeta).abs();
    let qerr = [&first.error, &middle.error, &log.error]
        .into_iter()
        .fold(Float::new(bits), |m, e| if *e > m { e.clone() } else { m });

    Ok(MellinCheck {
        s: s.clone(),
        first_residual: resid(&first.value, &h),
        middle_residual: resid(&middle.value, &shifted),
        log_residual: resid(&log.value, &zeta),
        first_integral: Real::from_float(first.value, ctx),
        middle_integral: Real::from_float(middle.value, ctx),
        log_integral: Real::from_float(log.value, ctx),
        combined_residual: Real::from_float(combined, ctx),
        direct_residual: Real::from_float(direct, ctx),
        quadrature_error: Real::from_float(qerr, ctx),
    })
}
