//! Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh
//! on `[a, inf)`. Step size is halved level by level, reusing all earlier
//! nodes, until two successive levels agree.

use rayon::prelude::*;
use rug::Float;

use super::constants::pi_float;
use super::precision::{PrecisionContext, Real};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Interval {
    Finite { a: Float, b: Float },
    /// `[a, inf)`
    SemiInfinite { a: Float },
}

impl Interval {
    pub fn finite(a: f64, b: f64) -> Self {
        Interval::Finite { a: Float::with_val(64, a), b: Float::with_val(64, b) }
    }

    pub fn from(a: f64) -> Self {
        Interval::SemiInfinite { a: Float::with_val(64, a) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadOptions {
    /// Refinement does not stop before at least this many nodes are used.
    pub min_nodes: usize,
    pub max_level: u32,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { min_nodes: 0, max_level: 12 }
    }
}

#[derive(Debug, Clone)]
pub struct Quadrature {
    pub value: Real,
    /// Difference between the last two refinement levels.
    pub error: Real,
    pub level: u32,
    pub evaluations: usize,
}

/// Integrates `f` over `interval` to `10^(5 - digits)`.
pub fn integrate<F>(f: F, interval: &Interval, ctx: &PrecisionContext) -> Result<Quadrature>
where
    F: Fn(&Float) -> Float + Sync,
{
    integrate_with(f, interval, ctx, QuadOptions::default())
}

pub fn integrate_with<F>(
    f: F,
    interval: &Interval,
    ctx: &PrecisionContext,
    opts: QuadOptions,
) -> Result<Quadrature>
where
    F: Fn(&Float) -> Float + Sync,
{
    let bits = ctx.working_bits();
    let tol = ctx.tolerance(5).to_float(bits);
    let raw = integrate_float(&f, interval, bits, &tol, &Float::new(bits), opts)?;
    Ok(Quadrature {
        value: Real::from_float(raw.value, ctx),
        error: Real::from_float(raw.error, ctx),
        level: raw.level,
        evaluations: raw.evaluations,
    })
}

pub(crate) struct RawQuadrature {
    pub value: Float,
    pub error: Float,
    pub level: u32,
    pub evaluations: usize,
}

/// Stops once the level-to-level change is below `max(abs_tol, rel_tol * |I|)`.
pub(crate) fn integrate_float<F>(
    f: &F,
    interval: &Interval,
    bits: u32,
    abs_tol: &Float,
    rel_tol: &Float,
    opts: QuadOptions,
) -> Result<RawQuadrature>
where
    F: Fn(&Float) -> Float + Sync,
{
    let rule = Rule::new(interval, bits);
    let span = rule.t_hi - rule.t_lo;
    let min_level = (0..opts.max_level)
        .find(|&l| span * f64::from(1u32 << l) + 1.0 >= opts.min_nodes as f64)
        .unwrap_or(opts.max_level)
        .max(3);

    let mut raw_sum = Float::new(bits);
    let mut previous: Option<Float> = None;
    let mut evaluations = 0usize;
    let mut last_err = Float::with_val(bits, f64::INFINITY);
    for level in 0..=opts.max_level {
        let h = 0.5f64.powi(level as i32);
        let ts: Vec<f64> = if level == 0 {
            let lo = rule.t_lo.ceil() as i64;
            let hi = rule.t_hi.floor() as i64;
            (lo..=hi).map(|k| k as f64).collect()
        } else {
            let lo = ((rule.t_lo / h - 1.0) / 2.0).ceil() as i64;
            let hi = ((rule.t_hi / h - 1.0) / 2.0).floor() as i64;
            (lo..=hi).map(|i| (2 * i + 1) as f64 * h).collect()
        };
        evaluations += ts.len();
        let terms: Vec<Float> = ts.par_iter().filter_map(|&t| rule.node(t, f)).collect();
        for term in terms {
            raw_sum += term;
        }
        let estimate = Float::with_val(bits, &raw_sum * h);
        if let Some(prev) = &previous {
            let err = Float::with_val(bits, &estimate - prev).abs();
            let target = Float::with_val(bits, rel_tol * Float::with_val(bits, estimate.abs_ref()));
            let target = if target > *abs_tol { target } else { abs_tol.clone() };
            if level >= min_level && err <= target {
                return Ok(RawQuadrature { value: estimate, error: err, level, evaluations });
            }
            last_err = err;
        }
        previous = Some(estimate);
    }
    Err(Error::NoConvergence {
        what: "quadrature",
        estimate: previous.map(|p| p.to_string_radix(10, Some(20))).unwrap_or_default(),
        error_bound: last_err.to_string_radix(10, Some(6)),
    })
}

struct Rule {
    bits: u32,
    half_pi: Float,
    kind: RuleKind,
    t_lo: f64,
    t_hi: f64,
}

enum RuleKind {
    TanhSinh { a: Float, b: Float, half_width: Float },
    ExpSinh { a: Float },
}

impl Rule {
    fn new(interval: &Interval, bits: u32) -> Self {
        let half_pi = pi_float(bits) / 2u32;
        let decay = bits as f64 * std::f64::consts::LN_2 + 30.0;
        match interval {
            Interval::Finite { a, b } => {
                let a = Float::with_val(bits, a);
                let b = Float::with_val(bits, b);
                let half_width = Float::with_val(bits, &b - &a) / 2u32;
                let t = (2.0 * decay / std::f64::consts::PI).asinh();
                Rule { bits, half_pi, kind: RuleKind::TanhSinh { a, b, half_width }, t_lo: -t, t_hi: t }
            }
            Interval::SemiInfinite { a } => {
                let a = Float::with_val(bits, a);
                let t_lo = -(2.0 * decay / std::f64::consts::PI).asinh();
                let t_hi = (2.0 * (decay + 100.0).ln() / std::f64::consts::PI + 0.5).asinh();
                Rule { bits, half_pi, kind: RuleKind::ExpSinh { a }, t_lo, t_hi }
            }
        }
    }

    /// `w(t) f(x(t))`, or `None` when the node collapses onto an endpoint.
    fn node<F: Fn(&Float) -> Float>(&self, t: f64, f: &F) -> Option<Float> {
        let bits = self.bits;
        let t = Float::with_val(bits, t);
        let u = Float::with_val(bits, &self.half_pi * t.clone().sinh());
        let dudt = Float::with_val(bits, &self.half_pi * t.cosh());
        match &self.kind {
            RuleKind::TanhSinh { a, b, half_width } => {
                // distance to the nearer endpoint: d * 2 / (e^{2|u|} + 1)
                let e = (u.clone().abs() * 2u32).exp();
                let gap = Float::with_val(bits, half_width * 2u32) / (e + 1u32);
                let x = if u.is_sign_negative() {
                    Float::with_val(bits, a + &gap)
                } else {
                    Float::with_val(bits, b - &gap)
                };
                if x == *a || x == *b || gap.is_zero() {
                    return None;
                }
                let cosh_u = u.cosh();
                let w = Float::with_val(bits, half_width * &dudt) / cosh_u.square();
                Some(w * f(&x))
            }
            RuleKind::ExpSinh { a } => {
                let e = u.exp();
                let x = Float::with_val(bits, a + &e);
                if x == *a || e.is_zero() {
                    return None;
                }
                let w = dudt * e;
                Some(w * f(&x))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(f: impl Fn(&Float) -> Float + Sync, iv: Interval, exact: f64) {
        let ctx = PrecisionContext::default();
        let q = integrate(f, &iv, &ctx).unwrap();
        let bits = ctx.working_bits();
        let true_err = Float::with_val(bits, q.value.as_float() - exact).abs();
        assert!(true_err < *ctx.tolerance(5).as_float(), "err {true_err}");
        assert!(true_err <= *q.error.as_float(), "estimate {} does not bound {}", q.error, true_err);
    }

    #[test]
    fn trivial_integrals() {
        check(|x| x.clone(), Interval::finite(0.0, 1.0), 0.5);
        check(|x| Float::with_val(x.prec(), -x).exp(), Interval::from(0.0), 1.0);
        check(|x| Float::with_val(x.prec(), -x).exp() * x, Interval::from(0.0), 1.0);
    }

    #[test]
    fn endpoint_singularities() {
        let ctx = PrecisionContext::default();
        let bits = ctx.working_bits();
        // int_0^1 ln x dx = -1 ; int_0^1 x^{-1/2} dx = 2
        let q = integrate(|x| x.clone().ln(), &Interval::finite(0.0, 1.0), &ctx).unwrap();
        assert!(Float::with_val(bits, q.value.as_float() + 1).abs() < *ctx.tolerance(5).as_float());
        let q = integrate(|x| x.clone().sqrt().recip(), &Interval::finite(0.0, 1.0), &ctx).unwrap();
        assert!(Float::with_val(bits, q.value.as_float() - 2).abs() < *ctx.tolerance(5).as_float());
        // int_0^inf ln(x) e^{-x} dx = -gamma
        let q = integrate(
            |x| x.clone().ln() * Float::with_val(x.prec(), -x).exp(),
            &Interval::from(0.0),
            &ctx,
        )
        .unwrap();
        let g = crate::real::const_gamma(&ctx);
        assert!((&q.value + &g).abs() < ctx.tolerance(5));
    }

    #[test]
    fn non_convergence_is_reported() {
        let ctx = PrecisionContext::default();
        let opts = QuadOptions { min_nodes: 0, max_level: 4 };
        // oscillatory integrand, far too few levels
        let r = integrate_with(|x| Float::with_val(x.prec(), x * 200u32).sin(), &Interval::finite(0.0, 3.0), &ctx, opts);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }
}
