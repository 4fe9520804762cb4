//! Bernoulli interpolation through the Hankel contour:
//!
//! ```text
//! -B_a / Gamma(a+1) = (1/2 pi i) * oint_C z^(-a) e^z / (1 - e^z) dz
//! ```
//!
//! `C` comes in from `-T` below the cut, circles the origin counterclockwise
//! at radius `rho`, and returns to `-T` above it. By conjugate symmetry the
//! circle contributes `(1/pi) int_0^pi Re[z^(1-a) g(z)] d theta`, and the two
//! rays combine into `(sin(pi a)/pi) int_rho^T r^(-a) / (e^r - 1) dr`.
//!
//! The overall sign is fixed by requiring `B_1 = +1/2`.

use std::sync::OnceLock;

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::real::{
    as_integer, gamma_fn_float, integrate_float, pi_float, polygamma_float, ComplexReal, Interval,
    PrecisionContext, QuadOptions, Real,
};
use crate::zeta::{zeta_float, zeta_prime_float};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec {
    pub radius: f64,
    /// Rays stop at `Re z = -truncation`.
    pub truncation: f64,
    /// Minimum quadrature nodes on the circle.
    pub nodes_circle: usize,
    /// Minimum quadrature nodes on each ray.
    pub nodes_ray: usize,
}

impl ContourSpec {
    pub fn new(radius: f64, truncation: f64, nodes_circle: usize, nodes_ray: usize) -> Result<Self> {
        let spec = ContourSpec { radius, truncation, nodes_circle, nodes_ray };
        spec.validate()?;
        Ok(spec)
    }

    /// Radius 1, `T = digits ln 10 + 10`.
    pub fn for_precision(ctx: &PrecisionContext) -> Self {
        ContourSpec {
            radius: 1.0,
            truncation: ctx.digits() as f64 * std::f64::consts::LN_10 + 10.0,
            nodes_circle: 16,
            nodes_ray: 16,
        }
    }

    pub fn with_radius(self, radius: f64) -> Self {
        ContourSpec { radius, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let two_pi = 2.0 * std::f64::consts::PI;
        if !(self.radius > 0.0 && self.radius < two_pi) {
            return Err(Error::InvalidArgument(format!(
                "contour radius must lie in (0, 2 pi), got {}",
                self.radius
            )));
        }
        if !(self.truncation > self.radius && self.truncation.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "ray truncation {} must exceed the radius",
                self.truncation
            )));
        }
        if self.nodes_circle == 0 || self.nodes_ray == 0 {
            return Err(Error::InvalidArgument("node counts must be positive".into()));
        }
        Ok(())
    }

    /// Bound on the dropped ray tail `int_T^inf r^(-a)/(e^r - 1) dr` for
    /// `a >= 0`: `T^(-a) e^(-T) / (1 - e^(-T))`.
    pub fn truncation_bound(&self, a: f64) -> f64 {
        let t = self.truncation;
        t.powf(-a) * (-t).exp() / (1.0 - (-t).exp())
    }
}

/// `J(a)` and, if asked, `dJ/da`, unsigned.
struct Contour {
    value: Float,
    derivative: Option<Float>,
}

fn contour(a: &Float, spec: &ContourSpec, with_derivative: bool, bits: u32) -> Result<Contour> {
    spec.validate()?;
    let pi = pi_float(bits);
    let rho = Float::with_val(bits, spec.radius);
    let tol = Float::with_val(bits, Float::i_exp(1, -(bits as i32) + 24));
    let rel = Float::new(bits);
    let one_minus_a = Float::with_val(bits, 1u32 - a);
    let ln_rho = rho.clone().ln();

    // z^(1-a) e^z / (1 - e^z) at z = rho e^{i theta}, times -ln z if needed
    let circle_term = |theta: &Float, derivative: bool| -> Float {
        let z = ComplexReal::from_polar(&rho, theta);
        let ez = z.exp();
        let one = ComplexReal::from_real(Float::with_val(bits, 1));
        let g = &ez / &(&one - &ez);
        let zpow = ComplexReal::from_polar(
            &Float::with_val(bits, (&rho).pow(&one_minus_a)),
            &Float::with_val(bits, &one_minus_a * theta),
        );
        let mut term = &zpow * &g;
        if derivative {
            let ln_z = ComplexReal::new(-ln_rho.clone(), -theta.clone());
            term = &term * &ln_z;
        }
        term.re
    };
    let circle_opts = QuadOptions { min_nodes: spec.nodes_circle, ..QuadOptions::default() };
    let circle_iv = Interval::Finite { a: Float::new(bits), b: pi.clone() };
    let circle = integrate_float(&|t: &Float| circle_term(t, false), &circle_iv, bits, &tol, &rel, circle_opts)?;
    let mut value = circle.value / &pi;

    let ray_opts = QuadOptions { min_nodes: spec.nodes_ray, ..QuadOptions::default() };
    let ray_iv = Interval::Finite { a: rho.clone(), b: Float::with_val(bits, spec.truncation) };
    let ray_weight = |r: &Float| Float::with_val(bits, r.pow(&-a.clone())) / Float::with_val(bits, r.exp_m1_ref());
    let integer = as_integer(a).is_some();
    let pia = Float::with_val(bits, &pi * a);
    let sin_pia = pia.clone().sin();
    let ray = if integer {
        None
    } else {
        Some(integrate_float(&ray_weight, &ray_iv, bits, &tol, &rel, ray_opts)?.value)
    };
    if let Some(r) = &ray {
        value += Float::with_val(bits, &sin_pia * r) / &pi;
    }

    let derivative = if with_derivative {
        let c = integrate_float(&|t: &Float| circle_term(t, true), &circle_iv, bits, &tol, &rel, circle_opts)?;
        let mut d = c.value / &pi;
        // d/da of (sin(pi a)/pi) int r^-a w: cos(pi a) int r^-a w - (sin(pi a)/pi) int ln r r^-a w
        let plain = match ray {
            Some(r) => r,
            None => integrate_float(&ray_weight, &ray_iv, bits, &tol, &rel, ray_opts)?.value,
        };
        d += pia.clone().cos() * plain;
        if !integer {
            let logged = integrate_float(
                &|r: &Float| ray_weight(r) * Float::with_val(bits, r.ln_ref()),
                &ray_iv,
                bits,
                &tol,
                &rel,
                ray_opts,
            )?;
            d -= Float::with_val(bits, &sin_pia * logged.value) / &pi;
        }
        Some(d)
    } else {
        None
    };
    Ok(Contour { value, derivative })
}

/// `+1` or `-1`, chosen so that the contour reproduces `B_1 = +1/2`.
pub fn orientation_sign() -> i32 {
    static SIGN: OnceLock<i32> = OnceLock::new();
    *SIGN.get_or_init(|| {
        let bits = 128;
        let spec = ContourSpec { radius: 1.0, truncation: 40.0, nodes_circle: 1, nodes_ray: 1 };
        let j = contour(&Float::with_val(bits, 1), &spec, false, bits).expect("anchor contour converges");
        // B_1 = -Gamma(2) J(1)
        if j.value < 0 {
            1
        } else {
            -1
        }
    })
}

fn check_a(a: &Float) -> Result<()> {
    if !(a.is_finite() && *a > 0) {
        return Err(Error::Domain(format!("contour needs exponent a > 0, got {a}")));
    }
    Ok(())
}

/// `B_(s+1)` from the contour, for `s > -1`.
pub fn bernoulli_interp(s: &Real, spec: &ContourSpec, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let a = Float::with_val(bits, s.to_float(bits) + 1u32);
    Ok(Real::from_float(bernoulli_at(&a, spec, bits)?, ctx))
}

/// `B_a = -Gamma(a+1) J(a)`.
fn bernoulli_at(a: &Float, spec: &ContourSpec, bits: u32) -> Result<Float> {
    check_a(a)?;
    let j = contour(a, spec, false, bits)?;
    let gamma = gamma_fn_float(&Float::with_val(bits, a + 1u32), bits)?;
    Ok(-gamma * j.value * orientation_sign())
}

/// `|B_s + s zeta(1-s)|` for `s > 0`.
pub fn lemma3_residual(s: &Real, spec: &ContourSpec, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let sf = s.to_float(bits);
    let b = bernoulli_at(&sf, spec, bits)?;
    let zeta = zeta_float(&Float::with_val(bits, 1u32 - &sf), bits)?;
    Ok(Real::from_float((b + sf * zeta).abs(), ctx))
}

/// `B'_s = -Gamma(s+1) [psi(s+1) J(s) + J'(s)]` for `s > 0`.
pub fn bernoulli_prime_interp(s: &Real, spec: &ContourSpec, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let a = s.to_float(bits);
    check_a(&a)?;
    let j = contour(&a, spec, true, bits)?;
    let a1 = Float::with_val(bits, &a + 1u32);
    let gamma = gamma_fn_float(&a1, bits)?;
    let psi = polygamma_float(0, &a1, bits)?;
    let inner = psi * j.value + j.derivative.expect("derivative requested");
    Ok(Real::from_float(-gamma * inner * orientation_sign(), ctx))
}

/// `-zeta(1-s) + s zeta'(1-s)` from the zeta engine.
pub fn bernoulli_prime_oracle(s: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.working_bits();
    let sf = s.to_float(bits);
    let arg = Float::with_val(bits, 1u32 - &sf);
    let v = sf * zeta_prime_float(&arg, bits)? - zeta_float(&arg, bits)?;
    Ok(Real::from_float(v, ctx))
}
