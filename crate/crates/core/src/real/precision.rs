use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Decimal working precision carried explicitly through every evaluation.
///
/// Routines compute at `digits + guard` and round their results to `digits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext { digits: 50, guard: 10 }
    }
}

impl PrecisionContext {
    pub const MIN_DIGITS: u32 = 15;
    pub const DEFAULT_GUARD: u32 = 10;

    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least {} digits, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        Ok(PrecisionContext { digits, guard })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Same target precision with the guard digits doubled.
    pub fn escalated(&self) -> Self {
        PrecisionContext { digits: self.digits, guard: self.guard * 2 }
    }

    /// Twice the target precision, same guard.
    pub fn doubled(&self) -> Self {
        PrecisionContext { digits: self.digits * 2, guard: self.guard }
    }

    /// Binary precision used internally.
    pub fn working_bits(&self) -> u32 {
        ((self.digits + self.guard) as f64 * LOG2_10).ceil() as u32 + 8
    }

    /// Binary precision of returned values.
    pub fn output_bits(&self) -> u32 {
        (self.digits as f64 * LOG2_10).ceil() as u32 + 4
    }

    /// `10^(offset - digits)`, the shape every tolerance in this crate takes.
    pub fn tolerance(&self, offset: i32) -> Real {
        let exp = offset - self.digits as i32;
        let f = Float::with_val(self.working_bits(), exp).exp10();
        Real::from_float(f, self)
    }

    /// `10^(-digits/2)`.
    pub fn half_tolerance(&self) -> Real {
        let f = Float::with_val(self.working_bits(), -(self.digits as f64) / 2.0).exp10();
        Real::from_float(f, self)
    }
}

/// Arbitrary-precision real tagged with the decimal precision it is good to.
///
/// Combining two values produced under different precisions yields a value at
/// the smaller precision with [`Real::is_mixed`] set.
#[derive(Debug, Clone)]
pub struct Real {
    value: Float,
    digits: u32,
    mixed: bool,
}

impl Real {
    /// Rounds `value` to the context's output precision.
    pub fn from_float(value: Float, ctx: &PrecisionContext) -> Self {
        let mut value = value;
        value.set_prec(ctx.output_bits());
        Real { value, digits: ctx.digits, mixed: false }
    }

    pub fn from_f64(x: f64, ctx: &PrecisionContext) -> Self {
        Real::from_float(Float::with_val(ctx.working_bits(), x), ctx)
    }

    pub fn from_i64(x: i64, ctx: &PrecisionContext) -> Self {
        Real::from_float(Float::with_val(ctx.working_bits(), x), ctx)
    }

    pub fn from_rational(q: &Rational, ctx: &PrecisionContext) -> Self {
        Real::from_float(super::rational_to_float(q, ctx.working_bits()), ctx)
    }

    /// Parses a decimal literal such as `"1.25"` or `"-3e-2"`.
    pub fn parse(s: &str, ctx: &PrecisionContext) -> Result<Self> {
        let parsed = Float::parse(s)
            .map_err(|e| Error::InvalidArgument(format!("bad decimal {s:?}: {e}")))?;
        Ok(Real::from_float(Float::with_val(ctx.working_bits(), parsed), ctx))
    }

    pub fn as_float(&self) -> &Float {
        &self.value
    }

    pub fn into_float(self) -> Float {
        self.value
    }

    /// The value widened to `bits` for further internal computation.
    pub fn to_float(&self, bits: u32) -> Float {
        Float::with_val(bits, &self.value)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn is_mixed(&self) -> bool {
        self.mixed
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn abs(&self) -> Real {
        Real { value: self.value.clone().abs(), digits: self.digits, mixed: self.mixed }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Decimal rendering with as many significant digits as the value carries.
    pub fn to_decimal_string(&self) -> String {
        self.value.to_string_radix(10, Some(self.digits as usize))
    }

    /// Short scientific rendering for residual tables.
    pub fn to_sci_string(&self, sig: usize) -> String {
        if self.value.is_zero() {
            return "0".into();
        }
        self.value.to_string_radix(10, Some(sig))
    }

    fn combine(&self, other: &Real, value: impl FnOnce(u32) -> Float) -> Real {
        let digits = self.digits.min(other.digits);
        let bits = self.value.prec().min(other.value.prec());
        Real {
            value: value(bits),
            digits,
            mixed: self.mixed || other.mixed || self.digits != other.digits,
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

#[derive(Serialize, Deserialize)]
struct TaggedDecimal {
    value: String,
    digits: u32,
}

/// Serialized as `{"value": "<decimal>", "digits": n}`.
impl Serialize for Real {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TaggedDecimal { value: self.to_decimal_string(), digits: self.digits }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let t = TaggedDecimal::deserialize(deserializer)?;
        let ctx = PrecisionContext::new(t.digits).map_err(serde::de::Error::custom)?;
        Real::parse(&t.value, &ctx).map_err(serde::de::Error::custom)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                self.combine(rhs, |bits| {
                    let a = Float::with_val(bits, &self.value);
                    let b = Float::with_val(bits, &rhs.value);
                    $trait::$method(a, b)
                })
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { value: -self.value, ..self }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        -self.clone()
    }
}
