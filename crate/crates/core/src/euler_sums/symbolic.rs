use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{parse_rational, rational_to_string, Rational};
use crate::real::{gamma_float, log2pi_float, rational_to_float, PrecisionContext, Real};

/// Exact element `a + b*gamma + c*ln(2 pi)` of `Q + Q gamma + Q ln(2 pi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicValue {
    pub rational: Rational,
    pub gamma: Rational,
    pub log_2pi: Rational,
}

impl SymbolicValue {
    pub fn new(rational: Rational, gamma: Rational, log_2pi: Rational) -> Self {
        SymbolicValue { rational, gamma, log_2pi }
    }

    pub fn zero() -> Self {
        SymbolicValue::from_rational(Rational::zero())
    }

    pub fn from_rational(q: Rational) -> Self {
        SymbolicValue { rational: q, gamma: Rational::zero(), log_2pi: Rational::zero() }
    }

    /// The Euler–Mascheroni constant itself.
    pub fn euler_gamma() -> Self {
        SymbolicValue { rational: Rational::zero(), gamma: Rational::one(), log_2pi: Rational::zero() }
    }

    pub fn log_2pi() -> Self {
        SymbolicValue { rational: Rational::zero(), gamma: Rational::zero(), log_2pi: Rational::one() }
    }

    /// Small-integer constructor `(a1/a2, b1/b2, c1/c2)`.
    pub fn from_ratios(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Self {
        let q = |(n, d): (i64, i64)| Rational::new(n.into(), d.into());
        SymbolicValue::new(q(a), q(b), q(c))
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.gamma.is_zero() && self.log_2pi.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        SymbolicValue {
            rational: &self.rational * k,
            gamma: &self.gamma * k,
            log_2pi: &self.log_2pi * k,
        }
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        SymbolicValue { rational: &self.rational + q, ..self.clone() }
    }

    pub fn evaluate(&self, ctx: &PrecisionContext) -> Real {
        let bits = ctx.working_bits();
        let a = rational_to_float(&self.rational, bits);
        let b = rational_to_float(&self.gamma, bits) * gamma_float(bits);
        let c = rational_to_float(&self.log_2pi, bits) * log2pi_float(bits);
        Real::from_float(a + b + c, ctx)
    }

    /// `(a, b, c)` as `numerator/denominator` strings.
    pub fn to_strings(&self) -> [String; 3] {
        [
            rational_to_string(&self.rational),
            rational_to_string(&self.gamma),
            rational_to_string(&self.log_2pi),
        ]
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*gamma + {}*ln(2pi)", self.rational, self.gamma, self.log_2pi)
    }
}

impl Add for &SymbolicValue {
    type Output = SymbolicValue;
    fn add(self, rhs: &SymbolicValue) -> SymbolicValue {
        SymbolicValue {
            rational: &self.rational + &rhs.rational,
            gamma: &self.gamma + &rhs.gamma,
            log_2pi: &self.log_2pi + &rhs.log_2pi,
        }
    }
}

impl Sub for &SymbolicValue {
    type Output = SymbolicValue;
    fn sub(self, rhs: &SymbolicValue) -> SymbolicValue {
        SymbolicValue {
            rational: &self.rational - &rhs.rational,
            gamma: &self.gamma - &rhs.gamma,
            log_2pi: &self.log_2pi - &rhs.log_2pi,
        }
    }
}

impl Neg for &SymbolicValue {
    type Output = SymbolicValue;
    fn neg(self) -> SymbolicValue {
        SymbolicValue {
            rational: -&self.rational,
            gamma: -&self.gamma,
            log_2pi: -&self.log_2pi,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Triple {
    a: String,
    b: String,
    c: String,
}

impl Serialize for SymbolicValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let [a, b, c] = self.to_strings();
        Triple { a, b, c }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymbolicValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let t = Triple::deserialize(deserializer)?;
        let p = |s: &str| parse_rational(s).map_err(serde::de::Error::custom);
        Ok(SymbolicValue::new(p(&t.a)?, p(&t.b)?, p(&t.c)?))
    }
}
