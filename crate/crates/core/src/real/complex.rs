use std::ops::{Add, Div, Mul, Sub};

use rug::Float;

/// Complex number with MPFR parts, used for the contour variable.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexReal {
    pub re: Float,
    pub im: Float,
}

impl ComplexReal {
    pub fn new(re: Float, im: Float) -> Self {
        ComplexReal { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        ComplexReal { re, im }
    }

    /// `r * e^{i theta}`.
    pub fn from_polar(r: &Float, theta: &Float) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(theta.prec()));
        ComplexReal { re: Float::with_val(r.prec(), r * c), im: Float::with_val(r.prec(), r * s) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn exp(&self) -> Self {
        let m = self.re.clone().exp();
        ComplexReal::from_polar(&m, &self.im)
    }

    /// Principal logarithm, argument in `(-pi, pi]`.
    pub fn ln(&self) -> Self {
        let bits = self.prec();
        let modulus = Float::with_val(bits, self.re.hypot_ref(&self.im));
        let arg = Float::with_val(bits, self.im.atan2_ref(&self.re));
        ComplexReal { re: modulus.ln(), im: arg }
    }

    /// Principal power `z^a` for real `a`.
    pub fn powf(&self, a: &Float) -> Self {
        self.ln().scale(a).exp()
    }

    pub fn scale(&self, k: &Float) -> Self {
        let bits = self.prec();
        ComplexReal {
            re: Float::with_val(bits, &self.re * k),
            im: Float::with_val(bits, &self.im * k),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let bits = self.prec();
        Float::with_val(bits, self.re.clone().square() + self.im.clone().square())
    }

    pub fn conj(&self) -> Self {
        ComplexReal { re: self.re.clone(), im: -self.im.clone() }
    }
}

impl Add for &ComplexReal {
    type Output = ComplexReal;
    fn add(self, rhs: &ComplexReal) -> ComplexReal {
        let bits = self.prec();
        ComplexReal {
            re: Float::with_val(bits, &self.re + &rhs.re),
            im: Float::with_val(bits, &self.im + &rhs.im),
        }
    }
}

impl Sub for &ComplexReal {
    type Output = ComplexReal;
    fn sub(self, rhs: &ComplexReal) -> ComplexReal {
        let bits = self.prec();
        ComplexReal {
            re: Float::with_val(bits, &self.re - &rhs.re),
            im: Float::with_val(bits, &self.im - &rhs.im),
        }
    }
}

impl Mul for &ComplexReal {
    type Output = ComplexReal;
    fn mul(self, rhs: &ComplexReal) -> ComplexReal {
        let bits = self.prec();
        let re = Float::with_val(bits, &self.re * &rhs.re) - Float::with_val(bits, &self.im * &rhs.im);
        let im = Float::with_val(bits, &self.re * &rhs.im) + Float::with_val(bits, &self.im * &rhs.re);
        ComplexReal { re, im }
    }
}

impl Div for &ComplexReal {
    type Output = ComplexReal;
    fn div(self, rhs: &ComplexReal) -> ComplexReal {
        let d = rhs.norm_sqr();
        let num = self * &rhs.conj();
        ComplexReal { re: num.re / &d, im: num.im / &d }
    }
}
