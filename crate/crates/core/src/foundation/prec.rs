//! Arbitrary-precision complex numbers on top of MPFR floats.

use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::rational::Rational;
use super::Scalar;

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 50;

/// Binary precision used for `digits` decimal digits, with guard bits.
pub fn bits_for(digits: u32) -> u32 {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

#[derive(Clone)]
pub struct PrecComplex {
    pub re: Float,
    pub im: Float,
    digits: u32,
}

impl fmt::Debug for PrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_digits(20))
    }
}

fn float_from_rational(q: &Rational, bits: u32) -> Float {
    let n = Float::with_val(bits, Float::parse(q.numer().to_string()).expect("integer literal"));
    let d = Float::with_val(bits, Float::parse(q.denom().to_string()).expect("integer literal"));
    n / d
}

impl PrecComplex {
    pub fn bits(&self) -> u32 {
        bits_for(self.digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn new(re: Float, im: Float, digits: u32) -> PrecComplex {
        PrecComplex { re, im, digits }
    }

    pub fn zero(digits: u32) -> PrecComplex {
        let b = bits_for(digits);
        PrecComplex { re: Float::with_val(b, 0), im: Float::with_val(b, 0), digits }
    }

    pub fn one(digits: u32) -> PrecComplex {
        Self::from_i64(1, digits)
    }

    pub fn i(digits: u32) -> PrecComplex {
        let b = bits_for(digits);
        PrecComplex { re: Float::with_val(b, 0), im: Float::with_val(b, 1), digits }
    }

    pub fn from_i64(n: i64, digits: u32) -> PrecComplex {
        let b = bits_for(digits);
        PrecComplex { re: Float::with_val(b, n), im: Float::with_val(b, 0), digits }
    }

    pub fn from_real(re: Float, digits: u32) -> PrecComplex {
        let b = bits_for(digits);
        PrecComplex { re: Float::with_val(b, re), im: Float::with_val(b, 0), digits }
    }

    pub fn from_rational(q: &Rational, digits: u32) -> PrecComplex {
        Self::from_real(float_from_rational(q, bits_for(digits)), digits)
    }

    pub fn real_float_from_rational(q: &Rational, digits: u32) -> Float {
        float_from_rational(q, bits_for(digits))
    }

    pub fn pi(digits: u32) -> Float {
        Float::with_val(bits_for(digits), Constant::Pi)
    }

    /// `2πi`.
    pub fn two_pi_i(digits: u32) -> PrecComplex {
        let b = bits_for(digits);
        PrecComplex { re: Float::with_val(b, 0), im: Self::pi(digits) * 2u32, digits }
    }

    /// `e^{2πi r}`.
    pub fn root_of_unity(r: &Rational, digits: u32) -> PrecComplex {
        let angle = Self::pi(digits) * 2u32 * float_from_rational(r, bits_for(digits));
        let (s, c) = angle.sin_cos(Float::new(bits_for(digits)));
        PrecComplex { re: c, im: s, digits }
    }

    /// `e^{iθ}` for real `θ`.
    pub fn cis(theta: &Float, digits: u32) -> PrecComplex {
        let b = bits_for(digits);
        let (s, c) = Float::with_val(b, theta).sin_cos(Float::new(b));
        PrecComplex { re: c, im: s, digits }
    }

    pub fn add(&self, o: &PrecComplex) -> PrecComplex {
        let b = self.bits();
        PrecComplex { re: Float::with_val(b, &self.re + &o.re), im: Float::with_val(b, &self.im + &o.im), digits: self.digits }
    }

    pub fn sub(&self, o: &PrecComplex) -> PrecComplex {
        let b = self.bits();
        PrecComplex { re: Float::with_val(b, &self.re - &o.re), im: Float::with_val(b, &self.im - &o.im), digits: self.digits }
    }

    pub fn neg(&self) -> PrecComplex {
        PrecComplex { re: -self.re.clone(), im: -self.im.clone(), digits: self.digits }
    }

    pub fn mul(&self, o: &PrecComplex) -> PrecComplex {
        let b = self.bits();
        let re = Float::with_val(b, &self.re * &o.re) - Float::with_val(b, &self.im * &o.im);
        let im = Float::with_val(b, &self.re * &o.im) + Float::with_val(b, &self.im * &o.re);
        PrecComplex { re, im, digits: self.digits }
    }

    pub fn mul_real(&self, x: &Float) -> PrecComplex {
        let b = self.bits();
        PrecComplex { re: Float::with_val(b, &self.re * x), im: Float::with_val(b, &self.im * x), digits: self.digits }
    }

    pub fn norm_sqr(&self) -> Float {
        let b = self.bits();
        Float::with_val(b, self.re.clone().square() + self.im.clone().square())
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn inv(&self) -> Option<PrecComplex> {
        if self.re.is_zero() && self.im.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        let b = self.bits();
        Some(PrecComplex { re: Float::with_val(b, &self.re / &n), im: Float::with_val(b, -(self.im.clone()) / &n), digits: self.digits })
    }

    pub fn div(&self, o: &PrecComplex) -> Option<PrecComplex> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn exp(&self) -> PrecComplex {
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.bits()));
        PrecComplex { re: Float::with_val(self.bits(), &r * &c), im: Float::with_val(self.bits(), &r * &s), digits: self.digits }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> PrecComplex {
        let m = self.abs().ln();
        let arg = self.im.clone().atan2(&self.re);
        PrecComplex { re: m, im: arg, digits: self.digits }
    }

    pub fn powi(&self, n: i64) -> PrecComplex {
        let mut base = if n < 0 { self.inv().expect("power of zero") } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = PrecComplex::one(self.digits);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `exp(w · log)` with an explicitly supplied logarithm of the base.
    pub fn pow_with_log(log: &PrecComplex, w: &PrecComplex) -> PrecComplex {
        w.mul(log).exp()
    }

    pub fn real_pow(x: &Float, y: &Float) -> Float {
        Float::with_val(x.prec(), x.pow(y))
    }

    pub fn is_exact_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_string_digits(&self, n: usize) -> String {
        format!("{} + {}i", self.re.to_string_radix(10, Some(n)), self.im.to_string_radix(10, Some(n)))
    }

    /// `|self − o|` as an `f64` (for reporting deviations).
    pub fn dist_f64(&self, o: &PrecComplex) -> f64 {
        self.sub(o).abs().to_f64()
    }

    /// `log10 |self − o|`, robust for tiny values; `-inf` when equal.
    pub fn log10_dist(&self, o: &PrecComplex) -> f64 {
        let d = self.sub(o).abs();
        if d.is_zero() {
            f64::NEG_INFINITY
        } else {
            d.log10().to_f64()
        }
    }
}

impl Scalar for PrecComplex {
    fn zero_like(&self) -> Self {
        PrecComplex::zero(self.digits)
    }
    fn one_like(&self) -> Self {
        PrecComplex::one(self.digits)
    }
    fn vanishes(&self) -> bool {
        self.is_exact_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn recip(&self) -> Option<Self> {
        self.inv()
    }
    fn embed(&self, q: &Rational) -> Self {
        PrecComplex::from_rational(q, self.digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::rat;

    #[test]
    fn euler_identity() {
        let z = PrecComplex::root_of_unity(&rat(1, 2), 60);
        assert!(z.log10_dist(&PrecComplex::from_i64(-1, 60)) < -55.0);
    }

    #[test]
    fn exp_log_roundtrip() {
        let z = PrecComplex::new(Float::with_val(300, 0.3), Float::with_val(300, -2.1), 80);
        assert!(z.ln().exp().log10_dist(&z) < -75.0);
    }
}
