//! Truncated polynomials `Σ_{k<cap} a_k H^k` with `H^cap = 0`.

use super::rational::{self, Rational};
use super::{Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct NilPoly<S: Scalar> {
    cap: usize,
    coeffs: Vec<S>,
    proto: S,
}

impl<S: Scalar + PartialEq> PartialEq for NilPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> NilPoly<S> {
    pub fn zero(cap: usize, proto: &S) -> Self {
        let z = proto.zero_like();
        NilPoly { cap, coeffs: vec![z.clone(); cap], proto: z }
    }

    pub fn constant(cap: usize, c: S) -> Self {
        let mut p = Self::zero(cap, &c);
        if cap > 0 {
            p.coeffs[0] = c;
        }
        p
    }

    pub fn one(cap: usize, proto: &S) -> Self {
        Self::constant(cap, proto.one_like())
    }

    /// `c · H^k`.
    pub fn monomial(cap: usize, k: usize, c: S) -> Self {
        let mut p = Self::zero(cap, &c);
        if k < cap {
            p.coeffs[k] = c;
        }
        p
    }

    /// Coefficients beyond `cap` are dropped, missing ones are zero.
    pub fn from_coeffs(cap: usize, coeffs: Vec<S>, proto: &S) -> Self {
        let mut p = Self::zero(cap, proto);
        for (k, c) in coeffs.into_iter().enumerate().take(cap) {
            p.coeffs[k] = c;
        }
        p
    }

    /// `Σ_n series[n] (c H)^n`.
    pub fn from_series_scaled(cap: usize, series: &[S], c: &Rational, proto: &S) -> Self {
        let mut p = Self::zero(cap, proto);
        let mut pow = rational::one();
        for k in 0..cap.min(series.len()) {
            p.coeffs[k] = series[k].scale(&pow);
            pow *= c;
        }
        p
    }

    /// `e^{k H}`.
    pub fn exp_linear(cap: usize, k: &Rational, proto: &S) -> Self {
        let mut p = Self::zero(cap, proto);
        let mut term = rational::one();
        for n in 0..cap {
            p.coeffs[n] = proto.embed(&term);
            term = term * k / rational::int(n as i64 + 1);
        }
        p
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn proto(&self) -> &S {
        &self.proto
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.proto.clone())
    }

    pub fn set_coeff(&mut self, k: usize, c: S) {
        if k < self.cap {
            self.coeffs[k] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.vanishes())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.cap, o.cap, "NilPoly cap mismatch");
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.plus(b)).collect();
        NilPoly { cap: self.cap, coeffs, proto: self.proto.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.cap, o.cap, "NilPoly cap mismatch");
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.minus(b)).collect();
        NilPoly { cap: self.cap, coeffs, proto: self.proto.clone() }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cap, o.cap, "NilPoly cap mismatch");
        let mut out = Self::zero(self.cap, &self.proto);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(self.cap - i) {
                if !b.vanishes() {
                    out.coeffs[i + j] = out.coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_coeffs(|x| x.times(c))
    }

    pub fn scale_q(&self, q: &Rational) -> Self {
        self.map_coeffs(|x| x.scale(q))
    }

    fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        NilPoly { cap: self.cap, coeffs: self.coeffs.iter().map(f).collect(), proto: self.proto.clone() }
    }

    /// Change coefficient ring.
    pub fn map<T: Scalar>(&self, proto: &T, f: impl Fn(&S) -> T) -> NilPoly<T> {
        NilPoly { cap: self.cap, coeffs: self.coeffs.iter().map(f).collect(), proto: proto.zero_like() }
    }

    /// Inverse; the constant term must be a unit.
    pub fn inv(&self) -> Result<Self> {
        if self.cap == 0 {
            return Ok(self.clone());
        }
        let c0 = self.coeffs[0].recip().ok_or_else(|| Error::NotInvertible(format!("{:?}", self.coeffs[0])))?;
        let mut out = Self::zero(self.cap, &self.proto);
        out.coeffs[0] = c0.clone();
        for n in 1..self.cap {
            let mut acc = self.proto.clone();
            for k in 1..=n {
                acc = acc.plus(&self.coeffs[k].times(&out.coeffs[n - k]));
            }
            out.coeffs[n] = acc.times(&c0).negate();
        }
        Ok(out)
    }

    /// Multiplication by `H`.
    pub fn mul_h(&self) -> Self {
        let mut out = Self::zero(self.cap, &self.proto);
        for k in 1..self.cap {
            out.coeffs[k] = self.coeffs[k - 1].clone();
        }
        out
    }

    /// `H^k ↦ H^{k−1}` for `k ≥ 1`; the `H^0` term is dropped.
    pub fn lower(&self) -> Self {
        let mut out = Self::zero(self.cap, &self.proto);
        for k in 1..self.cap {
            out.coeffs[k - 1] = self.coeffs[k].clone();
        }
        out
    }

    /// Same coefficients in a ring with a smaller or larger cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        Self::from_coeffs(cap, self.coeffs.clone(), &self.proto)
    }

    /// Multiply `H^k` by `f(k)`.
    pub fn grade_scale(&self, f: impl Fn(usize) -> S) -> Self {
        NilPoly {
            cap: self.cap,
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| c.times(&f(k))).collect(),
            proto: self.proto.clone(),
        }
    }

    /// Exponential of a nilpotent element (zero constant term required).
    pub fn exp_nilpotent(&self) -> Self {
        assert!(self.cap == 0 || self.coeffs[0].vanishes(), "exp_nilpotent needs zero constant term");
        let mut out = Self::one(self.cap, &self.proto);
        let mut term = Self::one(self.cap, &self.proto);
        for n in 1..self.cap.max(1) {
            term = term.mul(self).scale_q(&rational::rat(1, n as i64));
            out = out.add(&term);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::{int, rat};

    #[test]
    fn invert_one_plus_h() {
        let p = NilPoly::from_coeffs(3, vec![int(1), int(1)], &int(0));
        assert_eq!(p.inv().unwrap(), NilPoly::from_coeffs(3, vec![int(1), int(-1), int(1)], &int(0)));
    }

    #[test]
    fn invert_two_minus_h() {
        let p = NilPoly::from_coeffs(2, vec![int(2), int(-1)], &int(0));
        let inv = p.inv().unwrap();
        assert_eq!(inv, NilPoly::from_coeffs(2, vec![rat(1, 2), rat(1, 4)], &int(0)));
        assert_eq!(inv.mul(&p), NilPoly::one(2, &int(0)));
    }

    #[test]
    fn invert_identity_and_reject_nilpotent() {
        assert_eq!(NilPoly::one(5, &int(0)).inv().unwrap(), NilPoly::one(5, &int(0)));
        let h = NilPoly::monomial(4, 1, int(1));
        assert!(matches!(h.inv(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn h_to_cap_vanishes() {
        let h = NilPoly::monomial(4, 1, int(1));
        assert!(h.mul(&h).mul(&h).mul(&h).is_zero());
        assert!(!h.mul(&h).mul(&h).is_zero());
    }

    #[test]
    fn exp_linear_is_exp_of_h() {
        let h = NilPoly::monomial(6, 1, int(3));
        assert_eq!(h.exp_nilpotent(), NilPoly::exp_linear(6, &int(3), &int(0)));
    }
}
