//! Exponential polynomials `Σ_k p_k(H) e^{kλ}` over truncated polynomials in `H`.

use std::collections::BTreeMap;

use num_traits::Pow;

use super::nilpoly::NilPoly;
use super::rational::Rational;
use super::Scalar;

#[derive(Clone, Debug)]
pub struct ExpPoly<S: Scalar> {
    cap: usize,
    proto: S,
    terms: BTreeMap<i64, NilPoly<S>>,
}

impl<S: Scalar + PartialEq> PartialEq for ExpPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.terms == other.terms
    }
}

impl<S: Scalar> ExpPoly<S> {
    pub fn zero(cap: usize, proto: &S) -> Self {
        ExpPoly { cap, proto: proto.zero_like(), terms: BTreeMap::new() }
    }

    /// `p(H) e^{kλ}`.
    pub fn term(k: i64, p: NilPoly<S>) -> Self {
        let mut e = Self::zero(p.cap(), p.proto());
        e.add_term(k, &p);
        e
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<i64, NilPoly<S>> {
        &self.terms
    }

    pub fn coeff(&self, k: i64) -> NilPoly<S> {
        self.terms.get(&k).cloned().unwrap_or_else(|| NilPoly::zero(self.cap, &self.proto))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: i64, p: &NilPoly<S>) {
        let next = match self.terms.get(&k) {
            Some(old) => old.add(p),
            None => p.clone(),
        };
        if next.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, next);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, p) in &o.terms {
            out.add_term(*k, p);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.cap, &self.proto);
        for (k, p) in &self.terms {
            out.terms.insert(*k, p.neg());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.cap, &self.proto);
        for (a, p) in &self.terms {
            for (b, q) in &o.terms {
                out.add_term(a + b, &p.mul(q));
            }
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.cap, &self.proto);
        for (k, p) in &self.terms {
            out.add_term(*k, &p.scale(c));
        }
        out
    }

    /// Number of distinct exponents.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Substitute `e^λ = u` for a nonzero rational `u`.
    pub fn eval_exp(&self, u: &Rational) -> NilPoly<S> {
        let mut acc = NilPoly::zero(self.cap, &self.proto);
        for (k, p) in &self.terms {
            let w: Rational = Pow::pow(u.clone(), *k as i32);
            acc = acc.add(&p.scale_q(&w));
        }
        acc
    }

    /// Drop the λ-dependence by setting `λ = 0`.
    pub fn at_lambda_zero(&self) -> NilPoly<S> {
        self.eval_exp(&super::rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::int;

    #[test]
    fn canonical_after_cancellation() {
        let p = NilPoly::one(2, &int(0));
        let e = ExpPoly::term(3, p.clone()).sub(&ExpPoly::term(3, p));
        assert!(e.is_zero());
        assert_eq!(e, ExpPoly::zero(2, &int(0)));
    }
}
