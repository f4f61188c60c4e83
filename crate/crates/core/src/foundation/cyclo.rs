//! Exact arithmetic in `Q(ξ_D)`, `ξ_D = e^{2πi/D}`.
//!
//! Elements are stored in the power basis `1, ξ, …, ξ^{φ(D)−1}`, i.e. already
//! reduced modulo the cyclotomic polynomial `Φ_D`. Equality of stored vectors
//! is therefore equality in the field.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::prec::PrecComplex;
use super::rational::{self, Rational};
use super::Scalar;

/// Reduction tables for one cyclotomic order.
#[derive(Debug)]
pub struct CycField {
    order: u32,
    phi: usize,
    /// `Φ_D` as integer coefficients, lowest degree first (monic).
    cyclotomic: Vec<i64>,
    /// `ξ^k` in the power basis for `0 <= k < max(D, 2φ)`.
    powers: Vec<Vec<Rational>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / lead;
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

impl CycField {
    pub fn new(order: u32) -> Arc<CycField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let cyclotomic = cyclotomic_poly(order);
        let phi = cyclotomic.len() - 1;
        let span = (order as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(span);
        let mut cur = vec![Rational::zero(); phi];
        cur[0] = Rational::one();
        for _ in 0..span {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow coefficient
            let top = cur[phi - 1].clone();
            let mut next = vec![Rational::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !Zero::is_zero(&top) {
                for (i, slot) in next.iter_mut().enumerate() {
                    *slot -= &top * Rational::from_integer(cyclotomic[i].into());
                }
            }
            cur = next;
        }
        Arc::new(CycField { order, phi, cyclotomic, powers })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn cyclotomic(&self) -> &[i64] {
        &self.cyclotomic
    }
}

/// An element of `Q(ξ_D)`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        assert_eq!(self.field.order, other.field.order, "mixed cyclotomic orders");
        self.coeffs == other.coeffs
    }
}
impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let c = rational::fmt(c);
            parts.push(match k {
                0 => c,
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl CycNum {
    pub fn zero(field: &Arc<CycField>) -> CycNum {
        CycNum { field: field.clone(), coeffs: vec![Rational::zero(); field.phi] }
    }

    pub fn one(field: &Arc<CycField>) -> CycNum {
        CycNum::from_rational(field, &Rational::one())
    }

    pub fn from_rational(field: &Arc<CycField>, q: &Rational) -> CycNum {
        let mut z = CycNum::zero(field);
        z.coeffs[0] = q.clone();
        z
    }

    /// `ξ^k`, any integer `k`.
    pub fn root(field: &Arc<CycField>, k: i64) -> CycNum {
        let e = k.rem_euclid(field.order as i64) as usize;
        CycNum { field: field.clone(), coeffs: field.powers[e].clone() }
    }

    /// Reduce a group-ring vector `Σ c_k x^k` (any length) into canonical form.
    pub fn from_group_ring(field: &Arc<CycField>, coeffs: &[Rational]) -> CycNum {
        let mut out = CycNum::zero(field);
        for (k, c) in coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let e = k % field.order as usize;
            for (slot, p) in out.coeffs.iter_mut().zip(&field.powers[e]) {
                if !Zero::is_zero(p) {
                    *slot += c * p;
                }
            }
        }
        out
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| Zero::is_zero(c))
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| Zero::is_zero(c)) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &CycNum) -> CycNum {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        CycNum { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, o: &CycNum) -> CycNum {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        CycNum { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> CycNum {
        CycNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale_q(&self, q: &Rational) -> CycNum {
        CycNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| a * q).collect() }
    }

    pub fn mul(&self, o: &CycNum) -> CycNum {
        let phi = self.field.phi;
        let mut prod = vec![Rational::zero(); 2 * phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !Zero::is_zero(b) {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rational> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if Zero::is_zero(c) {
                continue;
            }
            for (slot, p) in out.iter_mut().zip(&self.field.powers[k]) {
                if !Zero::is_zero(p) {
                    *slot += c * p;
                }
            }
        }
        CycNum { field: self.field.clone(), coeffs: out }
    }

    pub fn pow(&self, n: u32) -> CycNum {
        let mut acc = CycNum::one(&self.field);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Complex conjugate, the Galois automorphism `ξ ↦ ξ^{-1}`.
    pub fn conj(&self) -> CycNum {
        let mut out = CycNum::zero(&self.field);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !Zero::is_zero(c) {
                out = out.add(&CycNum::root(&self.field, -(k as i64)).scale_q(c));
            }
        }
        out
    }

    /// Inverse by solving the linear system `self · x = 1` over `Q`.
    pub fn inv(&self) -> Option<CycNum> {
        if self.is_zero() {
            return None;
        }
        let phi = self.field.phi;
        // column i = self * ξ^i
        let cols: Vec<CycNum> = (0..phi).map(|i| self.mul(&CycNum::root(&self.field, i as i64))).collect();
        let mut rows: Vec<Vec<Rational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(if r == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        let sol = super::linalg::solve_augmented(&mut rows, phi)?;
        Some(CycNum { field: self.field.clone(), coeffs: sol })
    }

    /// Numeric embedding at `ξ = e^{2πi/D}`.
    pub fn to_complex(&self, digits: u32) -> PrecComplex {
        let mut acc = PrecComplex::zero(digits);
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let root = PrecComplex::root_of_unity(&rational::rat(k as i64, self.field.order as i64), digits);
            acc = acc.add(&root.mul(&PrecComplex::from_rational(c, digits)));
        }
        acc
    }
}

/// Canonical representative; stored values are always canonical, so this is a clone.
pub fn cyc_reduce(a: &CycNum) -> CycNum {
    a.clone()
}

impl Scalar for CycNum {
    fn zero_like(&self) -> Self {
        CycNum::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        CycNum::one(&self.field)
    }
    fn vanishes(&self) -> bool {
        CycNum::is_zero(self)
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
        CycNum::from_rational(&self.field, q)
    }
    fn scale(&self, q: &Rational) -> Self {
        self.scale_q(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::{int, rat};

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn sum_of_fifth_roots_vanishes() {
        let f = CycField::new(5);
        let s = (0..5).fold(CycNum::zero(&f), |acc, k| acc.add(&CycNum::root(&f, k)));
        assert!(s.is_zero());
        let g = CycNum::from_group_ring(&f, &[int(1), int(1), int(1), int(1), int(1)]);
        assert!(g.is_zero());
    }

    #[test]
    fn one_plus_minus_one() {
        let f = CycField::new(2);
        assert!(CycNum::one(&f).add(&CycNum::root(&f, 1)).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CycField::new(5);
        let a = CycNum::one(&f).sub(&CycNum::root(&f, 2)).add(&CycNum::root(&f, 3).scale_q(&rat(3, 7)));
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), CycNum::one(&f));
    }

    #[test]
    fn conj_inverts_roots() {
        let f = CycField::new(8);
        for k in 0..8 {
            assert_eq!(CycNum::root(&f, k).conj(), CycNum::root(&f, -k));
            assert_eq!(CycNum::root(&f, k).mul(&CycNum::root(&f, -k)), CycNum::one(&f));
        }
    }
}
