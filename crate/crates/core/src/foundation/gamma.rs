//! Taylor data for `Γ(a + x)` at rational offsets.
//!
//! `ln Γ(a + x) = ln Γ(a) + ψ(a) x + Σ_{k≥2} (−1)^k ζ(k, a) x^k / k`, exponentiated
//! term by term. For `a = 1` the constants are `−γ` and Riemann zeta values;
//! otherwise the Hurwitz values come from Euler–Maclaurin summation.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::prec::{bits_for, PrecComplex};
use super::rational::{self, Rational};

pub fn rational_float(q: &Rational, bits: u32) -> Float {
    let n = Float::with_val(bits, Float::parse(q.numer().to_string()).expect("integer literal"));
    let d = Float::with_val(bits, Float::parse(q.denom().to_string()).expect("integer literal"));
    n / d
}

/// Hurwitz zeta `ζ(s, a)` for integer `s ≥ 2` and real `a > 0`.
pub fn hurwitz_zeta(s: u32, a: &Float, digits: u32) -> Float {
    assert!(s >= 2, "hurwitz_zeta needs s >= 2");
    let bits = bits_for(digits + 10);
    let m = digits as u64 + 20;
    let k_terms = digits as usize + 20;
    let a = Float::with_val(bits, a);
    let mut sum = Float::with_val(bits, 0);
    for n in 0..m {
        let base = Float::with_val(bits, &a + n);
        sum += base.pow(-(s as i32));
    }
    let big = Float::with_val(bits, &a + m);
    let s_i = s as i32;
    sum += Float::with_val(bits, big.clone().pow(1 - s_i)) / (s - 1);
    sum += Float::with_val(bits, big.clone().pow(-s_i)) / 2u32;
    let bern = rational::bernoulli(2 * k_terms);
    // rising factorial s (s+1) … (s+2k−2) / (2k)!
    let mut rising = Float::with_val(bits, s);
    let mut fact = Float::with_val(bits, 2);
    for k in 1..=k_terms {
        if k > 1 {
            let kk = 2 * k as u32;
            rising *= (s + kk - 3) * (s + kk - 2);
            fact *= (kk - 1) * kk;
        }
        let b2k = rational_float(&bern[2 * k], bits);
        let term = Float::with_val(bits, big.clone().pow(-(s_i + 2 * k as i32 - 1)));
        sum += b2k * &rising / &fact * term;
    }
    Float::with_val(bits_for(digits), sum)
}

type GammaKey = (Rational, u32);

fn cache() -> &'static Mutex<HashMap<GammaKey, Vec<PrecComplex>>> {
    static CACHE: OnceLock<Mutex<HashMap<GammaKey, Vec<PrecComplex>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Γ(offset + x)` through `x^order`.
///
/// Results are memoized per `(offset, digits)`; a longer cached expansion
/// serves every shorter request.
pub fn gamma_taylor(offset: &Rational, order: usize, digits: u32) -> Vec<PrecComplex> {
    let key = (offset.clone(), digits);
    if let Some(v) = cache().lock().expect("gamma cache").get(&key) {
        if v.len() > order {
            return v[..=order].to_vec();
        }
    }
    let v = gamma_taylor_uncached(offset, order, digits);
    cache().lock().expect("gamma cache").insert(key, v.clone());
    v
}

fn gamma_taylor_uncached(offset: &Rational, order: usize, digits: u32) -> Vec<PrecComplex> {
    assert!(
        *offset > rational::zero() && *offset <= rational::one(),
        "gamma_taylor offset must lie in (0, 1]"
    );
    let bits = bits_for(digits + 10);
    let a = rational_float(offset, bits);
    let at_one = *offset == rational::one();
    // log-series coefficients g_0..g_order
    let mut g: Vec<Float> = Vec::with_capacity(order + 1);
    g.push(if at_one { Float::with_val(bits, 0) } else { a.clone().ln_gamma() });
    if order >= 1 {
        g.push(if at_one { -Float::with_val(bits, Constant::Euler) } else { a.clone().digamma() });
    }
    for k in 2..=order {
        let z = if at_one { Float::with_val(bits, k as u32).zeta() } else { hurwitz_zeta(k as u32, &a, digits + 10) };
        let sign = if k % 2 == 0 { 1 } else { -1 };
        g.push(z * sign / k as u32);
    }
    // f = exp(g): f_0 = e^{g_0}, n f_n = Σ_{k=1}^n k g_k f_{n−k}
    let mut f: Vec<Float> = Vec::with_capacity(order + 1);
    f.push(g[0].clone().exp());
    for n in 1..=order {
        let mut acc = Float::with_val(bits, 0);
        for k in 1..=n {
            acc += Float::with_val(bits, &g[k] * &f[n - k]) * k as u32;
        }
        f.push(acc / n as u32);
    }
    f.into_iter().map(|x| PrecComplex::from_real(x, digits)).collect()
}

/// Direct high-precision `Γ(x)` for real `x` (MPFR), `None` at poles.
pub fn gamma_value(x: &Rational, digits: u32) -> Option<Float> {
    if x.is_integer() && *x <= rational::zero() {
        return None;
    }
    Some(rational_float(x, bits_for(digits + 10)).gamma())
}

/// `1/Γ(x)`, zero at the poles.
pub fn rgamma_value(x: &Rational, digits: u32) -> Float {
    match gamma_value(x, digits) {
        Some(v) => v.recip(),
        None => Float::with_val(bits_for(digits + 10), 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::rat;

    #[test]
    fn gamma_one_order_zero() {
        let t = gamma_taylor(&rat(1, 1), 0, 50);
        assert_eq!(t.len(), 1);
        assert!(t[0].log10_dist(&PrecComplex::one(50)) < -49.0);
    }

    #[test]
    fn hurwitz_at_one_matches_riemann() {
        let bits = bits_for(60);
        for s in 2..7u32 {
            let h = hurwitz_zeta(s, &Float::with_val(bits, 1), 60);
            let z = Float::with_val(bits, s).zeta();
            let d = Float::with_val(bits, &h - &z).abs();
            assert!(d < Float::with_val(bits, 1e-55), "s = {s}");
        }
    }

    #[test]
    fn hurwitz_shift_relation() {
        // ζ(s, a) − ζ(s, a + 1) = a^{−s}
        let bits = bits_for(60);
        let a = Float::with_val(bits, 0.3);
        let a1 = Float::with_val(bits, &a + 1u32);
        let lhs = hurwitz_zeta(3, &a, 60) - hurwitz_zeta(3, &a1, 60);
        let rhs = Float::with_val(bits, a.pow(-3i32));
        assert!(Float::with_val(bits, lhs - rhs).abs() < Float::with_val(bits, 1e-55));
    }
}
