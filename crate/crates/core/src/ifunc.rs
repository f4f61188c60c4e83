//! Truncated I-functions of `Y₋` and `Y₊`, their audits, and the twisted-theory helpers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::foundation::gamma::{rational_float, rgamma_value};
use crate::foundation::prec::bits_for;
use crate::foundation::rational::{self, int, rat, Rational};
use crate::foundation::{NilPoly, PrecComplex, Scalar, ZLaurent};
use crate::model::{LGModel, SymmetryGroup};
use crate::report::CheckReport;
use crate::state::{pair, sector_cap, CRVector, SpaceTag};

pub const DEFAULT_ORDER: u32 = 6;

/// `Σ c · λ^a H^b z^e` with `H^{cap} = 0` and rational `e`.
#[derive(Clone, Debug, PartialEq)]
pub struct IPoly {
    cap: usize,
    terms: BTreeMap<(u32, u32, Rational), Rational>,
}

impl IPoly {
    pub fn zero(cap: usize) -> Self {
        IPoly { cap, terms: BTreeMap::new() }
    }

    pub fn monomial(cap: usize, lam: u32, h: u32, z: Rational, c: Rational) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(lam, h, z, c);
        p
    }

    pub fn constant(cap: usize, c: Rational) -> Self {
        Self::monomial(cap, 0, 0, rational::zero(), c)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, Rational), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lam: u32, h: u32, z: Rational, c: Rational) {
        if h as usize >= self.cap || c.is_zero() {
            return;
        }
        let key = (lam, h, z);
        let v = self.terms.remove(&key).unwrap_or_else(rational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn add(&self, o: &IPoly) -> IPoly {
        let mut out = self.clone();
        for ((a, b, e), c) in &o.terms {
            out.add_term(*a, *b, e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, o: &IPoly) -> IPoly {
        let mut out = IPoly::zero(self.cap.min(o.cap));
        for ((a1, b1, e1), c1) in &self.terms {
            for ((a2, b2, e2), c2) in &o.terms {
                out.add_term(a1 + a2, b1 + b2, e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> IPoly {
        let mut out = IPoly::zero(self.cap);
        for ((a, b, e), c) in &self.terms {
            out.add_term(*a, *b, e.clone(), c * q);
        }
        out
    }

    pub fn shift_z(&self, s: &Rational) -> IPoly {
        IPoly { cap: self.cap, terms: self.terms.iter().map(|((a, b, e), c)| ((*a, *b, e + s), c.clone())).collect() }
    }

    /// Coefficient of `λ⁰ H⁰`, as a Laurent polynomial in `z`.
    pub fn constant_part(&self) -> BTreeMap<Rational, Rational> {
        self.terms.iter().filter(|((a, b, _), _)| *a == 0 && *b == 0).map(|((_, _, e), c)| (e.clone(), c.clone())).collect()
    }

    /// `(c₀ + c₁ H/z)^{-1}` for `c₀ ≠ 0`.
    fn inv_linear_h(cap: usize, c0: &Rational, c1: &Rational) -> IPoly {
        let mut out = IPoly::zero(cap);
        let r = -c1 / c0;
        let mut coef = c0.recip();
        for k in 0..cap as u32 {
            out.add_term(0, k, int(-(k as i64)), coef.clone());
            coef = &coef * &r;
        }
        out
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.terms.iter().map(|((a, b, e), c)| format!("{} lambda^{a} H^{b} z^{}", rational::fmt(c), rational::fmt(e))).collect()
    }
}

impl fmt::Display for IPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.to_strings().join(" + "))
    }
}

/// Index `(k₀, k⃗)` of a summand; `kvec` is keyed by group index in `S`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SeriesIndex {
    pub k0: u32,
    pub kvec: BTreeMap<usize, u32>,
}

impl SeriesIndex {
    pub fn total(&self) -> u32 {
        self.k0 + self.kvec.values().sum::<u32>()
    }

    /// `a(k⃗)^j = Σ_g k_g m_j(g)`.
    pub fn a(&self, group: &SymmetryGroup, j: usize) -> Rational {
        self.kvec.iter().fold(rational::zero(), |acc, (g, k)| acc + group.multiplicity(*g, j) * int(*k as i64))
    }

    fn factorials(&self) -> Rational {
        self.kvec.values().fold(rational::one(), |acc, k| acc * Rational::from_integer(rational::factorial(*k as u64)))
    }
}

/// Elements of `G` fixing at least one coordinate.
pub fn s_set(group: &SymmetryGroup) -> Vec<usize> {
    group.fixing_elements()
}

/// All indices of total order `≤ order`, in a deterministic order.
pub fn enumerate_indices(group: &SymmetryGroup, order: u32) -> Vec<SeriesIndex> {
    fn rec(s: &[usize], left: u32, cur: &mut BTreeMap<usize, u32>, out: &mut Vec<BTreeMap<usize, u32>>) {
        match s.split_first() {
            None => out.push(cur.clone()),
            Some((g, rest)) => {
                for k in 0..=left {
                    if k > 0 {
                        cur.insert(*g, k);
                    }
                    rec(rest, left - k, cur, out);
                }
                cur.remove(g);
            }
        }
    }
    let s = s_set(group);
    let mut kvecs = Vec::new();
    rec(&s, order, &mut BTreeMap::new(), &mut kvecs);
    let mut out = Vec::new();
    for kvec in kvecs {
        let used: u32 = kvec.values().sum();
        for k0 in 0..=(order - used) {
            out.push(SeriesIndex { k0, kvec: kvec.clone() });
        }
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn parse(s: &str) -> Result<Side> {
        match s {
            "minus" | "-" => Ok(Side::Minus),
            "plus" | "+" => Ok(Side::Plus),
            _ => Err(Error::InvalidArgument(format!("unknown side {s:?}, expected minus or plus"))),
        }
    }

    pub fn space(self) -> SpaceTag {
        match self {
            Side::Minus => SpaceTag::YMinus,
            Side::Plus => SpaceTag::YPlus,
        }
    }
}

/// The unexpanded prefactor `t^{dλ/z}` or `q^{H/z}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prefactor {
    pub symbol: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesTerm {
    pub index: SeriesIndex,
    pub sector: usize,
    pub coeff: IPoly,
    /// Set where the literal `Σ⟨k₀q_j − a^j⟩` z-exponent differs from the homogeneous one.
    pub flagged: bool,
}

#[derive(Clone, Debug)]
pub struct IFunctionSeries {
    pub side: Side,
    pub order: u32,
    pub prefactor: Prefactor,
    /// `c = (−d)^d ∏ c_i^{−c_i}`, recorded only.
    pub convergence_constant: Rational,
    pub terms: Vec<SeriesTerm>,
}

impl IFunctionSeries {
    pub fn term(&self, index: &SeriesIndex) -> Option<&SeriesTerm> {
        self.terms.iter().find(|t| &t.index == index)
    }

    pub fn flagged(&self) -> Vec<&SeriesIndex> {
        self.terms.iter().filter(|t| t.flagged).map(|t| &t.index).collect()
    }

    pub fn export(&self, group: &SymmetryGroup) -> SeriesExport {
        SeriesExport {
            side: self.side,
            order: self.order,
            prefactor: self.prefactor.symbol.clone(),
            convergence_constant: rational::fmt(&self.convergence_constant),
            terms: self
                .terms
                .iter()
                .map(|t| TermExport {
                    k0: t.index.k0,
                    kvec: t.index.kvec.iter().map(|(g, k)| (group.element(*g).to_string(), *k)).collect(),
                    sector: group.element(t.sector).to_string(),
                    coefficient: t.coeff.to_strings(),
                    flagged: t.flagged,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermExport {
    pub k0: u32,
    pub kvec: BTreeMap<String, u32>,
    pub sector: String,
    pub coefficient: Vec<String>,
    pub flagged: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesExport {
    pub side: Side,
    pub order: u32,
    pub prefactor: String,
    pub convergence_constant: String,
    pub terms: Vec<TermExport>,
}

pub fn convergence_constant(model: &LGModel) -> Rational {
    let d = model.degree() as i64;
    let mut c = int(-d).pow(d as i32);
    for &w in model.weights() {
        c /= int(w as i64).pow(w as i32);
    }
    c
}

/// `M(k₀, k⃗) = ∏_j ∏_{l=0}^{⌊y_j⌋−1} (−c_j λ − (⟨y_j⟩ + l) z)` with `y_j = k₀q_j + a^j`.
pub fn modification_factor(group: &SymmetryGroup, index: &SeriesIndex) -> IPoly {
    let model = group.model();
    let mut out = IPoly::constant(1, rational::one());
    for j in 0..model.n() {
        let y = model.q(j) * int(index.k0 as i64) + index.a(group, j);
        let fl = rational::floor_i64(&y);
        let fr = rational::fract(&y);
        let c = int(model.weight(j) as i64);
        for l in 0..fl {
            let f = IPoly::monomial(1, 1, 0, rational::zero(), -c.clone()).add(&IPoly::monomial(1, 0, 0, rational::one(), -(&fr + int(l))));
            out = out.mul(&f);
        }
    }
    out
}

fn i_minus_term(group: &SymmetryGroup, index: &SeriesIndex) -> SeriesTerm {
    let mut sector = group.pow(group.j_index(), index.k0 as u64);
    for (g, k) in &index.kvec {
        sector = group.mul(sector, group.pow(*g, *k as u64));
    }
    let denom = index.factorials() * Rational::from_integer(rational::factorial(index.k0 as u64));
    let shift = int(1) - int(index.total() as i64);
    let coeff = modification_factor(group, index).scale(&denom.recip()).shift_z(&shift);
    SeriesTerm { index: index.clone(), sector, coeff, flagged: false }
}

/// `Γ(1 + y − α) / Γ(1 + y + x)` with `α = ⟨−x⟩` and `y = c H / z`, by the linear-factor rule.
fn coordinate_ratio(cap: usize, c: i64, x: &Rational) -> IPoly {
    let alpha = rational::fract(&-x.clone());
    let n = rational::floor_i64(&(x + &alpha));
    let y = IPoly::monomial(cap, 0, 1, int(-1), int(c));
    let mut out = IPoly::constant(cap, rational::one());
    if n >= 0 {
        for i in 1..=n {
            out = out.mul(&IPoly::inv_linear_h(cap, &(int(i) - &alpha), &int(c)));
        }
    } else {
        for i in 0..(-n) {
            out = out.mul(&y.add(&IPoly::constant(cap, -(&alpha + int(i)))));
        }
    }
    out
}

/// `Γ(1 − u) / Γ(1 − k₀ − u) = ∏_{i=0}^{k₀−1} (−u − i)` with `u = d(λ + H)/z`.
fn fiber_ratio(cap: usize, d: i64, k0: u32) -> IPoly {
    let u = IPoly::monomial(cap, 1, 0, int(-1), int(d)).add(&IPoly::monomial(cap, 0, 1, int(-1), int(d)));
    let mut out = IPoly::constant(cap, rational::one());
    for i in 0..k0 as i64 {
        out = out.mul(&u.scale(&int(-1)).add(&IPoly::constant(cap, int(-i))));
    }
    out
}

fn i_plus_term(group: &SymmetryGroup, index: &SeriesIndex) -> Option<SeriesTerm> {
    let model = group.model();
    let mut sector = group.pow(group.inv(group.j_index()), index.k0 as u64);
    for (g, k) in &index.kvec {
        sector = group.mul(sector, group.pow(*g, *k as u64));
    }
    let cap = sector_cap(group, SpaceTag::YPlus, sector);
    if cap == 0 {
        return None;
    }
    let k0 = int(index.k0 as i64);
    let mut frac_homog = rational::zero();
    let mut frac_literal = rational::zero();
    let mut coeff = fiber_ratio(cap, model.degree() as i64, index.k0);
    for j in 0..model.n() {
        let x = model.q(j) * &k0 - index.a(group, j);
        frac_homog += rational::fract(&-x.clone());
        frac_literal += rational::fract(&x);
        coeff = coeff.mul(&coordinate_ratio(cap, model.weight(j) as i64, &x));
    }
    let mut z_exp = int(1) - &k0 * (model.sum_q() - int(1)) - &frac_homog;
    for (g, k) in &index.kvec {
        z_exp += (group.age(*g) - int(1)) * int(*k as i64);
    }
    let coeff = coeff.scale(&index.factorials().recip()).shift_z(&z_exp);
    if coeff.is_zero() {
        return None;
    }
    Some(SeriesTerm { index: index.clone(), sector, coeff, flagged: frac_homog != frac_literal })
}

pub fn i_minus_series(group: &SymmetryGroup, order: u32) -> Result<IFunctionSeries> {
    let indices = enumerate_indices(group, order);
    let terms: Vec<SeriesTerm> = indices.par_iter().map(|ix| i_minus_term(group, ix)).collect();
    Ok(IFunctionSeries {
        side: Side::Minus,
        order,
        prefactor: Prefactor { symbol: format!("z t^({} lambda/z)", group.degree()) },
        convergence_constant: convergence_constant(group.model()),
        terms,
    })
}

pub fn i_plus_series(group: &SymmetryGroup, order: u32) -> Result<IFunctionSeries> {
    if !group.predicates().convex_od {
        return Err(Error::SpaceUnavailable { space: "YPlus", reason: "O(d) is not convex".into() });
    }
    let indices = enumerate_indices(group, order);
    let terms: Vec<SeriesTerm> = indices.par_iter().filter_map(|ix| i_plus_term(group, ix)).collect();
    Ok(IFunctionSeries {
        side: Side::Plus,
        order,
        prefactor: Prefactor { symbol: "z q^(H/z)".into() },
        convergence_constant: convergence_constant(group.model()),
        terms,
    })
}

/// Recompute the target sector from exponent vectors.
fn expected_sector(group: &SymmetryGroup, side: Side, index: &SeriesIndex) -> Option<usize> {
    let model = group.model();
    let sign: i64 = if side == Side::Minus { 1 } else { -1 };
    let exps: Vec<u32> = (0..model.n())
        .map(|j| {
            let order = (model.degree() / model.weight(j)) as i64;
            let mut a = sign * index.k0 as i64;
            for (g, k) in &index.kvec {
                a += group.element(*g).0[j] as i64 * *k as i64;
            }
            a.rem_euclid(order) as u32
        })
        .collect();
    group.index_of(&crate::model::GroupElement(exps))
}

/// Sector bookkeeping and degree homogeneity of every coefficient.
///
/// Grading: `deg λ = deg z = deg H = 1`, `deg t^g = 1 − age(g)`, `deg t = 1 − Σq`,
/// `deg q^{1/d} = Σq − 1`; every summand must have total degree `1`.
pub fn degree_audit(group: &SymmetryGroup, series: &IFunctionSeries) -> CheckReport {
    let model = group.model();
    let sq = model.sum_q();
    let mut report = CheckReport::new(format!("degree-audit-{:?}", series.side).to_lowercase());
    for t in &series.terms {
        let mut var_deg = rational::zero();
        for (g, k) in &t.index.kvec {
            var_deg += (int(1) - group.age(*g)) * int(*k as i64);
        }
        let k0 = int(t.index.k0 as i64);
        var_deg += match series.side {
            Side::Minus => &k0 * (int(1) - &sq),
            Side::Plus => &k0 * (&sq - int(1)),
        };
        let class_deg = group.age(t.sector).clone();
        let mut bad = Vec::new();
        for ((a, b, e), _) in t.coeff.terms() {
            let total = int(*a as i64) + int(*b as i64) + e + &var_deg + &class_deg;
            if total != rational::one() {
                bad.push(format!("lambda^{a} H^{b} z^{} has degree {}", rational::fmt(e), rational::fmt(&total)));
            }
        }
        let sector_ok = expected_sector(group, series.side, &t.index) == Some(t.sector);
        if !sector_ok {
            bad.push("sector mismatch".into());
        }
        report.push(format!("{:?}", t.index), bad.is_empty(), bad.join("; "));
    }
    report
}

/// The linear-factor rule at a scalar `y`, without the nilpotent truncation.
fn coordinate_ratio_at(y: &Rational, x: &Rational) -> Option<Rational> {
    let alpha = rational::fract(&-x.clone());
    let n = rational::floor_i64(&(x + &alpha));
    let mut out = rational::one();
    if n >= 0 {
        for i in 1..=n {
            let f = y - &alpha + int(i);
            if f.is_zero() {
                return None;
            }
            out /= f;
        }
    } else {
        for i in 0..(-n) {
            out *= y - &alpha - int(i);
        }
    }
    Some(out)
}

/// `Γ(a)/Γ(b)` numerically, `0` when `b` is a pole.
fn gamma_ratio_numeric(a: &Rational, b: &Rational, digits: u32) -> Float {
    let bits = bits_for(digits + 10);
    let ga = rational_float(a, bits).gamma();
    Float::with_val(bits, ga * rgamma_value(b, digits))
}

/// Compare the factor-rule Gamma ratios with MPFR's Gamma.
///
/// At `H = λ = 0` the whole coefficient's constant term is checked; the
/// individual ratios are also checked at the off-lattice scalar points
/// `y = 1/7` and `u = 3/10`.
pub fn gamma_ratio_check(group: &SymmetryGroup, series: &IFunctionSeries, digits: u32, tol_log10: f64) -> CheckReport {
    let model = group.model();
    let bits = bits_for(digits + 10);
    let tol = Float::with_val(bits, 10f64.powf(tol_log10));
    let mut report = CheckReport::new("gamma-ratio");
    for t in &series.terms {
        let k0 = int(t.index.k0 as i64);
        let mut entries: Vec<(String, Rational, Float)> = Vec::new();
        // constant term of the full ratio product at H = λ = 0
        let mut numeric = gamma_ratio_numeric(&int(1), &(int(1) - &k0), digits);
        let mut exact = if t.index.k0 == 0 { rational::one() } else { rational::zero() };
        for j in 0..model.n() {
            let x = model.q(j) * &k0 - t.index.a(group, j);
            let alpha = rational::fract(&-x.clone());
            numeric *= gamma_ratio_numeric(&(int(1) - &alpha), &(int(1) + &x), digits);
            exact *= coordinate_ratio_at(&rational::zero(), &x).expect("nonzero at y = 0");
            let y = rat(1, 7);
            let rule = coordinate_ratio_at(&y, &x).expect("off-lattice point");
            let num = gamma_ratio_numeric(&(int(1) + &y - &alpha), &(int(1) + &y + &x), digits);
            entries.push((format!("coordinate {j} at y=1/7"), rule, num));
        }
        entries.push(("H=lambda=0".into(), exact, numeric));
        let u = rat(3, 10);
        let mut rule = rational::one();
        for i in 0..t.index.k0 as i64 {
            rule *= -u.clone() - int(i);
        }
        let num = gamma_ratio_numeric(&(int(1) - &u), &(int(1) - &k0 - &u), digits);
        entries.push(("fiber at u=3/10".into(), rule, num));
        for (name, exact, num) in entries {
            let diff = Float::with_val(bits, rational_float(&exact, bits) - &num).abs();
            let scale = Float::with_val(bits, num.clone().abs().max(&Float::with_val(bits, 1)));
            let rel = Float::with_val(bits, &diff / &scale);
            report.note_deviation(rel.to_f64());
            report.push(format!("{:?} {name}", t.index), rel < tol, format!("rule {}", rational::fmt(&exact)));
        }
    }
    report
}

/// Equivariant weights `λ_j = w_j λ` and an optional numeric value of `λ`.
#[derive(Clone, Debug)]
pub struct TwistedParams {
    pub weights: Vec<Rational>,
    pub lambda: Option<PrecComplex>,
}

impl TwistedParams {
    /// The weights `λ_j = −c_j λ` of the torus acting on `Y₋`.
    pub fn standard(model: &LGModel, lambda: Option<PrecComplex>) -> Self {
        TwistedParams { weights: model.weights().iter().map(|c| int(-(*c as i64))).collect(), lambda }
    }

    pub fn lambda_j(&self, j: usize) -> Result<PrecComplex> {
        let l = self.lambda.as_ref().ok_or_else(|| Error::InvalidArgument("lambda has no numeric value".into()))?;
        Ok(l.mul(&PrecComplex::from_rational(&self.weights[j], l.digits())))
    }
}

/// `c · λ^{power} · φ_{partner}`, the dual of a basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct DualEntry {
    pub partner: usize,
    pub coefficient: Rational,
    pub lambda_power: u32,
    pub fixed: Vec<usize>,
}

impl DualEntry {
    pub fn evaluate(&self, params: &TwistedParams) -> Result<PrecComplex> {
        let l = params.lambda.as_ref().ok_or_else(|| Error::InvalidArgument("lambda has no numeric value".into()))?;
        Ok(PrecComplex::from_rational(&self.coefficient, l.digits()).mul(&l.powi(self.lambda_power as i64)))
    }
}

/// `φ^{g j^{-1}} = |G| ∏_{k: m_k(g) = 0} (−λ_k) φ_{g^{-1} j^{-1}}`, keyed by `g`.
pub fn twisted_dual_basis(group: &SymmetryGroup, params: &TwistedParams) -> Result<BTreeMap<usize, DualEntry>> {
    let n = group.model().n();
    if params.weights.len() != n || params.weights.iter().any(|w| w.is_zero()) {
        return Err(Error::InvalidArgument(format!("need {n} nonzero weights")));
    }
    let mut out = BTreeMap::new();
    for g in 0..group.order() {
        let fixed: Vec<usize> = (0..n).filter(|&k| group.units(g)[k] == 0).collect();
        let mut c = int(group.order() as i64);
        for &k in &fixed {
            c *= -params.weights[k].clone();
        }
        out.insert(g, DualEntry { partner: group.inv(g), coefficient: c, lambda_power: fixed.len() as u32, fixed });
    }
    Ok(out)
}

/// `s^j_0 = ln(−1/λ_j)`, `s^j_k = (k−1)!/λ_j^k`.
#[derive(Clone, Debug)]
pub struct SSpecialization {
    pub s: Vec<Vec<PrecComplex>>,
}

pub fn s_specialization(params: &TwistedParams, order: usize) -> Result<SSpecialization> {
    let mut s = Vec::new();
    for j in 0..params.weights.len() {
        let l = params.lambda_j(j)?;
        let inv = l.inv().ok_or_else(|| Error::InvalidArgument(format!("lambda_{j} = 0")))?;
        let digits = l.digits();
        let mut row = vec![inv.neg().ln()];
        let mut pow = inv.clone();
        for k in 1..=order {
            let fact = Rational::from_integer(rational::factorial(k as u64 - 1));
            row.push(pow.mul(&PrecComplex::from_rational(&fact, digits)));
            pow = pow.mul(&inv);
        }
        s.push(row);
    }
    Ok(SSpecialization { s })
}

/// `exp(Σ_k s_k ch_k(L))` against `1/e_T(L) = 1/(x − λ_j)` for `x = c₁(L)` nilpotent of the given cap.
pub fn verify_s_specialization(params: &TwistedParams, cap: usize, tol_log10: f64) -> Result<CheckReport> {
    let spec = s_specialization(params, cap)?;
    let mut report = CheckReport::new("s-specialization");
    for (j, row) in spec.s.iter().enumerate() {
        let l = params.lambda_j(j)?;
        let digits = l.digits();
        let zero = PrecComplex::zero(digits);
        // Σ_{k≥1} s_k x^k / k!
        let mut nil = NilPoly::zero(cap, &zero);
        for k in 1..cap {
            let fact = Rational::from_integer(rational::factorial(k as u64));
            nil.set_coeff(k, row[k].mul(&PrecComplex::from_rational(&fact.recip(), digits)));
        }
        let lhs = nil.exp_nilpotent().scale(&row[0].exp());
        let euler = NilPoly::monomial(cap, 1, PrecComplex::one(digits)).add(&NilPoly::constant(cap, l.neg()));
        let rhs = euler.inv()?;
        let mut worst = f64::NEG_INFINITY;
        for k in 0..cap {
            worst = worst.max(lhs.coeff(k).log10_dist(&rhs.coeff(k)));
            report.note_deviation(lhs.coeff(k).dist_f64(&rhs.coeff(k)));
        }
        report.push(format!("coordinate {j}"), worst < tol_log10, format!("log10 deviation {worst:.1}"));
    }
    Ok(report)
}

/// `Ω(f₁, f₂) = Res_{z=0} ⟨f₁(−z), f₂(z)⟩`.
pub fn symplectic_pair<S: Scalar>(group: &SymmetryGroup, f1: &ZLaurent<CRVector<S>>, f2: &ZLaurent<CRVector<S>>, proto: &S) -> Result<S> {
    let mut acc = proto.zero_like();
    for (a, u) in f1.terms() {
        if let Some(v) = f2.get(-1 - a) {
            let p = pair(group, u, v)?;
            acc = if a.rem_euclid(2) == 0 { acc.plus(&p) } else { acc.minus(&p) };
        }
    }
    Ok(acc)
}

/// The leading structure `z·1_id + t·1_j` of `I^{Y₋}`.
pub fn leading_structure_ok(group: &SymmetryGroup, series: &IFunctionSeries) -> bool {
    let zero_ix = SeriesIndex { k0: 0, kvec: BTreeMap::new() };
    let one_ix = SeriesIndex { k0: 1, kvec: BTreeMap::new() };
    let t0 = series.term(&zero_ix);
    let t1 = series.term(&one_ix);
    let z_one = IPoly::monomial(1, 0, 0, rational::one(), rational::one());
    let one = IPoly::constant(1, rational::one());
    matches!(t0, Some(t) if t.sector == group.identity() && t.coeff == z_one)
        && (series.order < 1 || matches!(t1, Some(t) if t.sector == group.j_index() && t.coeff == one))
}

/// Number of nonzero summands of each total order.
pub fn order_profile(series: &IFunctionSeries) -> Vec<usize> {
    let mut out = vec![0; series.order as usize + 1];
    for t in &series.terms {
        out[t.index.total() as usize] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintic_modification_factors() {
        let g = SymmetryGroup::gmax(&LGModel::quintic()).unwrap();
        let ix = |k0| SeriesIndex { k0, kvec: BTreeMap::new() };
        assert_eq!(modification_factor(&g, &ix(1)), IPoly::constant(1, rational::one()));
        assert_eq!(modification_factor(&g, &ix(5)), IPoly::monomial(1, 5, 0, rational::zero(), int(-1)));
    }

    #[test]
    fn convergence_constant_quintic() {
        assert_eq!(convergence_constant(&LGModel::quintic()), int(-3125));
        let m = LGModel::new(vec![1, 1, 2], 4).unwrap();
        assert_eq!(convergence_constant(&m), int(64));
    }
}
