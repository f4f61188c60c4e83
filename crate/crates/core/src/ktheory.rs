//! K-theory of the GIT quotients: characters of `G̃ = C* × Ḡ` and `Γ̃`,
//! Koszul classes, the window round-down, cokernel classes `K(k, ζ)`, the
//! transports `vGIT_l` and `Orlov_l`, and exact Euler pairings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::foundation::rational::{self, rat};
use crate::foundation::CycNum;
use crate::model::{BarCharacter, SymmetryGroup};

/// `O(k1, ζ, k2)`: `Λ`-weight `k1`, `Ḡ`-character `ζ`, R-charge weight `k2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaCharacter {
    pub k1: i64,
    pub zeta: BarCharacter,
    pub k2: i64,
}

impl GammaCharacter {
    pub fn new(k1: i64, zeta: BarCharacter, k2: i64) -> Self {
        GammaCharacter { k1, zeta, k2 }
    }

    /// `O(k)` with trivial `Ḡ`-part.
    pub fn plain(group: &SymmetryGroup, k1: i64) -> Self {
        GammaCharacter { k1, zeta: BarCharacter::trivial(group.bar_order()), k2: 0 }
    }

    pub fn tensor(&self, o: &GammaCharacter, d: u32) -> Self {
        GammaCharacter { k1: self.k1 + o.k1, zeta: self.zeta.mul(&o.zeta, d), k2: self.k2 + o.k2 }
    }

    pub fn dual(&self, d: u32) -> Self {
        GammaCharacter { k1: -self.k1, zeta: self.zeta.inv(d), k2: -self.k2 }
    }
}

impl fmt::Display for GammaCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zeta.is_trivial() && self.k2 == 0 {
            write!(f, "O({})", self.k1)
        } else {
            write!(f, "O({}, {}, {})", self.k1, self.zeta, self.k2)
        }
    }
}

/// The window `W_{Λ,l}`: `Λ`-weights in `[l, l + d − 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WindowSpec {
    pub l: i64,
    pub width: u32,
}

impl WindowSpec {
    pub fn new(l: i64, d: u32) -> Self {
        WindowSpec { l, width: d }
    }

    pub fn contains(&self, k: i64) -> bool {
        k >= self.l && k < self.l + self.width as i64
    }

    /// The representative of `k mod d` in `[l + d, l + 2d − 1]`.
    pub fn upper_rep(&self, k: i64) -> i64 {
        let d = self.width as i64;
        self.l + d + (k - self.l).rem_euclid(d)
    }
}

/// Where a class lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KSpace {
    /// Representations of `G`.
    BG,
    /// Line bundles on `ℙ(G)`.
    PG,
    /// Line bundles on `Y₋ = [C^N / G]`.
    VMinus,
    /// `i⁰_*` of classes on `BG`.
    YMinus,
    /// `i⁰_*` of classes on `ℙ(G)`.
    YPlus,
    /// `i¹_*` of classes on `BG`: Koszul matrix factorizations.
    MF,
    /// `j^*` of classes on `ℙ(G)`.
    ZAmbient,
}

impl KSpace {
    pub fn name(self) -> &'static str {
        match self {
            KSpace::BG => "BG",
            KSpace::PG => "PG",
            KSpace::VMinus => "VMinus",
            KSpace::YMinus => "YMinus",
            KSpace::YPlus => "YPlus",
            KSpace::MF => "MF",
            KSpace::ZAmbient => "ZAmbient",
        }
    }
}

/// A formal integer combination of line-bundle classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KClass {
    pub space: KSpace,
    terms: BTreeMap<GammaCharacter, i64>,
}

impl KClass {
    pub fn zero(space: KSpace) -> Self {
        KClass { space, terms: BTreeMap::new() }
    }

    pub fn line(space: KSpace, c: GammaCharacter) -> Self {
        let mut x = Self::zero(space);
        x.add_line(c, 1);
        x
    }

    pub fn terms(&self) -> &BTreeMap<GammaCharacter, i64> {
        &self.terms
    }

    pub fn add_line(&mut self, c: GammaCharacter, n: i64) {
        if n == 0 {
            return;
        }
        let e = self.terms.entry(c.clone()).or_insert(0);
        *e += n;
        if *e == 0 {
            self.terms.remove(&c);
        }
    }

    pub fn is_formally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_space(&self, o: &Self) -> Result<()> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch { expected: self.space.name().into(), found: o.space.name().into() });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_space(o)?;
        let mut out = self.clone();
        for (c, n) in &o.terms {
            out.add_line(c.clone(), *n);
        }
        Ok(out)
    }

    pub fn scale(&self, n: i64) -> Self {
        let mut out = Self::zero(self.space);
        for (c, m) in &self.terms {
            out.add_line(c.clone(), m * n);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Tensor every summand with a line bundle.
    pub fn twist(&self, c: &GammaCharacter, d: u32) -> Self {
        let mut out = Self::zero(self.space);
        for (t, n) in &self.terms {
            out.add_line(t.tensor(c, d), *n);
        }
        out
    }

    /// Same summands, different space label.
    pub fn relabel(&self, space: KSpace) -> Self {
        KClass { space, terms: self.terms.clone() }
    }

    /// Drop the R-charge weight of every summand.
    pub fn forget_k2(&self) -> Self {
        let mut out = Self::zero(self.space);
        for (c, n) in &self.terms {
            out.add_line(GammaCharacter { k2: 0, ..c.clone() }, *n);
        }
        out
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, n)| if *n == 1 { format!("[{c}]") } else { format!("{n}[{c}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Round a character down into the window: `(k1 − m d, ζ, k2 + m)`.
pub fn floor_char(c: &GammaCharacter, w: WindowSpec) -> (GammaCharacter, i64) {
    let d = w.width as i64;
    let m = (c.k1 - w.l).div_euclid(d);
    (GammaCharacter { k1: c.k1 - m * d, zeta: c.zeta.clone(), k2: c.k2 + m }, m)
}

/// `(Σ_{j ∈ J} c_j, χ_J)` for every subset `J`, by bitmask.
fn subsets(group: &SymmetryGroup) -> Vec<(u64, i64, BarCharacter)> {
    let model = group.model();
    let n = model.n();
    (0..1u64 << n)
        .map(|mask| {
            let cj: i64 = (0..n).filter(|j| mask >> j & 1 == 1).map(|j| model.weight(j) as i64).sum();
            (mask, cj, group.subset_character(mask))
        })
        .collect()
}

/// `Σ_J (−1)^{|J|} O(k1 − c_J, ζ χ_J^{-1}, k2)`.
pub fn koszul_kclass(group: &SymmetryGroup, space: KSpace, twist: &GammaCharacter) -> KClass {
    let d = group.degree();
    let mut out = KClass::zero(space);
    for (mask, cj, chi) in subsets(group) {
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out.add_line(GammaCharacter { k1: twist.k1 - cj, zeta: twist.zeta.mul(&chi.inv(d), d), k2: twist.k2 }, sign);
    }
    out
}

/// `K(k, ζ)` on `ℙ(G)` for `k ∈ [l + d, l + 2d − 1]`.
///
/// The round-down of `Koszul ⊗ O(k, ζ)` restricted to `ℙ(G)`, where every
/// summand `O(k_J)` moved down by `m_J ≥ 1` steps of `d` leaves the cokernel
/// `O(k_J − m_J d) + … + O(k_J − d)`; unchanged summands are removed.
pub fn k_cokernel_class(group: &SymmetryGroup, k: i64, zeta: &BarCharacter, w: WindowSpec) -> Result<KClass> {
    let d = group.degree() as i64;
    let (lo, hi) = (w.l + d, w.l + 2 * d - 1);
    if k < lo || k > hi {
        return Err(Error::OutOfRange { k, lo, hi });
    }
    let mut out = KClass::zero(KSpace::PG);
    for (mask, cj, chi) in subsets(group) {
        let kj = k - cj;
        let m = (kj - w.l).div_euclid(d);
        if m < 0 {
            return Err(Error::SpaceUnavailable {
                space: "YPlus",
                reason: format!("Koszul summand O({kj}) falls below the window; the quasi-CY condition fails"),
            });
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        let z = zeta.mul(&chi.inv(group.degree()), group.degree());
        for t in 0..m {
            out.add_line(GammaCharacter { k1: kj - m * d + t * d, zeta: z.clone(), k2: 0 }, sign);
        }
    }
    Ok(out)
}

/// `vGIT_l` on `K(Y₋)_{BG}`: `i⁰_* O_{BG}(k, ζ) ↦ i⁰_* K(k, ζ)`.
pub fn vgit_l(group: &SymmetryGroup, x: &KClass, w: WindowSpec) -> Result<KClass> {
    if x.space != KSpace::YMinus {
        return Err(Error::SpaceMismatch { expected: "YMinus".into(), found: x.space.name().into() });
    }
    let mut out = KClass::zero(KSpace::YPlus);
    for (c, n) in x.terms() {
        let k = w.upper_rep(c.k1);
        let kc = k_cokernel_class(group, k, &c.zeta, w)?;
        for (t, m) in kc.terms() {
            out.add_line(t.clone(), n * m);
        }
    }
    Ok(out)
}

/// `Orlov_l` on `i¹_*` classes, landing in `j^* K(ℙ(G))`.
///
/// Each Koszul summand `O(k − c_J, ζ χ_J^{-1}, k2)` is rounded down with its
/// R-charge weight tracked, the cokernel is read off the `Γ̃`-characters, and
/// only then is the R-charge weight forgotten.
pub fn orlov_l(group: &SymmetryGroup, x: &KClass, w: WindowSpec) -> Result<KClass> {
    if x.space != KSpace::MF {
        return Err(Error::SpaceMismatch { expected: "MF".into(), found: x.space.name().into() });
    }
    let d = group.degree();
    let mut tracked = KClass::zero(KSpace::ZAmbient);
    for (c, n) in x.terms() {
        let k = w.upper_rep(c.k1);
        let twist = GammaCharacter { k1: k, zeta: c.zeta.clone(), k2: c.k2 };
        let kos = koszul_kclass(group, KSpace::MF, &twist);
        for (s, sign) in kos.terms() {
            let (fl, m) = floor_char(s, w);
            if m < 0 {
                return Err(Error::SpaceUnavailable {
                    space: "ZAmbient",
                    reason: format!("summand {s} falls below the window; the quasi-CY condition fails"),
                });
            }
            // the floored summand sits at R-weight k2 + m; its cokernel against
            // the original summand is spanned by the intermediate twists
            for t in 0..m {
                let piece = GammaCharacter { k1: fl.k1 + t * d as i64, zeta: fl.zeta.clone(), k2: fl.k2 - t };
                tracked.add_line(piece, n * sign);
            }
        }
    }
    Ok(tracked.forget_k2())
}

/// Normal form of a class on `ℙ(G)` in the basis `O(k, ζ)`, `0 ≤ k < Σ c_j`,
/// using the restricted Koszul relation.
pub fn pg_normal_form(group: &SymmetryGroup, x: &KClass) -> KClass {
    let d = group.degree();
    let sc = group.model().sum_weights() as i64;
    let subs = subsets(group);
    let full = (1u64 << group.model().n()) - 1;
    let full_chi = group.subset_character(full);
    let nsign = if group.model().n() % 2 == 0 { 1 } else { -1 };
    let mut work: BTreeMap<GammaCharacter, i64> = BTreeMap::new();
    for (c, n) in x.terms() {
        *work.entry(GammaCharacter { k2: 0, ..c.clone() }).or_insert(0) += n;
    }
    let mut out = KClass::zero(x.space);
    loop {
        work.retain(|_, n| *n != 0);
        // highest out-of-range term above, else lowest below
        let pick = work
            .keys()
            .rev()
            .find(|c| c.k1 >= sc)
            .or_else(|| work.keys().find(|c| c.k1 < 0))
            .cloned();
        let Some(c) = pick else { break };
        let n = work.remove(&c).unwrap();
        if c.k1 >= sc {
            // O(k) = −Σ_{J ≠ ∅} (−1)^{|J|} O(k − c_J, ζ χ_J^{-1})
            for (mask, cj, chi) in &subs {
                if *mask == 0 {
                    continue;
                }
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                let t = GammaCharacter { k1: c.k1 - cj, zeta: c.zeta.mul(&chi.inv(d), d), k2: 0 };
                *work.entry(t).or_insert(0) -= sign * n;
            }
        } else {
            // twist the relation by O(k + Σc, ζ χ_full) and solve for the J = full term
            let base_zeta = c.zeta.mul(&full_chi, d);
            for (mask, cj, chi) in &subs {
                if *mask == full {
                    continue;
                }
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                let t = GammaCharacter { k1: c.k1 + sc - cj, zeta: base_zeta.mul(&chi.inv(d), d), k2: 0 };
                *work.entry(t).or_insert(0) -= nsign * sign * n;
            }
        }
    }
    for (c, n) in work {
        out.add_line(c, n);
    }
    out
}

/// Default cap on weighted degrees in monomial counting, as a multiple of `d`.
pub const DEFAULT_DEGREE_CAP_FACTOR: i64 = 10;

/// Exact Euler pairings.
///
/// Holds a table of monomial counts by weighted degree and `Ḡ`-character and
/// the per-sector Koszul products for the closed form on `Y₋`.
pub struct ChiOracle<'a> {
    group: &'a SymmetryGroup,
    char_index: HashMap<BarCharacter, usize>,
    /// `counts[k][ζ]`: monomials of weighted degree `k` and character `ζ`.
    counts: Vec<Vec<i128>>,
    cap: i64,
    koszul_products: Vec<CycNum>,
}

impl<'a> ChiOracle<'a> {
    pub fn new(group: &'a SymmetryGroup) -> Self {
        Self::with_cap(group, DEFAULT_DEGREE_CAP_FACTOR * group.degree() as i64)
    }

    pub fn with_cap(group: &'a SymmetryGroup, cap: i64) -> Self {
        let d = group.degree();
        let chars = group.characters();
        let char_index: HashMap<BarCharacter, usize> = chars.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let nch = chars.len();
        let model = group.model();
        let mut counts = vec![vec![0i128; nch]; cap.max(0) as usize + 1];
        counts[0][0] = 1;
        for j in 0..model.n() {
            let cj = model.weight(j) as usize;
            let chi = group.coordinate_character(j);
            // index of ζ χ_j^{-1}
            let shift: Vec<usize> = chars.iter().map(|z| char_index[&z.mul(&chi.inv(d), d)]).collect();
            for k in cj..counts.len() {
                for z in 0..nch {
                    let add = counts[k - cj][shift[z]];
                    counts[k][z] += add;
                }
            }
        }
        let field = group.field();
        let koszul_products = (0..group.order())
            .map(|g| {
                let mut p = CycNum::one(field);
                for &u in group.units(g) {
                    p = p.mul(&CycNum::one(field).sub(&CycNum::root(field, u as i64)));
                }
                p
            })
            .collect();
        ChiOracle { group, char_index, counts, cap, koszul_products }
    }

    /// `h⁰(ℙ(G), O(k, ζ))`.
    pub fn h0(&self, k: i64, zeta: &BarCharacter) -> Result<i128> {
        if k < 0 {
            return Ok(0);
        }
        if k > self.cap {
            return Err(Error::EnumerationCap { degree: k, cap: self.cap });
        }
        Ok(self.counts[k as usize][self.char_index[zeta]])
    }

    /// `χ(ℙ(G), O(k, ζ)) = h⁰ + (−1)^{N−1} h^{N−1}`, with `h^{N−1}` from Serre duality.
    pub fn chi_pg_line(&self, k: i64, zeta: &BarCharacter) -> Result<i128> {
        let g = self.group;
        let d = g.degree();
        let model = g.model();
        let full = (1u64 << model.n()) - 1;
        let dual_zeta = zeta.inv(d).mul(&g.subset_character(full).inv(d), d);
        let top = self.h0(-k - model.sum_weights() as i64, &dual_zeta)?;
        let sign = if model.n() % 2 == 1 { 1 } else { -1 };
        Ok(self.h0(k, zeta)? + sign * top)
    }

    /// `χ(ℙ(G); E, F) = χ(E^∨ ⊗ F)`.
    pub fn chi_pg(&self, e: &KClass, f: &KClass) -> Result<i128> {
        let d = self.group.degree();
        let mut acc = 0i128;
        for (a, m) in e.terms() {
            for (b, n) in f.terms() {
                let z = b.zeta.mul(&a.zeta.inv(d), d);
                acc += (*m as i128) * (*n as i128) * self.chi_pg_line(b.k1 - a.k1, &z)?;
            }
        }
        Ok(acc)
    }

    /// `χ_{BG}(V, W) = dim Hom_G(V, W)`.
    pub fn chi_bg(&self, v: &KClass, w: &KClass) -> i128 {
        let d = self.group.degree() as i64;
        let mut acc = 0i128;
        for (a, m) in v.terms() {
            for (b, n) in w.terms() {
                if (a.k1 - b.k1).rem_euclid(d) == 0 && a.zeta == b.zeta {
                    acc += (*m as i128) * (*n as i128);
                }
            }
        }
        acc
    }

    /// Character-sum closed form for `χ_{Y₋}(i⁰_* V, i⁰_* W)`.
    pub fn chi_yminus(&self, v: &KClass, w: &KClass) -> Result<i128> {
        let g = self.group;
        let field = g.field();
        let mut acc = CycNum::zero(field);
        for i in 0..g.order() {
            if self.koszul_products[i].is_zero() {
                continue;
            }
            let mut cv = CycNum::zero(field);
            for (a, m) in v.terms() {
                cv = cv.add(&CycNum::root(field, g.line_value(a.k1, &a.zeta, i) as i64).scale_q(&rational::int(*m)));
            }
            let mut cw = CycNum::zero(field);
            for (b, n) in w.terms() {
                cw = cw.add(&CycNum::root(field, g.line_value(b.k1, &b.zeta, i) as i64).scale_q(&rational::int(*n)));
            }
            acc = acc.add(&cv.conj().mul(&cw).mul(&self.koszul_products[i]));
        }
        let val = acc
            .as_rational()
            .map(|q| q * rat(1, g.order() as i64))
            .ok_or_else(|| Error::InvalidArgument(format!("Euler pairing is not rational: {acc}")))?;
        if !rational::is_integer(&val) {
            return Err(Error::InvalidArgument(format!("Euler pairing is not integral: {}", rational::fmt(&val))));
        }
        Ok(rational::floor_i64(&val) as i128)
    }

    /// Brute-force Koszul expansion: `Σ_J (−1)^{|J|} χ_{BG}(V ⊗ O(−c_J, χ_J^{-1}), W)`,
    /// i.e. `χ_{BG}(L i^* i_* V, W)`.
    pub fn chi_yminus_brute(&self, v: &KClass, w: &KClass) -> i128 {
        let g = self.group;
        let mut acc = 0i128;
        for (mask, cj, chi) in subsets(g) {
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            let tw = GammaCharacter { k1: -cj, zeta: chi.inv(g.degree()), k2: 0 };
            acc += sign * self.chi_bg(&v.twist(&tw, g.degree()), w);
        }
        acc
    }

    /// `χ_{Y₊}(i⁰_* E, i⁰_* F) = χ(E, F) − χ(E, F(−d))`.
    pub fn chi_yplus(&self, e: &KClass, f: &KClass) -> Result<i128> {
        let g = self.group;
        let minus_d = GammaCharacter::plain(g, -(g.degree() as i64));
        Ok(self.chi_pg(e, f)? - self.chi_pg(e, &f.twist(&minus_d, g.degree()))?)
    }

    /// Euler pairing of Koszul matrix factorizations, via `Y₋`.
    pub fn chi_mf(&self, a: &KClass, b: &KClass) -> Result<i128> {
        self.chi_yminus(a, b)
    }

    /// Dispatch on the space of the inputs.
    pub fn chi(&self, x: &KClass, y: &KClass) -> Result<i128> {
        if x.space != y.space {
            return Err(Error::SpaceMismatch { expected: x.space.name().into(), found: y.space.name().into() });
        }
        match x.space {
            KSpace::BG => Ok(self.chi_bg(x, y)),
            KSpace::PG => self.chi_pg(x, y),
            KSpace::YMinus => self.chi_yminus(x, y),
            KSpace::YPlus => self.chi_yplus(x, y),
            KSpace::MF => self.chi_mf(x, y),
            KSpace::VMinus | KSpace::ZAmbient => Err(Error::InvalidArgument(format!(
                "no Euler pairing oracle on {}",
                x.space.name()
            ))),
        }
    }
}

/// Generators `i⁰_* O_{BG}(k, ζ)` for `k` in the upper window and every `ζ`.
pub fn window_generators(group: &SymmetryGroup, w: WindowSpec) -> Vec<GammaCharacter> {
    let d = group.degree() as i64;
    let mut out = Vec::new();
    for k in (w.l + d)..(w.l + 2 * d) {
        for z in group.characters() {
            out.push(GammaCharacter { k1: k, zeta: z.clone(), k2: 0 });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LGModel;

    fn quintic() -> SymmetryGroup {
        SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap()
    }

    #[test]
    fn floor_examples() {
        let g = quintic();
        let w = WindowSpec::new(0, 5);
        assert_eq!(floor_char(&GammaCharacter::plain(&g, 5), w), (GammaCharacter::new(0, BarCharacter::trivial(1), 1), 1));
        assert_eq!(floor_char(&GammaCharacter::plain(&g, -3), w), (GammaCharacter::new(2, BarCharacter::trivial(1), -1), -1));
        assert_eq!(floor_char(&GammaCharacter::plain(&g, 3), w).1, 0);
    }

    #[test]
    fn quintic_cokernels() {
        let g = quintic();
        let w = WindowSpec::new(0, 5);
        let triv = BarCharacter::trivial(1);
        let k5 = k_cokernel_class(&g, 5, &triv, w).unwrap();
        assert_eq!(k5, KClass::line(KSpace::PG, GammaCharacter::plain(&g, 0)));
        let k6 = k_cokernel_class(&g, 6, &triv, w).unwrap();
        let mut expect = KClass::line(KSpace::PG, GammaCharacter::plain(&g, 1));
        expect.add_line(GammaCharacter::plain(&g, 0), -5);
        assert_eq!(k6, expect);
        assert!(matches!(k_cokernel_class(&g, 4, &triv, w), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn p4_euler_characteristics() {
        let g = quintic();
        let o = ChiOracle::new(&g);
        let triv = BarCharacter::trivial(1);
        assert_eq!(o.chi_pg_line(1, &triv).unwrap(), 5);
        assert_eq!(o.chi_pg_line(5, &triv).unwrap(), 126);
        assert_eq!(o.chi_pg_line(0, &triv).unwrap(), 1);
        // h⁴(O(−5)) = 1
        assert_eq!(o.chi_pg_line(-5, &triv).unwrap(), 1);
    }

    #[test]
    fn yminus_oracles_agree() {
        let g = quintic();
        let o = ChiOracle::new(&g);
        for a in 0..5 {
            for b in 0..5 {
                let x = KClass::line(KSpace::YMinus, GammaCharacter::plain(&g, a));
                let y = KClass::line(KSpace::YMinus, GammaCharacter::plain(&g, b));
                assert_eq!(o.chi_yminus(&x, &y).unwrap(), o.chi_yminus_brute(&x, &y));
            }
        }
    }
}
