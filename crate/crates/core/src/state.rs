//! State spaces of the LG/CY square and their pairings.
//!
//! Vectors are stored sector by sector. A sector `g` of `ℙ(G)` or `Y₊` is a
//! truncated polynomial in `H` with cap `n_g`; on the ambient part of `Z` the
//! top power is killed, so the cap is `n_g − 1`. Sectors of `Y₋` and the
//! narrow FJRW space carry a single scalar (cap 1). FJRW vectors are keyed by
//! `g`, standing for `φ_{g j^{-1}}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundation::rational::{self, int, rat, Rational};
use crate::foundation::{NilPoly, Scalar};
use crate::model::{GroupElement, LGModel, SymmetryGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceTag {
    YMinus,
    YPlus,
    PG,
    ZAmbient,
    FJRW,
}

impl SpaceTag {
    pub const ALL: [SpaceTag; 5] = [SpaceTag::YMinus, SpaceTag::YPlus, SpaceTag::PG, SpaceTag::ZAmbient, SpaceTag::FJRW];

    pub fn name(self) -> &'static str {
        match self {
            SpaceTag::YMinus => "YMinus",
            SpaceTag::YPlus => "YPlus",
            SpaceTag::PG => "PG",
            SpaceTag::ZAmbient => "ZAmbient",
            SpaceTag::FJRW => "FJRW",
        }
    }

    pub fn parse(s: &str) -> Result<SpaceTag> {
        let low = s.to_ascii_lowercase().replace(['-', '_'], "");
        match low.as_str() {
            "yminus" | "y-" | "ym" => Ok(SpaceTag::YMinus),
            "yplus" | "y+" | "yp" => Ok(SpaceTag::YPlus),
            "pg" | "p" => Ok(SpaceTag::PG),
            "zambient" | "z" => Ok(SpaceTag::ZAmbient),
            "fjrw" => Ok(SpaceTag::FJRW),
            _ => Err(Error::InvalidArgument(format!("unknown space '{s}'"))),
        }
    }

    /// Whether the space has an `H` direction in its sectors.
    pub fn has_h(self) -> bool {
        matches!(self, SpaceTag::YPlus | SpaceTag::PG | SpaceTag::ZAmbient)
    }
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Nilpotency cap of sector `g` in `space`; zero means the sector is absent.
pub fn sector_cap(group: &SymmetryGroup, space: SpaceTag, g: usize) -> usize {
    let n = group.fixed_rank(g);
    match space {
        SpaceTag::YMinus => 1,
        SpaceTag::FJRW => usize::from(n == 0),
        SpaceTag::PG | SpaceTag::YPlus => n,
        SpaceTag::ZAmbient => n.saturating_sub(1),
    }
}

/// Sectors present in `space`, in index order.
pub fn sectors(group: &SymmetryGroup, space: SpaceTag) -> Vec<usize> {
    (0..group.order()).filter(|&g| sector_cap(group, space, g) > 0).collect()
}

/// Real degree of `1_g H^k` in `space`.
pub fn degree(group: &SymmetryGroup, space: SpaceTag, g: usize, k: usize) -> Rational {
    let age = group.age(g).clone();
    match space {
        SpaceTag::YMinus => age * int(2),
        SpaceTag::FJRW => (age - group.model().sum_q()) * int(2),
        SpaceTag::PG | SpaceTag::YPlus | SpaceTag::ZAmbient => int(2 * k as i64) + age * int(2),
    }
}

/// `∫_{ℙ(G)_g} H^{n_g − 1} = 1 / (|Ḡ| ∏_{m_j(g)=0} c_j)`.
pub fn sector_integral(group: &SymmetryGroup, g: usize) -> Rational {
    let model = group.model();
    let mut den = group.bar_order() as i64;
    for (j, &u) in group.units(g).iter().enumerate() {
        if u == 0 {
            den *= model.weight(j) as i64;
        }
    }
    rat(1, den)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorBasisElt {
    pub space: SpaceTag,
    /// Index of the sector in the group.
    pub sector: usize,
    pub g: GroupElement,
    pub h_power: usize,
    pub degree: Rational,
}

impl SectorBasisElt {
    pub fn label(&self) -> String {
        match self.space {
            SpaceTag::YMinus => format!("1_{}", self.g),
            SpaceTag::FJRW => format!("phi_{}j^-1", self.g),
            _ => format!("1_{} H^{}", self.g, self.h_power),
        }
    }
}

fn elt(group: &SymmetryGroup, space: SpaceTag, g: usize, k: usize) -> SectorBasisElt {
    SectorBasisElt { space, sector: g, g: group.element(g).clone(), h_power: k, degree: degree(group, space, g, k) }
}

fn check_convex(group: &SymmetryGroup, space: SpaceTag) -> Result<()> {
    if matches!(space, SpaceTag::YPlus | SpaceTag::ZAmbient) && !group.predicates().convex_od {
        return Err(Error::SpaceUnavailable { space: space_static(space), reason: "O(d) is not convex".into() });
    }
    Ok(())
}

fn space_static(space: SpaceTag) -> &'static str {
    space.name()
}

/// Full graded basis.
pub fn basis(group: &SymmetryGroup, space: SpaceTag) -> Result<Vec<SectorBasisElt>> {
    check_convex(group, space)?;
    let mut out = Vec::new();
    for g in sectors(group, space) {
        for k in 0..sector_cap(group, space, g) {
            out.push(elt(group, space, g, k));
        }
    }
    Ok(out)
}

/// Narrow part. For the proper spaces `ℙ(G)` and `Z` every class is narrow.
pub fn narrow_basis(group: &SymmetryGroup, space: SpaceTag) -> Result<Vec<SectorBasisElt>> {
    check_convex(group, space)?;
    let mut out = Vec::new();
    match space {
        SpaceTag::YMinus | SpaceTag::FJRW => {
            for g in group.narrow_elements() {
                out.push(elt(group, space, g, 0));
            }
        }
        SpaceTag::YPlus => {
            for g in sectors(group, space) {
                for k in 1..sector_cap(group, space, g) {
                    out.push(elt(group, space, g, k));
                }
            }
        }
        SpaceTag::PG | SpaceTag::ZAmbient => return basis(group, space),
    }
    Ok(out)
}

/// A Chen–Ruan class: one truncated polynomial per present sector.
#[derive(Clone, Debug)]
pub struct CRVector<S: Scalar> {
    space: SpaceTag,
    proto: S,
    sectors: BTreeMap<usize, NilPoly<S>>,
}

impl<S: Scalar + PartialEq> PartialEq for CRVector<S> {
    fn eq(&self, o: &Self) -> bool {
        if self.space != o.space {
            return false;
        }
        let keys: std::collections::BTreeSet<usize> = self.sectors.keys().chain(o.sectors.keys()).copied().collect();
        keys.into_iter().all(|g| match (self.sectors.get(&g), o.sectors.get(&g)) {
            (Some(a), Some(b)) => a == b,
            (Some(a), None) | (None, Some(a)) => a.is_zero(),
            (None, None) => true,
        })
    }
}

impl<S: Scalar> CRVector<S> {
    pub fn zero(space: SpaceTag, proto: &S) -> Self {
        CRVector { space, proto: proto.zero_like(), sectors: BTreeMap::new() }
    }

    /// `c · 1_g H^k`.
    pub fn unit(group: &SymmetryGroup, space: SpaceTag, g: usize, k: usize, c: S) -> Result<Self> {
        let cap = sector_cap(group, space, g);
        if k >= cap {
            return Err(Error::InvalidArgument(format!(
                "class 1_{} H^{k} does not exist on {space} (cap {cap})",
                group.element(g)
            )));
        }
        let mut v = Self::zero(space, &c);
        v.sectors.insert(g, NilPoly::monomial(cap, k, c));
        Ok(v)
    }

    pub fn from_basis_elt(group: &SymmetryGroup, e: &SectorBasisElt, proto: &S) -> Self {
        Self::unit(group, e.space, e.sector, e.h_power, proto.one_like()).expect("basis element exists")
    }

    pub fn space(&self) -> SpaceTag {
        self.space
    }

    pub fn proto(&self) -> &S {
        &self.proto
    }

    pub fn sectors(&self) -> &BTreeMap<usize, NilPoly<S>> {
        &self.sectors
    }

    pub fn sector(&self, g: usize) -> Option<&NilPoly<S>> {
        self.sectors.get(&g)
    }

    /// Coefficient of `1_g H^k`.
    pub fn coeff(&self, g: usize, k: usize) -> S {
        self.sectors.get(&g).map(|p| p.coeff(k)).unwrap_or_else(|| self.proto.clone())
    }

    /// Set sector `g`; the polynomial must have the sector's cap.
    pub fn set_sector(&mut self, group: &SymmetryGroup, g: usize, p: NilPoly<S>) -> Result<()> {
        let cap = sector_cap(group, self.space, g);
        if cap == 0 {
            if p.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidArgument(format!("sector {} does not exist on {}", group.element(g), self.space)));
        }
        self.sectors.insert(g, p.with_cap(cap));
        Ok(())
    }

    pub fn add_to_sector(&mut self, group: &SymmetryGroup, g: usize, p: &NilPoly<S>) -> Result<()> {
        let cap = sector_cap(group, self.space, g);
        if cap == 0 {
            if p.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidArgument(format!("sector {} does not exist on {}", group.element(g), self.space)));
        }
        let p = p.with_cap(cap);
        let cur = self.sectors.remove(&g).unwrap_or_else(|| NilPoly::zero(cap, &self.proto));
        self.sectors.insert(g, cur.add(&p));
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.sectors.values().all(|p| p.is_zero())
    }

    fn check_space(&self, o: &Self) {
        assert_eq!(self.space, o.space, "CRVector space mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_space(o);
        let mut out = self.clone();
        for (g, p) in &o.sectors {
            let cur = out.sectors.remove(g);
            let sum = match cur {
                Some(c) => c.add(p),
                None => p.clone(),
            };
            out.sectors.insert(*g, sum);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_sectors(|_, p| p.neg())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_sectors(|_, p| p.scale(c))
    }

    pub fn scale_q(&self, q: &Rational) -> Self {
        self.map_sectors(|_, p| p.scale_q(q))
    }

    /// Apply `f(g, p)` to every sector.
    pub fn map_sectors(&self, f: impl Fn(usize, &NilPoly<S>) -> NilPoly<S>) -> Self {
        CRVector {
            space: self.space,
            proto: self.proto.clone(),
            sectors: self.sectors.iter().map(|(g, p)| (*g, f(*g, p))).collect(),
        }
    }

    /// Change scalars.
    pub fn map<T: Scalar>(&self, proto: &T, f: impl Fn(&S) -> T) -> CRVector<T> {
        CRVector {
            space: self.space,
            proto: proto.zero_like(),
            sectors: self.sectors.iter().map(|(g, p)| (*g, p.map(proto, &f))).collect(),
        }
    }

    /// Sector-wise product; sectors missing from either side vanish.
    pub fn mul_sectorwise(&self, o: &Self) -> Self {
        self.check_space(o);
        let mut out = Self::zero(self.space, &self.proto);
        for (g, p) in &self.sectors {
            if let Some(q) = o.sectors.get(g) {
                out.sectors.insert(*g, p.mul(q));
            }
        }
        out
    }

    /// Relabel as another space with the caps of that space (coefficients
    /// beyond the new cap are dropped).
    pub fn retag(&self, group: &SymmetryGroup, space: SpaceTag) -> Self {
        let mut out = Self::zero(space, &self.proto);
        for (g, p) in &self.sectors {
            let cap = sector_cap(group, space, *g);
            if cap > 0 {
                out.sectors.insert(*g, p.with_cap(cap));
            }
        }
        out
    }

    /// `g ↦ g^{-1}` on sector labels.
    pub fn involution(&self, group: &SymmetryGroup) -> Self {
        CRVector {
            space: self.space,
            proto: self.proto.clone(),
            sectors: self.sectors.iter().map(|(g, p)| (group.inv(*g), p.clone())).collect(),
        }
    }

    /// Coordinates in the given basis (all elements must share this space).
    pub fn coords(&self, basis: &[SectorBasisElt]) -> Vec<S> {
        basis.iter().map(|e| self.coeff(e.sector, e.h_power)).collect()
    }

    pub fn from_coords(group: &SymmetryGroup, space: SpaceTag, basis: &[SectorBasisElt], coords: &[S], proto: &S) -> Self {
        let mut v = Self::zero(space, proto);
        for (e, c) in basis.iter().zip(coords) {
            if c.vanishes() {
                continue;
            }
            let cap = sector_cap(group, space, e.sector);
            let term = NilPoly::monomial(cap, e.h_power, c.clone());
            v.add_to_sector(group, e.sector, &term).expect("basis element exists");
        }
        v
    }
}

/// `j^*`: restrict a class on `ℙ(G)` to the ambient part of `Z`.
pub fn ambient_restrict<S: Scalar>(group: &SymmetryGroup, v: &CRVector<S>) -> Result<CRVector<S>> {
    if v.space() != SpaceTag::PG {
        return Err(Error::SpaceMismatch { expected: "PG".into(), found: v.space().name().into() });
    }
    Ok(v.retag(group, SpaceTag::ZAmbient))
}

fn require_narrow<S: Scalar>(group: &SymmetryGroup, v: &CRVector<S>) -> Result<()> {
    for (g, p) in v.sectors() {
        let bad = match v.space() {
            SpaceTag::YMinus | SpaceTag::FJRW => !group.is_narrow(*g) && !p.is_zero(),
            SpaceTag::YPlus => !p.coeff(0).vanishes(),
            _ => false,
        };
        if bad {
            return Err(Error::NotNarrow(format!("{} class has a component on sector {}", v.space(), group.element(*g))));
        }
    }
    Ok(())
}

/// The pairing `⟨α, β⟩ = (α, I^* β)`.
pub fn pair<S: Scalar>(group: &SymmetryGroup, alpha: &CRVector<S>, beta: &CRVector<S>) -> Result<S> {
    let space = alpha.space();
    if beta.space() != space {
        return Err(Error::SpaceMismatch { expected: space.name().into(), found: beta.space().name().into() });
    }
    require_narrow(group, alpha)?;
    require_narrow(group, beta)?;
    let proto = alpha.proto().clone();
    let mut acc = proto.zero_like();
    let d = group.degree() as i64;
    let inv_g = rat(1, group.order() as i64);
    for (g, a) in alpha.sectors() {
        let Some(b) = beta.sector(group.inv(*g)) else { continue };
        match space {
            SpaceTag::YMinus | SpaceTag::FJRW => {
                acc = acc.plus(&a.coeff(0).times(&b.coeff(0)).scale(&inv_g));
            }
            SpaceTag::PG | SpaceTag::YPlus | SpaceTag::ZAmbient => {
                let n = group.fixed_rank(*g);
                let integral = sector_integral(group, *g);
                // exponent of H paired against the fundamental class
                let (shift, factor): (i64, Rational) = match space {
                    SpaceTag::PG => (0, rational::one()),
                    SpaceTag::YPlus => (-1, rat(-1, d)),
                    _ => (1, int(d)),
                };
                let w = integral * factor;
                for i in 0..a.cap() {
                    let ai = a.coeff(i);
                    if ai.vanishes() {
                        continue;
                    }
                    let jj = n as i64 - 1 - shift - i as i64;
                    if jj < 0 || jj as usize >= b.cap() {
                        continue;
                    }
                    let bj = b.coeff(jj as usize);
                    if !bj.vanishes() {
                        acc = acc.plus(&ai.times(&bj).scale(&w));
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// Gram matrix of `pair` on a basis.
pub fn gram<S: Scalar>(group: &SymmetryGroup, basis: &[SectorBasisElt], proto: &S) -> Result<Vec<Vec<S>>> {
    let vecs: Vec<CRVector<S>> = basis.iter().map(|e| CRVector::from_basis_elt(group, e, proto)).collect();
    vecs.iter().map(|a| vecs.iter().map(|b| pair(group, a, b)).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FjrwDegrees {
    pub degrees: Vec<Rational>,
    pub nonempty: bool,
    pub concave: bool,
}

/// Degrees of the line bundles `|L_j|` on the genus-`h` FJRW moduli space with
/// the given insertions: `q_j (2h − 2 + n) − Σ_i m_j(g_i)`.
pub fn fjrw_bundle_degrees(model: &LGModel, h: u32, insertions: &[GroupElement]) -> Result<FjrwDegrees> {
    let n = insertions.len() as i64;
    let chi = 2 * h as i64 - 2 + n;
    if chi < 0 {
        return Err(Error::InvalidArgument(format!("2h - 2 + n = {chi} is negative")));
    }
    for g in insertions {
        model.check_element(g)?;
    }
    let mults: Vec<Vec<Rational>> = insertions.iter().map(|g| g.multiplicities(model)).collect();
    let degrees: Vec<Rational> = (0..model.n())
        .map(|j| {
            let mut deg = model.q(j) * int(chi);
            for m in &mults {
                deg -= &m[j];
            }
            deg
        })
        .collect();
    let nonempty = degrees.iter().all(rational::is_integer);
    let broad = insertions.iter().filter(|g| g.units(model).iter().any(|&u| u == 0)).count();
    let concave = h == 0 && nonempty && broad <= 1 && degrees.iter().all(|x| *x < rational::zero());
    Ok(FjrwDegrees { degrees, nonempty, concave })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::int;

    fn quintic() -> SymmetryGroup {
        SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap()
    }

    #[test]
    fn quintic_bases() {
        let g = quintic();
        assert_eq!(basis(&g, SpaceTag::YMinus).unwrap().len(), 5);
        assert_eq!(basis(&g, SpaceTag::PG).unwrap().len(), 5);
        assert_eq!(narrow_basis(&g, SpaceTag::FJRW).unwrap().len(), 4);
        let yp = narrow_basis(&g, SpaceTag::YPlus).unwrap();
        assert_eq!(yp.iter().map(|e| e.h_power).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(basis(&g, SpaceTag::ZAmbient).unwrap().len(), 4);
    }

    #[test]
    fn p4_pairing() {
        let g = quintic();
        let h2 = CRVector::unit(&g, SpaceTag::PG, 0, 2, int(1)).unwrap();
        assert_eq!(pair(&g, &h2, &h2).unwrap(), int(1));
    }

    #[test]
    fn top_power_killed_on_z() {
        let g = quintic();
        let mut v = CRVector::unit(&g, SpaceTag::PG, 0, 2, int(3)).unwrap();
        v = v.add(&CRVector::unit(&g, SpaceTag::PG, 0, 4, int(1)).unwrap());
        let r = ambient_restrict(&g, &v).unwrap();
        assert_eq!(r, CRVector::unit(&g, SpaceTag::ZAmbient, 0, 2, int(3)).unwrap());
    }
}
