//! State-space transformations `Δ₋`, `Δ₊`, `Ū_l`, the LG/CY matrix, and the
//! harnesses that check the commuting squares.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::chern::{self, orb_ch};
use crate::error::{Error, Result};
use crate::foundation::rational::{int, rat};
use crate::foundation::{linalg, CycNum, ExpPoly, NilPoly, PrecComplex, Scalar};
use crate::ktheory::{self, GammaCharacter, KClass, KSpace, WindowSpec};
use crate::model::SymmetryGroup;
use crate::report::CheckReport;
use crate::state::{self, pair, sector_cap, CRVector, SectorBasisElt, SpaceTag};

/// A linear map between state spaces, as a matrix in chosen bases.
#[derive(Clone, Debug)]
pub struct StateMap<S: Scalar> {
    pub name: String,
    pub domain: SpaceTag,
    pub codomain: SpaceTag,
    pub dom_basis: Vec<SectorBasisElt>,
    pub cod_basis: Vec<SectorBasisElt>,
    /// `matrix[r][c]`: coefficient of codomain basis element `r` in the image of domain element `c`.
    pub matrix: Vec<Vec<S>>,
}

impl<S: Scalar> StateMap<S> {
    /// Build from the images of the domain basis vectors.
    pub fn from_columns(
        name: impl Into<String>,
        dom_basis: Vec<SectorBasisElt>,
        cod_basis: Vec<SectorBasisElt>,
        domain: SpaceTag,
        codomain: SpaceTag,
        columns: Vec<CRVector<S>>,
        proto: &S,
    ) -> Self {
        let mut matrix = vec![vec![proto.zero_like(); dom_basis.len()]; cod_basis.len()];
        for (c, col) in columns.iter().enumerate() {
            for (r, x) in col.coords(&cod_basis).into_iter().enumerate() {
                matrix[r][c] = x;
            }
        }
        StateMap { name: name.into(), domain, codomain, dom_basis, cod_basis, matrix }
    }

    pub fn rows(&self) -> usize {
        self.cod_basis.len()
    }

    pub fn cols(&self) -> usize {
        self.dom_basis.len()
    }

    pub fn apply(&self, group: &SymmetryGroup, v: &CRVector<S>) -> Result<CRVector<S>> {
        if v.space() != self.domain {
            return Err(Error::SpaceMismatch { expected: self.domain.name().into(), found: v.space().name().into() });
        }
        let x = v.coords(&self.dom_basis);
        let proto = v.proto().clone();
        let y: Vec<S> = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(&x).fold(proto.zero_like(), |acc, (a, b)| acc.plus(&a.times(b))))
            .collect();
        Ok(CRVector::from_coords(group, self.codomain, &self.cod_basis, &y, &proto))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &StateMap<S>, proto: &S) -> Result<StateMap<S>> {
        if first.codomain != self.domain || first.cod_basis != self.dom_basis {
            return Err(Error::SpaceMismatch { expected: self.domain.name().into(), found: first.codomain.name().into() });
        }
        let n = first.cols();
        let mut matrix = vec![vec![proto.zero_like(); n]; self.rows()];
        for (r, row) in self.matrix.iter().enumerate() {
            for c in 0..n {
                let mut acc = proto.zero_like();
                for (k, a) in row.iter().enumerate() {
                    acc = acc.plus(&a.times(&first.matrix[k][c]));
                }
                matrix[r][c] = acc;
            }
        }
        Ok(StateMap {
            name: format!("{} . {}", self.name, first.name),
            domain: first.domain,
            codomain: self.codomain,
            dom_basis: first.dom_basis.clone(),
            cod_basis: self.cod_basis.clone(),
            matrix,
        })
    }

    pub fn det(&self, proto: &S) -> Result<S> {
        if self.rows() != self.cols() {
            return Err(Error::InvalidArgument(format!("{} is {}x{}, not square", self.name, self.rows(), self.cols())));
        }
        Ok(linalg::det(self.matrix.clone(), proto))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> StateMap<T> {
        StateMap {
            name: self.name.clone(),
            domain: self.domain,
            codomain: self.codomain,
            dom_basis: self.dom_basis.clone(),
            cod_basis: self.cod_basis.clone(),
            matrix: self.matrix.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }
}

fn require_narrow_minus<S: Scalar>(group: &SymmetryGroup, v: &CRVector<S>) -> Result<()> {
    for (g, p) in v.sectors() {
        if !group.is_narrow(*g) && !p.is_zero() {
            return Err(Error::NotNarrow(format!("{} has a component on broad sector {}", v.space(), group.element(*g))));
        }
    }
    Ok(())
}

/// `Δ₋: 1_g ↦ φ_{g j^{-1}}` on narrow classes.
pub fn delta_minus_apply<S: Scalar>(group: &SymmetryGroup, v: &CRVector<S>) -> Result<CRVector<S>> {
    if v.space() != SpaceTag::YMinus {
        return Err(Error::SpaceMismatch { expected: "YMinus".into(), found: v.space().name().into() });
    }
    require_narrow_minus(group, v)?;
    Ok(v.retag(group, SpaceTag::FJRW))
}

/// `Δ₋^{-1}: φ_{g j^{-1}} ↦ 1_g`.
pub fn delta_minus_inv_apply<S: Scalar>(group: &SymmetryGroup, v: &CRVector<S>) -> Result<CRVector<S>> {
    if v.space() != SpaceTag::FJRW {
        return Err(Error::SpaceMismatch { expected: "FJRW".into(), found: v.space().name().into() });
    }
    Ok(v.retag(group, SpaceTag::YMinus))
}

pub fn delta_minus(group: &SymmetryGroup) -> Result<StateMap<CycNum>> {
    let dom = state::narrow_basis(group, SpaceTag::YMinus)?;
    let cod = state::narrow_basis(group, SpaceTag::FJRW)?;
    let one = CycNum::one(group.field());
    let cols = dom
        .iter()
        .map(|e| delta_minus_apply(group, &CRVector::from_basis_elt(group, e, &one)))
        .collect::<Result<Vec<_>>>()?;
    Ok(StateMap::from_columns("Delta-", dom, cod, SpaceTag::YMinus, SpaceTag::FJRW, cols, &CycNum::zero(group.field())))
}

/// The scalar `(2πi z)^{Σ q_j}` relating `Δ̄₋` to `Δ₋`.
pub fn delta_minus_bar_factor(group: &SymmetryGroup, log_z: &PrecComplex) -> PrecComplex {
    let log = chern::log_two_pi_i(log_z.digits()).add(log_z);
    chern::power(&log, &group.model().sum_q())
}

/// `Δ₊: 1̃_g H^k ↦ −(1/d) j^*(1_g H^{k−1})`, defined on narrow classes.
pub fn delta_plus_apply<S: Scalar>(group: &SymmetryGroup, v: &CRVector<S>) -> Result<CRVector<S>> {
    if v.space() != SpaceTag::YPlus {
        return Err(Error::SpaceMismatch { expected: "YPlus".into(), found: v.space().name().into() });
    }
    let factor = rat(-1, group.degree() as i64);
    let mut out = CRVector::zero(SpaceTag::ZAmbient, v.proto());
    for (g, p) in v.sectors() {
        if !p.coeff(0).vanishes() {
            return Err(Error::NotNarrow(format!("YPlus class has an H^0 component on sector {}", group.element(*g))));
        }
        let cap = sector_cap(group, SpaceTag::ZAmbient, *g);
        if cap == 0 {
            continue;
        }
        out.set_sector(group, *g, p.lower().scale_q(&factor).with_cap(cap))?;
    }
    Ok(out)
}

pub fn delta_plus(group: &SymmetryGroup) -> Result<StateMap<CycNum>> {
    let dom = state::narrow_basis(group, SpaceTag::YPlus)?;
    let cod = state::basis(group, SpaceTag::ZAmbient)?;
    let one = CycNum::one(group.field());
    let cols = dom
        .iter()
        .map(|e| delta_plus_apply(group, &CRVector::from_basis_elt(group, e, &one)))
        .collect::<Result<Vec<_>>>()?;
    Ok(StateMap::from_columns("Delta+", dom, cod, SpaceTag::YPlus, SpaceTag::ZAmbient, cols, &CycNum::zero(group.field())))
}

/// The scalar `2πi z` relating `Δ̄₊` to `Δ₊`.
pub fn delta_plus_bar_factor(log_z: &PrecComplex) -> PrecComplex {
    chern::log_two_pi_i(log_z.digits()).add(log_z).exp()
}

/// Equivariant classes on `Y₊`: sector ↦ `Σ_k p_k(H) e^{kλ}`.
pub type EqVector = BTreeMap<usize, ExpPoly<CycNum>>;

/// `Ū_l(1_{ḡ j^m}) = (1/d) Σ_b Σ_{k=l}^{l+d−1} ξ^{(b+m)k} e^{k(H+λ)} 1̃_{ḡ j^{−b}}`,
/// with the geometric series already summed; empty target sectors are zero.
pub fn u_bar_basis_image(group: &SymmetryGroup, l: i64, g: usize) -> EqVector {
    let d = group.degree() as i64;
    let field = group.field();
    let (m, p) = group.split(g);
    let inv_d = rat(1, d);
    let mut out = EqVector::new();
    for b in 0..d {
        let target = group.compose(-b, p);
        let cap = sector_cap(group, SpaceTag::YPlus, target);
        if cap == 0 {
            continue;
        }
        let mut e = ExpPoly::zero(cap, &CycNum::zero(field));
        for k in l..l + d {
            let c = CycNum::root(field, (b + m as i64) * k).scale_q(&inv_d);
            e.add_term(k, &NilPoly::exp_linear(cap, &int(k), &c).scale(&c));
        }
        if !e.is_zero() {
            out.insert(target, e);
        }
    }
    out
}

/// `Ū_l` on a (λ-free) class on `Y₋`, equivariantly.
pub fn u_bar_apply_equivariant(group: &SymmetryGroup, l: i64, v: &CRVector<CycNum>) -> Result<EqVector> {
    if v.space() != SpaceTag::YMinus {
        return Err(Error::SpaceMismatch { expected: "YMinus".into(), found: v.space().name().into() });
    }
    let mut out = EqVector::new();
    for (g, p) in v.sectors() {
        let c = p.coeff(0);
        if c.is_zero() {
            continue;
        }
        for (t, e) in u_bar_basis_image(group, l, *g) {
            let term = e.scale(&c);
            let next = match out.remove(&t) {
                Some(cur) => cur.add(&term),
                None => term,
            };
            if !next.is_zero() {
                out.insert(t, next);
            }
        }
    }
    Ok(out)
}

/// Set `λ = 0`.
pub fn at_lambda_zero(group: &SymmetryGroup, v: &EqVector) -> CRVector<CycNum> {
    let mut out = CRVector::zero(SpaceTag::YPlus, &CycNum::zero(group.field()));
    for (g, e) in v {
        out.set_sector(group, *g, e.at_lambda_zero()).expect("Y+ sector exists");
    }
    out
}

/// Non-equivariant `Ū_l` on a class on `Y₋`.
pub fn u_bar_apply(group: &SymmetryGroup, l: i64, v: &CRVector<CycNum>) -> Result<CRVector<CycNum>> {
    Ok(at_lambda_zero(group, &u_bar_apply_equivariant(group, l, v)?))
}

/// Matrix of non-equivariant `Ū_l`, on full bases or on the narrow parts.
pub fn u_bar_l(group: &SymmetryGroup, l: i64, narrow: bool) -> Result<StateMap<CycNum>> {
    let (dom, cod) = if narrow {
        (state::narrow_basis(group, SpaceTag::YMinus)?, state::narrow_basis(group, SpaceTag::YPlus)?)
    } else {
        (state::basis(group, SpaceTag::YMinus)?, state::basis(group, SpaceTag::YPlus)?)
    };
    let one = CycNum::one(group.field());
    let cols: Vec<CRVector<CycNum>> = dom
        .par_iter()
        .map(|e| u_bar_apply(group, l, &CRVector::from_basis_elt(group, e, &one)))
        .collect::<Result<Vec<_>>>()?;
    let name = if narrow { format!("Ubar_{l} (narrow)") } else { format!("Ubar_{l}") };
    Ok(StateMap::from_columns(name, dom, cod, SpaceTag::YMinus, SpaceTag::YPlus, cols, &CycNum::zero(group.field())))
}

/// `I^* ch_T(O_{Y₊}(k, ζ) ⊗ O_T(k))` on `Y₊`.
fn eq_line_ch_plus(group: &SymmetryGroup, c: &GammaCharacter) -> EqVector {
    let field = group.field();
    let mut out = EqVector::new();
    for h in state::sectors(group, SpaceTag::YPlus) {
        let cap = sector_cap(group, SpaceTag::YPlus, h);
        let v = CycNum::root(field, group.line_value(c.k1, &c.zeta, group.inv(h)) as i64);
        out.insert(h, ExpPoly::term(c.k1, NilPoly::exp_linear(cap, &int(c.k1), &v).scale(&v)));
    }
    out
}

fn describe_eq(v: &EqVector) -> String {
    let parts: Vec<String> = v.iter().map(|(g, e)| format!("sector {g}: {} exponentials", e.support_len())).collect();
    parts.join(", ")
}

/// The induced-map square for `Ū_l`.
///
/// Equivariantly on the window line bundles `O(k, ζ)`, `k ∈ [l, l + d − 1]`:
/// `Ū_l(I^* ch O_{BG}(k, ζ)) = I^* ch_T(O_{Y₊}(k, ζ) ⊗ O_T(k))`.
/// Non-equivariantly on the generators `i⁰_* O_{BG}(k, ζ)`:
/// `Ū_l(I^* ch i⁰_* O(k, ζ)) = I^* ch vGIT_l(i⁰_* O(k, ζ))`.
pub fn verify_induced(group: &SymmetryGroup, l: i64) -> Result<CheckReport> {
    let d = group.degree() as i64;
    let w = WindowSpec::new(l, group.degree());
    let mut jobs: Vec<(bool, GammaCharacter)> = Vec::new();
    for k in l..l + d {
        for z in group.characters() {
            jobs.push((true, GammaCharacter::new(k, z.clone(), 0)));
        }
    }
    for c in ktheory::window_generators(group, w) {
        jobs.push((false, c));
    }
    let results: Vec<Result<(String, bool, String)>> = jobs
        .par_iter()
        .map(|(equivariant, c)| {
            if *equivariant {
                let input = orb_ch(group, &KClass::line(KSpace::BG, c.clone()))?.involution(group);
                let lhs = u_bar_apply_equivariant(group, l, &input)?;
                let rhs = eq_line_ch_plus(group, c);
                let ok = lhs == rhs;
                let detail = if ok { String::new() } else { format!("lhs {} vs rhs {}", describe_eq(&lhs), describe_eq(&rhs)) };
                Ok((format!("l={l} window line {c}"), ok, detail))
            } else {
                let x = KClass::line(KSpace::YMinus, c.clone());
                let input = orb_ch(group, &x)?.involution(group);
                let lhs = u_bar_apply(group, l, &input)?;
                let rhs = orb_ch(group, &ktheory::vgit_l(group, &x, w)?)?.involution(group);
                let ok = lhs == rhs;
                Ok((format!("l={l} i0_* {c}"), ok, if ok { String::new() } else { format!("{lhs:?} vs {rhs:?}") }))
            }
        })
        .collect();
    let mut report = CheckReport::new("induced");
    for r in results {
        let (wit, ok, detail) = r?;
        report.push(wit, ok, detail);
    }
    Ok(report)
}

/// Narrow preservation and invertibility of `Ū_l`.
pub fn verify_u_narrow(group: &SymmetryGroup, l: i64) -> Result<CheckReport> {
    let mut report = CheckReport::new("ubar-narrow");
    let one = CycNum::one(group.field());
    for e in state::narrow_basis(group, SpaceTag::YMinus)? {
        let img = u_bar_apply(group, l, &CRVector::from_basis_elt(group, &e, &one))?;
        let bad: Vec<usize> = img.sectors().iter().filter(|(_, p)| !p.coeff(0).is_zero()).map(|(g, _)| *g).collect();
        report.push(format!("l={l} {}", e.label()), bad.is_empty(), if bad.is_empty() { String::new() } else { format!("H^0 on sectors {bad:?}") });
    }
    let m = u_bar_l(group, l, true)?;
    let det = m.det(&CycNum::zero(group.field()))?;
    report.push(format!("l={l} det"), !det.is_zero(), format!("det = {det}"));
    Ok(report)
}

/// `Δ₋ ∘ ch ∘ i⁰_* = ch ∘ i¹_*` on every character twist. The left side is
/// computed from the exterior powers of the Koszul complex, the right side
/// from the product formula.
pub fn verify_delta_square(group: &SymmetryGroup) -> Result<CheckReport> {
    let d = group.degree() as i64;
    let mut twists = Vec::new();
    for k in 0..d {
        for z in group.characters() {
            twists.push(GammaCharacter::new(k, z.clone(), 0));
        }
    }
    let results: Vec<Result<(String, bool, String)>> = twists
        .par_iter()
        .map(|t| {
            let brute = orb_ch(group, &ktheory::koszul_kclass(group, KSpace::VMinus, t))?;
            let lhs = delta_minus_apply(group, &brute)?;
            let rhs = chern::ch_mf_koszul(group, t);
            let ok = lhs == rhs;
            Ok((format!("twist {t}"), ok, if ok { String::new() } else { format!("{lhs:?} vs {rhs:?}") }))
        })
        .collect();
    let mut report = CheckReport::new("delta");
    for r in results {
        let (w, ok, det) = r?;
        report.push(w, ok, det);
    }
    Ok(report)
}

/// `Δ₊(Td(O(−d)) ∪ ch F) = ch(j^* π_* F)` for `F = i⁰_* E`.
pub fn verify_qsd_square(group: &SymmetryGroup) -> Result<CheckReport> {
    group.require_cy()?;
    let d = group.degree();
    let (todd, _) = chern::todd_and_euler(group, &GammaCharacter::plain(group, -(d as i64)))?;
    let field = group.field();
    let todd = todd.map(&CycNum::zero(field), |q| CycNum::from_rational(field, q));
    let sc = group.model().sum_weights() as i64;
    let mut classes: Vec<(String, KClass)> = Vec::new();
    for k in 0..sc {
        for z in group.characters() {
            let c = GammaCharacter::new(k, z.clone(), 0);
            classes.push((format!("i0_* {c}"), KClass::line(KSpace::YPlus, c)));
        }
    }
    // fixed integer combinations of neighbouring generators
    let gens: Vec<KClass> = classes.iter().map(|(_, x)| x.clone()).collect();
    for (i, w) in gens.windows(3).enumerate().step_by(2) {
        let x = w[0].scale(3).add(&w[1].scale(-2))?.add(&w[2])?;
        classes.push((format!("combination #{i}"), x));
    }
    let mut report = CheckReport::new("qsd");
    for (name, f) in classes {
        let chf = orb_ch(group, &f)?;
        let lhs = delta_plus_apply(group, &todd.mul_sectorwise(&chf))?;
        let rhs = orb_ch(group, &f.relabel(KSpace::ZAmbient))?;
        let ok = lhs == rhs;
        report.push(name, ok, if ok { String::new() } else { format!("{lhs:?} vs {rhs:?}") });
    }
    Ok(report)
}

/// `j^* ∘ π_* ∘ vGIT_l = Orlov_l ∘ i¹_* ∘ π_*` on `K(Y₋)_{BG}`, compared through
/// ambient Chern characters on `Z`.
pub fn verify_ksquare(group: &SymmetryGroup, l: i64) -> Result<CheckReport> {
    group.require_cy()?;
    let d = group.degree() as i64;
    let w = WindowSpec::new(l, group.degree());
    let mut chars = Vec::new();
    for k in (l - d)..(l + 2 * d) {
        for z in group.characters() {
            chars.push(GammaCharacter::new(k, z.clone(), 0));
        }
    }
    let results: Vec<Result<(String, bool, String)>> = chars
        .par_iter()
        .map(|c| {
            let x = KClass::line(KSpace::YMinus, c.clone());
            let a = ktheory::vgit_l(group, &x, w)?.relabel(KSpace::ZAmbient);
            let b = ktheory::orlov_l(group, &x.relabel(KSpace::MF), w)?;
            let ok = orb_ch(group, &a)? == orb_ch(group, &b)?;
            Ok((format!("l={l} {c}"), ok, if ok { String::new() } else { format!("vGIT path {a} vs Orlov path {b}") }))
        })
        .collect();
    let mut report = CheckReport::new("ksquare");
    for r in results {
        let (wit, ok, det) = r?;
        report.push(wit, ok, det);
    }
    Ok(report)
}

fn to_complex_vec(v: &CRVector<CycNum>, digits: u32) -> CRVector<PrecComplex> {
    v.map(&PrecComplex::zero(digits), |c| c.to_complex(digits))
}

/// `𝕌_l = z^{−Gr} Γ̂₊ (2πi)^{deg₀/2} Ū_l (2πi)^{−deg₀/2} Γ̂₋^{-1} z^{Gr}` on narrow
/// classes, at `λ = 0` and the given branch of `log z`.
pub fn frak_u_apply(group: &SymmetryGroup, l: i64, v: &CRVector<PrecComplex>, log_z: &PrecComplex, digits: u32) -> Result<CRVector<PrecComplex>> {
    if v.space() != SpaceTag::YMinus {
        return Err(Error::SpaceMismatch { expected: "YMinus".into(), found: v.space().name().into() });
    }
    let x = chern::apply_z_gr(group, v, log_z, 1);
    let gm = chern::gamma_class(group, SpaceTag::YMinus, digits)?;
    let mut y = CRVector::zero(SpaceTag::YMinus, &PrecComplex::zero(digits));
    for (g, p) in x.sectors() {
        let inv = gm.sector(*g).expect("every Y- sector").inv()?;
        y.set_sector(group, *g, p.mul(&inv))?;
    }
    let y = chern::apply_two_pi_i_deg0(group, &y, -1, digits);
    // Ū has cyclotomic entries; apply it basis vector by basis vector
    let one = CycNum::one(group.field());
    let mut out = CRVector::zero(SpaceTag::YPlus, &PrecComplex::zero(digits));
    for (g, p) in y.sectors() {
        let c = p.coeff(0);
        if c.vanishes() {
            continue;
        }
        let img = u_bar_apply(group, l, &CRVector::unit(group, SpaceTag::YMinus, *g, 0, one.clone())?)?;
        out = out.add(&to_complex_vec(&img, digits).scale(&c));
    }
    let out = chern::apply_two_pi_i_deg0(group, &out, 1, digits);
    let out = out.mul_sectorwise(&chern::gamma_class(group, SpaceTag::YPlus, digits)?);
    Ok(chern::apply_z_gr(group, &out, log_z, -1))
}

/// `M_l = e^{−πi d H / z} Δ₊ 𝕌_l Δ₋^{-1}` applied to a narrow FJRW class.
pub fn lgcy_apply(group: &SymmetryGroup, l: i64, v: &CRVector<PrecComplex>, log_z: &PrecComplex, digits: u32) -> Result<CRVector<PrecComplex>> {
    let a = delta_minus_inv_apply(group, v)?;
    let b = frak_u_apply(group, l, &a, log_z, digits)?;
    let c = delta_plus_apply(group, &b)?;
    // −πi d / z
    let z_inv = log_z.neg().exp();
    let coeff = PrecComplex::new(PrecComplex::pi(digits) * 0u32, PrecComplex::pi(digits), digits)
        .mul(&PrecComplex::from_i64(-(group.degree() as i64), digits))
        .mul(&z_inv);
    Ok(c.map_sectors(|_, p| NilPoly::monomial(p.cap(), 1, coeff.clone()).exp_nilpotent().mul(p)))
}

/// The matrix of `M_l` from the narrow FJRW basis to the ambient basis of `Z`.
pub fn lgcy_matrix(group: &SymmetryGroup, l: i64, log_z: &PrecComplex, digits: u32) -> Result<StateMap<PrecComplex>> {
    group.require_cy()?;
    let dom = state::narrow_basis(group, SpaceTag::FJRW)?;
    let cod = state::basis(group, SpaceTag::ZAmbient)?;
    let one = PrecComplex::one(digits);
    let cols = dom
        .par_iter()
        .map(|e| lgcy_apply(group, l, &CRVector::from_basis_elt(group, e, &one), log_z, digits))
        .collect::<Result<Vec<_>>>()?;
    Ok(StateMap::from_columns(format!("M_{l}"), dom, cod, SpaceTag::FJRW, SpaceTag::ZAmbient, cols, &PrecComplex::zero(digits)))
}

/// `S(u, v) = (2πi z)^{ĉ} ⟨u, v⟩` for vectors already evaluated at `e^{πi} z` and `z`.
fn s_vectors(group: &SymmetryGroup, u_shifted: &CRVector<PrecComplex>, v: &CRVector<PrecComplex>, log_z: &PrecComplex) -> Result<PrecComplex> {
    let log = chern::log_two_pi_i(log_z.digits()).add(log_z);
    let pre = chern::power(&log, &chern::c_hat(group, v.space()));
    Ok(pre.mul(&pair(group, u_shifted, v)?))
}

/// `−S^{Z}(M_l α, M_l β) = S^{(w,G)}(α, β)` on all narrow basis pairs.
pub fn verify_lgcy_pairing(group: &SymmetryGroup, l: i64, log_z: &PrecComplex, digits: u32, tol_log10: f64) -> Result<CheckReport> {
    group.require_cy()?;
    let shifted = chern::shift_pi(log_z);
    let basis = state::narrow_basis(group, SpaceTag::FJRW)?;
    let one = PrecComplex::one(digits);
    let vecs: Vec<CRVector<PrecComplex>> = basis.iter().map(|e| CRVector::from_basis_elt(group, e, &one)).collect();
    let at_z = vecs.par_iter().map(|v| lgcy_apply(group, l, v, log_z, digits)).collect::<Result<Vec<_>>>()?;
    let at_shift = vecs.par_iter().map(|v| lgcy_apply(group, l, v, &shifted, digits)).collect::<Result<Vec<_>>>()?;
    let mut report = CheckReport::new("lgcy");
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let lhs = s_vectors(group, &at_shift[i], &at_z[j], log_z)?.neg();
            let rhs = s_vectors(group, &vecs[i], &vecs[j], log_z)?;
            let dev = lhs.dist_f64(&rhs);
            report.note_deviation(dev);
            let ok = lhs.log10_dist(&rhs) < tol_log10;
            report.push(format!("l={l} ({}, {})", a.label(), b.label()), ok, format!("S^w = {}", rhs.to_string_digits(20)));
        }
    }
    Ok(report)
}

/// `S^{Y₊}(𝕌 α, 𝕌 β) = S^{Y₋}(α, β)` on narrow basis pairs.
pub fn verify_frak_u_pairing(group: &SymmetryGroup, l: i64, log_z: &PrecComplex, digits: u32, tol_log10: f64) -> Result<CheckReport> {
    let shifted = chern::shift_pi(log_z);
    let basis = state::narrow_basis(group, SpaceTag::YMinus)?;
    let one = PrecComplex::one(digits);
    let vecs: Vec<CRVector<PrecComplex>> = basis.iter().map(|e| CRVector::from_basis_elt(group, e, &one)).collect();
    let at_z = vecs.iter().map(|v| frak_u_apply(group, l, v, log_z, digits)).collect::<Result<Vec<_>>>()?;
    let at_shift = vecs.iter().map(|v| frak_u_apply(group, l, v, &shifted, digits)).collect::<Result<Vec<_>>>()?;
    let mut report = CheckReport::new("frak-u-pairing");
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let lhs = s_vectors(group, &at_shift[i], &at_z[j], log_z)?;
            let rhs = s_vectors(group, &vecs[i], &vecs[j], log_z)?;
            report.note_deviation(lhs.dist_f64(&rhs));
            report.push(format!("l={l} ({}, {})", basis[i].label(), basis[j].label()), lhs.log10_dist(&rhs) < tol_log10, String::new());
        }
    }
    Ok(report)
}
