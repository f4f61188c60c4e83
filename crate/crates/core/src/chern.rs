//! Orbifold Chern characters, Todd and Gamma classes, flat frames and the
//! S-pairing at the large-radius limit.

use crate::error::{Error, Result};
use crate::foundation::rational::{self, int, rat, Rational};
use crate::foundation::{gamma_taylor, linalg, CycNum, NilPoly, PrecComplex};
use crate::ktheory::{ChiOracle, GammaCharacter, KClass, KSpace};
use crate::model::{BarCharacter, SymmetryGroup};
use crate::report::CheckReport;
use crate::state::{self, pair, sector_cap, sectors, CRVector, SpaceTag};

/// State space receiving the Chern character of a class on `space`.
pub fn target_space(space: KSpace) -> SpaceTag {
    match space {
        KSpace::BG | KSpace::VMinus | KSpace::YMinus => SpaceTag::YMinus,
        KSpace::PG => SpaceTag::PG,
        KSpace::YPlus => SpaceTag::YPlus,
        KSpace::MF => SpaceTag::FJRW,
        KSpace::ZAmbient => SpaceTag::ZAmbient,
    }
}

fn root(group: &SymmetryGroup, e: i64) -> CycNum {
    CycNum::root(group.field(), e)
}

/// `∏_j (1 − ξ^{−u_j(g)})`.
fn koszul_product(group: &SymmetryGroup, g: usize) -> CycNum {
    let one = CycNum::one(group.field());
    let mut p = one.clone();
    for &u in group.units(g) {
        p = p.mul(&one.sub(&root(group, -(u as i64))));
    }
    p
}

/// `ch_g(O(k, ζ)) = ξ^{v} e^{kH}` at cap `cap`.
fn line_ch(group: &SymmetryGroup, c: &GammaCharacter, g: usize, cap: usize) -> NilPoly<CycNum> {
    let v = root(group, group.line_value(c.k1, &c.zeta, g) as i64);
    NilPoly::exp_linear(cap, &int(c.k1), &v).scale(&v)
}

/// Orbifold Chern character.
pub fn orb_ch(group: &SymmetryGroup, x: &KClass) -> Result<CRVector<CycNum>> {
    let field = group.field();
    let zero = CycNum::zero(field);
    let space = target_space(x.space);
    let mut out = CRVector::zero(space, &zero);
    match x.space {
        KSpace::BG | KSpace::VMinus => {
            for g in 0..group.order() {
                for (c, n) in x.terms() {
                    out.add_to_sector(group, g, &line_ch(group, c, g, 1).scale_q(&int(*n)))?;
                }
            }
        }
        KSpace::YMinus => {
            for (c, n) in x.terms() {
                out = out.add(&ch_koszul_minus(group, c).scale_q(&int(*n)));
            }
        }
        KSpace::MF => {
            for (c, n) in x.terms() {
                out = out.add(&ch_mf_koszul(group, c).scale_q(&int(*n)));
            }
        }
        KSpace::PG | KSpace::YPlus | KSpace::ZAmbient => {
            for g in sectors(group, SpaceTag::PG) {
                let cap = group.fixed_rank(g);
                let mut p = NilPoly::zero(cap, &zero);
                for (c, n) in x.terms() {
                    p = p.add(&line_ch(group, c, g, cap).scale_q(&int(*n)));
                }
                if x.space == KSpace::YPlus {
                    // i⁰_* E = E ⊗ (O − O(d))
                    let one = CycNum::one(field);
                    let koszul = NilPoly::one(cap, &one).sub(&NilPoly::exp_linear(cap, &int(group.degree() as i64), &one));
                    p = p.mul(&koszul);
                }
                if x.space == KSpace::ZAmbient {
                    let zcap = sector_cap(group, SpaceTag::ZAmbient, g);
                    if zcap == 0 {
                        continue;
                    }
                    p = p.with_cap(zcap);
                }
                out.add_to_sector(group, g, &p)?;
            }
        }
    }
    Ok(out)
}

/// `ch(i⁰_* O_{BG}(twist))` on `Y₋` by the product formula.
pub fn ch_koszul_minus(group: &SymmetryGroup, twist: &GammaCharacter) -> CRVector<CycNum> {
    let zero = CycNum::zero(group.field());
    let mut out = CRVector::zero(SpaceTag::YMinus, &zero);
    for g in group.narrow_elements() {
        let v = root(group, group.line_value(twist.k1, &twist.zeta, g) as i64);
        out.set_sector(group, g, NilPoly::constant(1, v.mul(&koszul_product(group, g)))).expect("sector exists");
    }
    out
}

/// `ch(i¹_* O_{BG}(twist))` on the narrow FJRW space.
pub fn ch_mf_koszul(group: &SymmetryGroup, twist: &GammaCharacter) -> CRVector<CycNum> {
    ch_koszul_minus(group, twist).retag(group, SpaceTag::FJRW)
}

/// `x / (1 − e^{−x})` at `x = c H`, to `cap`.
fn todd_series(cap: usize, c: &Rational) -> NilPoly<Rational> {
    let b = rational::bernoulli(cap);
    let coeffs: Vec<Rational> = (0..cap)
        .map(|n| {
            let mut t = b[n].clone() / Rational::from_integer(rational::factorial(n as u64));
            if n % 2 == 1 {
                t = -t;
            }
            t
        })
        .collect();
    NilPoly::from_series_scaled(cap, &coeffs, c, &int(0))
}

/// Todd and Euler classes of a line bundle `O(k, ζ)` on `Y₊`, sector by sector.
///
/// The line bundle must act trivially at every sector (as `O(−d)` does); its
/// Chern root is then `kH` everywhere.
pub fn todd_and_euler(group: &SymmetryGroup, line: &GammaCharacter) -> Result<(CRVector<Rational>, CRVector<Rational>)> {
    group.require_cy().or_else(|e| if group.predicates().convex_od { Ok(()) } else { Err(e) })?;
    let mut todd = CRVector::zero(SpaceTag::YPlus, &int(0));
    let mut euler = CRVector::zero(SpaceTag::YPlus, &int(0));
    for g in sectors(group, SpaceTag::YPlus) {
        if group.line_value(line.k1, &line.zeta, g) != 0 {
            return Err(Error::InvalidArgument(format!("{line} is not trivial on sector {}", group.element(g))));
        }
        let cap = sector_cap(group, SpaceTag::YPlus, g);
        todd.set_sector(group, g, todd_series(cap, &int(line.k1)))?;
        euler.set_sector(group, g, NilPoly::monomial(cap, 1, int(line.k1)))?;
    }
    Ok((todd, euler))
}

/// `Γ(offset + c H)` as a truncated series.
fn gamma_factor(offset: &Rational, c: &Rational, cap: usize, digits: u32) -> NilPoly<PrecComplex> {
    let proto = PrecComplex::zero(digits);
    let series = gamma_taylor(offset, cap.saturating_sub(1), digits);
    NilPoly::from_series_scaled(cap, &series, c, &proto)
}

/// `∏_j Γ(1 − m_j(g) + c_j H)` on a `ℙ(G)` sector.
fn gamma_pg_sector(group: &SymmetryGroup, g: usize, cap: usize, digits: u32) -> NilPoly<PrecComplex> {
    let model = group.model();
    let mut p = NilPoly::one(cap, &PrecComplex::zero(digits));
    for j in 0..model.n() {
        let offset = rational::one() - group.multiplicity(g, j);
        p = p.mul(&gamma_factor(&offset, &int(model.weight(j) as i64), cap, digits));
    }
    p
}

/// The Gamma class `Γ̂` of a state space.
pub fn gamma_class(group: &SymmetryGroup, space: SpaceTag, digits: u32) -> Result<CRVector<PrecComplex>> {
    let proto = PrecComplex::zero(digits);
    let mut out = CRVector::zero(space, &proto);
    let d = int(group.degree() as i64);
    for g in sectors(group, space) {
        let cap = sector_cap(group, space, g);
        let p = match space {
            SpaceTag::YMinus | SpaceTag::FJRW => {
                let mut v = PrecComplex::one(digits);
                for j in 0..group.model().n() {
                    let offset = rational::one() - group.multiplicity(g, j);
                    v = v.mul(&gamma_taylor(&offset, 0, digits)[0]);
                }
                NilPoly::constant(1, v)
            }
            SpaceTag::PG => gamma_pg_sector(group, g, cap, digits),
            SpaceTag::YPlus => {
                gamma_pg_sector(group, g, cap, digits).mul(&gamma_factor(&rational::one(), &(-d.clone()), cap, digits))
            }
            SpaceTag::ZAmbient => {
                let full = group.fixed_rank(g);
                let normal = gamma_factor(&rational::one(), &d, full, digits).inv()?;
                gamma_pg_sector(group, g, full, digits).mul(&normal).with_cap(cap)
            }
        };
        out.set_sector(group, g, p)?;
    }
    Ok(out)
}

/// Central charge `ĉ`.
pub fn c_hat(group: &SymmetryGroup, space: SpaceTag) -> Rational {
    let n = group.model().n() as i64;
    match space {
        SpaceTag::PG => int(n - 1),
        SpaceTag::YMinus | SpaceTag::YPlus => int(n),
        SpaceTag::ZAmbient => int(n - 2),
        SpaceTag::FJRW => int(n) - group.model().sum_q() * int(2),
    }
}

/// `Gr = deg / 2` on `1_g H^k`.
pub fn gr(group: &SymmetryGroup, space: SpaceTag, g: usize, k: usize) -> Rational {
    state::degree(group, space, g, k) * rat(1, 2)
}

/// `deg₀ / 2` on `1_g H^k`: the unshifted half-degree.
pub fn deg0_half(group: &SymmetryGroup, space: SpaceTag, k: usize) -> Rational {
    match space {
        SpaceTag::YMinus => rational::zero(),
        SpaceTag::FJRW => -group.model().sum_q(),
        _ => int(k as i64),
    }
}

/// `ρ = c_1(T)` as a multiple of `H`.
pub fn rho(group: &SymmetryGroup, space: SpaceTag) -> i64 {
    let m = group.model();
    let sc = m.sum_weights() as i64;
    let d = m.degree() as i64;
    match space {
        SpaceTag::PG => sc,
        SpaceTag::YPlus | SpaceTag::ZAmbient => sc - d,
        SpaceTag::YMinus | SpaceTag::FJRW => 0,
    }
}

/// Principal `ln(2πi) = ln 2π + iπ/2`.
pub fn log_two_pi_i(digits: u32) -> PrecComplex {
    PrecComplex::two_pi_i(digits).ln()
}

/// `exp(w · log)`.
pub fn power(log: &PrecComplex, w: &Rational) -> PrecComplex {
    PrecComplex::pow_with_log(log, &PrecComplex::from_rational(w, log.digits()))
}

/// Multiply `1_g H^k` by `base^{sign · deg₀/2}` (principal branch of `2πi`).
pub fn apply_two_pi_i_deg0(group: &SymmetryGroup, v: &CRVector<PrecComplex>, sign: i64, digits: u32) -> CRVector<PrecComplex> {
    let log = log_two_pi_i(digits);
    let space = v.space();
    v.map_sectors(|_, p| p.grade_scale(|k| power(&log, &(deg0_half(group, space, k) * int(sign)))))
}

/// Multiply `1_g H^k` by `z^{sign · Gr}` for the given `log z`.
pub fn apply_z_gr(group: &SymmetryGroup, v: &CRVector<PrecComplex>, log_z: &PrecComplex, sign: i64) -> CRVector<PrecComplex> {
    let space = v.space();
    v.map_sectors(|g, p| p.grade_scale(|k| power(log_z, &(gr(group, space, g, k) * int(sign)))))
}

/// Multiply by `z^{ρ} = e^{(log z) ρ}`.
pub fn apply_z_rho(group: &SymmetryGroup, v: &CRVector<PrecComplex>, log_z: &PrecComplex) -> CRVector<PrecComplex> {
    let r = rho(group, v.space());
    if r == 0 {
        return v.clone();
    }
    let coeff = log_z.mul(&PrecComplex::from_i64(r, log_z.digits()));
    v.map_sectors(|_, p| NilPoly::monomial(p.cap(), 1, coeff.clone()).exp_nilpotent().mul(p))
}

/// A flat section at the large-radius limit, with the data needed to pair it.
#[derive(Clone, Debug)]
pub struct FlatFrameVector {
    pub space: SpaceTag,
    pub c_hat: Rational,
    pub log_z: PrecComplex,
    pub vector: CRVector<PrecComplex>,
}

/// `s(E) = (2πi)^{−ĉ} z^{−Gr} z^{ρ} Γ̂ (2πi)^{deg₀/2} I^* ch(E)`, from `ch(E)`.
pub fn flat_frame_ch(group: &SymmetryGroup, ch: &CRVector<CycNum>, log_z: &PrecComplex, digits: u32) -> Result<FlatFrameVector> {
    let space = ch.space();
    let proto = PrecComplex::zero(digits);
    let v = ch.involution(group).map(&proto, |c| c.to_complex(digits));
    let v = apply_two_pi_i_deg0(group, &v, 1, digits);
    let v = v.mul_sectorwise(&gamma_class(group, space, digits)?);
    let v = apply_z_rho(group, &v, log_z);
    let v = apply_z_gr(group, &v, log_z, -1);
    let ch_hat = c_hat(group, space);
    let v = v.scale(&power(&log_two_pi_i(digits), &(-ch_hat.clone())));
    Ok(FlatFrameVector { space, c_hat: ch_hat, log_z: log_z.clone(), vector: v })
}

pub fn flat_frame(group: &SymmetryGroup, x: &KClass, log_z: &PrecComplex, digits: u32) -> Result<FlatFrameVector> {
    flat_frame_ch(group, &orb_ch(group, x)?, log_z, digits)
}

/// `S(u, v) = (2πi z)^{ĉ} ⟨u(e^{πi} z), v(z)⟩`; `u` must be the frame at `log z + πi`.
pub fn s_pairing(group: &SymmetryGroup, u_shifted: &FlatFrameVector, v: &FlatFrameVector) -> Result<PrecComplex> {
    let digits = v.log_z.digits();
    let log = log_two_pi_i(digits).add(&v.log_z);
    let pre = power(&log, &v.c_hat);
    Ok(pre.mul(&pair(group, &u_shifted.vector, &v.vector)?))
}

/// `e^{πi}` applied to a branch of `log z`.
pub fn shift_pi(log_z: &PrecComplex) -> PrecComplex {
    let d = log_z.digits();
    log_z.add(&PrecComplex::new(PrecComplex::pi(d) * 0u32, PrecComplex::pi(d), d))
}

/// `S(s(E), s(F))` for two K-classes on the same space.
pub fn s_of_classes(group: &SymmetryGroup, e: &KClass, f: &KClass, log_z: &PrecComplex, digits: u32) -> Result<PrecComplex> {
    let u = flat_frame(group, e, &shift_pi(log_z), digits)?;
    let v = flat_frame(group, f, log_z, digits)?;
    s_pairing(group, &u, &v)
}

/// The phase expected in `S(s(E), s(F)) = phase · χ(F, E)`.
pub fn expected_phase(group: &SymmetryGroup, space: SpaceTag, digits: u32) -> Result<PrecComplex> {
    let exponent = match space {
        SpaceTag::PG => int(group.model().n() as i64 - 1),
        SpaceTag::FJRW => int(group.model().n() as i64) + group.model().sum_q(),
        other => {
            return Err(Error::InvalidArgument(format!("pairing identity is stated for proper and LG spaces, not {other}")))
        }
    };
    // e^{πi·x} = e^{2πi·x/2}
    Ok(PrecComplex::root_of_unity(&(exponent * rat(1, 2)), digits))
}

/// Compare `S(s(E), s(F))` with `phase · χ(F, E)` for every pair.
pub fn verify_gamma_pairing(
    group: &SymmetryGroup,
    pairs: &[(KClass, KClass)],
    log_z: &PrecComplex,
    digits: u32,
    tol_log10: f64,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("gamma-pairing");
    let oracle = ChiOracle::new(group);
    for (e, f) in pairs {
        let space = target_space(e.space);
        let phase = expected_phase(group, space, digits)?;
        let chi = oracle.chi(f, e)?;
        let expected = phase.mul(&PrecComplex::from_i64(chi as i64, digits));
        let s = s_of_classes(group, e, f, log_z, digits)?;
        let dev = s.dist_f64(&expected);
        let ok = s.log10_dist(&expected) < tol_log10;
        report.note_deviation(dev);
        report.push(format!("({e}, {f})"), ok, format!("chi(F,E) = {chi}, S = {}", s.to_string_digits(25)));
    }
    Ok(report)
}

/// Rank over `Q(ξ_d)` of the Chern characters of the given classes.
pub fn lattice_rank(group: &SymmetryGroup, gens: &[KClass]) -> Result<usize> {
    let Some(first) = gens.first() else { return Ok(0) };
    let space = target_space(first.space);
    let basis = state::basis(group, space)?;
    let mut rows = Vec::with_capacity(gens.len());
    for x in gens {
        if target_space(x.space) != space {
            return Err(Error::SpaceMismatch { expected: space.name().into(), found: x.space.name().into() });
        }
        rows.push(orb_ch(group, x)?.coords(&basis));
    }
    Ok(linalg::rank(rows))
}

/// `χ(ℙ(G), O(k, ζ))` by the orbifold Riemann–Roch sum over sectors,
/// integrated with the state-space pairing.
pub fn kawasaki_chi(group: &SymmetryGroup, k: i64, zeta: &BarCharacter) -> Result<CycNum> {
    let field = group.field();
    let zero = CycNum::zero(field);
    let one = CycNum::one(field);
    let model = group.model();
    let mut alpha = CRVector::zero(SpaceTag::PG, &zero);
    let mut ones = CRVector::zero(SpaceTag::PG, &zero);
    for g in sectors(group, SpaceTag::PG) {
        let cap = group.fixed_rank(g);
        let mut p = line_ch(group, &GammaCharacter { k1: k, zeta: zeta.clone(), k2: 0 }, g, cap);
        for j in 0..model.n() {
            let c = int(model.weight(j) as i64);
            let u = group.units(g)[j];
            let factor = if u == 0 {
                todd_series(cap, &c).map(&zero, |q| CycNum::from_rational(field, q))
            } else {
                let e = NilPoly::exp_linear(cap, &(-c), &one).scale(&root(group, -(u as i64)));
                NilPoly::one(cap, &one).sub(&e).inv()?
            };
            p = p.mul(&factor);
        }
        alpha.set_sector(group, g, p)?;
        ones.set_sector(group, g, NilPoly::one(cap, &one))?;
    }
    pair(group, &alpha, &ones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LGModel;

    #[test]
    fn todd_of_minus_five() {
        let g = SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap();
        let (td, eu) = todd_and_euler(&g, &GammaCharacter::plain(&g, -5)).unwrap();
        let p = td.sector(0).unwrap();
        assert_eq!(p.coeff(0), int(1));
        assert_eq!(p.coeff(1), rat(-5, 2));
        assert_eq!(p.coeff(2), rat(25, 12));
        assert_eq!(eu.coeff(0, 1), int(-5));
    }

    #[test]
    fn kawasaki_on_p112() {
        let g = SymmetryGroup::closure(&LGModel::new(vec![1, 1, 2], 4).unwrap(), &[]).unwrap();
        let triv = BarCharacter::trivial(1);
        for k in -6..8 {
            let chi = kawasaki_chi(&g, k, &triv).unwrap();
            let o = ChiOracle::new(&g);
            assert_eq!(chi.as_rational(), Some(int(o.chi_pg_line(k, &triv).unwrap() as i64)), "k = {k}");
        }
    }
}
