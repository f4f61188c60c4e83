use std::collections::BTreeMap;

use lgcy::foundation::rational::{int, rat};
use lgcy::foundation::{CycNum, PrecComplex, ZLaurent};
use lgcy::ifunc::*;
use lgcy::model::{GroupElement, LGModel, SymmetryGroup};
use lgcy::state::{pair, CRVector, SpaceTag};

fn m1() -> SymmetryGroup {
    SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap()
}
fn m2() -> SymmetryGroup {
    SymmetryGroup::closure(&LGModel::new(vec![1, 1, 2], 4).unwrap(), &[]).unwrap()
}
fn m3() -> SymmetryGroup {
    SymmetryGroup::closure(&LGModel::quintic(), &[GroupElement(vec![0, 1, 4, 0, 0])]).unwrap()
}

#[test]
fn series_audits() {
    for (name, g, order) in [("M1", m1(), 6), ("M2", m2(), 6), ("M3", m3(), 3)] {
        for series in [i_minus_series(&g, order).unwrap(), i_plus_series(&g, order).unwrap()] {
            let a = degree_audit(&g, &series);
            println!("{name} {:?}: {} terms, flagged {}, {}", series.side, series.terms.len(), series.flagged().len(), a.summary());
            assert!(a.passed(), "{:?}", a.failures().iter().take(3).collect::<Vec<_>>());
            let r = gamma_ratio_check(&g, &series, 60, -45.0);
            assert!(r.passed(), "{:?}", r.failures().iter().take(3).collect::<Vec<_>>());
        }
        assert!(leading_structure_ok(&g, &i_minus_series(&g, 2).unwrap()));
    }
}

#[test]
fn quintic_low_order_terms() {
    let g = m1();
    let s = i_minus_series(&g, 2).unwrap();
    let ix = |k0| SeriesIndex { k0, kvec: BTreeMap::new() };
    // t²/(2z) with M(2, 0) = 1
    let t2 = s.term(&ix(2)).unwrap();
    assert_eq!(t2.sector, g.pow(g.j_index(), 2));
    assert_eq!(t2.coeff, IPoly::monomial(1, 0, 0, int(-1), rat(1, 2)));
    // k0 = 5 has λ-degree 5
    let s = i_minus_series(&g, 5).unwrap();
    let t5 = s.term(&ix(5)).unwrap();
    assert!(t5.coeff.terms().all(|((a, _, _), _)| *a == 5));
}

#[test]
fn plus_side_leading_term_and_empty_sectors() {
    let g = m1();
    let s = i_plus_series(&g, 4).unwrap();
    let t0 = s.term(&SeriesIndex { k0: 0, kvec: BTreeMap::new() }).unwrap();
    assert_eq!(t0.coeff, IPoly::monomial(5, 0, 0, int(1), int(1)));
    // j^{-k0} has empty fixed locus for 0 < k0 < 5
    for k0 in 1..5 {
        assert!(s.term(&SeriesIndex { k0, kvec: BTreeMap::new() }).is_none());
    }
}

#[test]
fn modification_recursion() {
    // M(k0 + d)/M(k0) = ∏_j ∏_{l} (−c_j λ − (⟨k0 q_j⟩ + ⌊k0 q_j⌋ + l) z) over the new l range
    let g = m2();
    let model = g.model().clone();
    for k0 in 0..6u32 {
        let a = modification_factor(&g, &SeriesIndex { k0, kvec: BTreeMap::new() });
        let b = modification_factor(&g, &SeriesIndex { k0: k0 + 4, kvec: BTreeMap::new() });
        let mut extra = IPoly::constant(1, int(1));
        for j in 0..model.n() {
            let y = model.q(j) * int(k0 as i64);
            for step in 0..model.weight(j) as i64 {
                let shift = y.clone() + int(step);
                let f = IPoly::monomial(1, 1, 0, int(0), int(-(model.weight(j) as i64)))
                    .add(&IPoly::monomial(1, 0, 0, int(1), -shift));
                extra = extra.mul(&f);
            }
        }
        assert_eq!(b, a.mul(&extra), "k0 = {k0}");
    }
}

#[test]
fn dual_basis_and_specialization() {
    let g = m1();
    let params = TwistedParams::standard(g.model(), Some(PrecComplex::from_rational(&rat(2, 1), 40)));
    let dual = twisted_dual_basis(&g, &params).unwrap();
    let narrow = dual[&g.j_index()].clone();
    assert_eq!(narrow.coefficient, int(5));
    assert_eq!(narrow.lambda_power, 0);
    let id = &dual[&g.identity()];
    assert_eq!(id.lambda_power, 5);
    assert_eq!(id.coefficient, int(5));
    for (gi, e) in &dual {
        let back = &dual[&e.partner];
        assert_eq!(back.partner, *gi);
        assert_eq!(back.lambda_power, e.lambda_power);
    }
    let r = verify_s_specialization(&params, 3, -35.0).unwrap();
    assert!(r.passed(), "{:?}", r.entries);
    let spec = s_specialization(&params, 1).unwrap();
    // λ_1 = −2: s_1 = 1/λ_1
    assert!(spec.s[0][1].log10_dist(&PrecComplex::from_rational(&rat(-1, 2), 40)) < -35.0);
    let zero = TwistedParams::standard(g.model(), Some(PrecComplex::zero(40)));
    assert!(s_specialization(&zero, 2).is_err());
}

#[test]
fn symplectic_pairing_signs() {
    let g = m1();
    let field = g.field().clone();
    let one = CycNum::one(&field);
    let a = CRVector::unit(&g, SpaceTag::FJRW, g.j_index(), 0, one.clone()).unwrap();
    let b = CRVector::unit(&g, SpaceTag::FJRW, g.pow(g.j_index(), 4), 0, one.clone()).unwrap();
    let ab = pair(&g, &a, &b).unwrap();
    let zero = CycNum::zero(&field);
    let f = |n, v: &CRVector<CycNum>| ZLaurent::monomial(n, v.clone());
    assert_eq!(symplectic_pair(&g, &f(0, &a), &f(-1, &b), &zero).unwrap(), ab);
    assert_eq!(symplectic_pair(&g, &f(1, &a), &f(-2, &b), &zero).unwrap(), ab.neg());
    assert!(symplectic_pair(&g, &f(0, &a), &f(2, &b), &zero).unwrap().is_zero());
}
