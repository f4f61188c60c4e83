use lgcy::chern::*;
use lgcy::foundation::PrecComplex;
use lgcy::ktheory::{GammaCharacter, KClass, KSpace};
use lgcy::model::{GroupElement, LGModel, SymmetryGroup};

fn m1() -> SymmetryGroup {
    SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap()
}

fn m3() -> SymmetryGroup {
    SymmetryGroup::closure(&LGModel::quintic(), &[GroupElement(vec![0, 1, 4, 0, 0])]).unwrap()
}

fn line_pairs(g: &SymmetryGroup, space: KSpace, ks: &[i64]) -> Vec<(KClass, KClass)> {
    let mut out = Vec::new();
    for &a in ks {
        for &b in ks {
            for z in g.characters().iter().take(3) {
                let e = KClass::line(space, GammaCharacter::plain(g, a));
                let f = KClass::line(space, GammaCharacter::new(b, z.clone(), 0));
                out.push((e, f));
            }
        }
    }
    out
}

#[test]
fn gamma_pairing_on_p4() {
    let g = m1();
    let r = verify_gamma_pairing(&g, &line_pairs(&g, KSpace::PG, &[0, 1, 3]), &PrecComplex::zero(50), 50, -20.0).unwrap();
    assert!(r.passed(), "{:#?}", r);
}

#[test]
fn gamma_pairing_on_m3_pg() {
    let g = m3();
    let r = verify_gamma_pairing(&g, &line_pairs(&g, KSpace::PG, &[0, 2]), &PrecComplex::zero(50), 50, -20.0).unwrap();
    assert!(r.passed(), "{:#?}", r);
}

#[test]
fn gamma_pairing_on_mf() {
    let g = m1();
    let r = verify_gamma_pairing(&g, &line_pairs(&g, KSpace::MF, &[0, 1, 2]), &PrecComplex::zero(50), 50, -20.0).unwrap();
    assert!(r.passed(), "{:#?}", r);
}
