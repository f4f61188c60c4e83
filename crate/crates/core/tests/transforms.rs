use lgcy::foundation::PrecComplex;
use lgcy::model::{GroupElement, LGModel, SymmetryGroup};
use lgcy::transforms::*;

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
fn squares_on_all_models() {
    for g in [m1(), m2(), m3()] {
        for l in [-2, 0, 3] {
            let r = verify_induced(&g, l).unwrap();
            assert!(r.passed(), "{}", r.failures().iter().map(|e| format!("{} {}", e.witness, e.detail)).collect::<Vec<_>>().join("\n"));
            let r = verify_u_narrow(&g, l).unwrap();
            assert!(r.passed(), "{:?}", r.failures());
            let r = verify_ksquare(&g, l).unwrap();
            assert!(r.passed(), "{:?}", r.failures());
        }
        assert!(verify_delta_square(&g).unwrap().passed());
        let r = verify_qsd_square(&g).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
    }
}

#[test]
fn pairings() {
    for g in [m1(), m3()] {
        for l in [0, 1] {
            let r = verify_frak_u_pairing(&g, l, &PrecComplex::zero(50), 50, -20.0).unwrap();
            println!("{}", r.summary());
            let r = verify_lgcy_pairing(&g, l, &PrecComplex::zero(50), 50, -20.0).unwrap();
            println!("{}", r.summary());
            for e in r.entries.iter().take(6) { println!("  {} {} {}", e.witness, e.ok, e.detail); }
        }
    }
}
