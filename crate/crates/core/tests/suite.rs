use std::time::Instant;

use lgcy::model::{GroupElement, LGModel, SymmetryGroup};
use lgcy::suite::*;

#[test]
fn all_checks_on_baseline_models() {
    let models = [
        ("M1", SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap()),
        ("M2", SymmetryGroup::closure(&LGModel::new(vec![1, 1, 2], 4).unwrap(), &[]).unwrap()),
        ("M3", SymmetryGroup::closure(&LGModel::quintic(), &[GroupElement(vec![0, 1, 4, 0, 0])]).unwrap()),
    ];
    let opts = SuiteOptions { l_range: (-1, 1), digits: 50, order: 4 };
    for (name, g) in &models {
        for kind in CheckKind::ALL {
            let t = Instant::now();
            let r = run_check(g, kind, &opts).unwrap().unwrap();
            println!("{name} {} in {:?}", r.summary(), t.elapsed());
            assert!(r.passed(), "{name} {kind}: {:?}", r.failures().iter().take(3).collect::<Vec<_>>());
        }
    }
}
