use std::sync::Arc;

use proptest::prelude::*;

use lgcy::foundation::rational::{int, rat};
use lgcy::foundation::{gamma_taylor, linalg, CycField, CycNum, ExpPoly, NilPoly, PrecComplex, Rational};
use lgcy::ktheory::{self, pg_normal_form, KClass, KSpace, WindowSpec};
use lgcy::model::{GroupElement, LGModel, SymmetryGroup};
use lgcy::state::{self, SpaceTag};
use lgcy::transforms;

const DIGITS: u32 = 200;

fn cyc(field: &Arc<CycField>, coeffs: &[(i64, i64)]) -> CycNum {
    let qs: Vec<Rational> = coeffs.iter().map(|&(n, d)| rat(n, d)).collect();
    CycNum::from_group_ring(field, &qs)
}

fn close(a: &PrecComplex, b: &PrecComplex) -> bool {
    a.log10_dist(b) < -150.0
}

fn coeff_vec(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..20, 1i64..7), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_ops_match_embedding(order in prop::sample::select(vec![3u32, 4, 5, 6, 8, 10, 12]),
                                       a in coeff_vec(12), b in coeff_vec(12)) {
        let field = CycField::new(order);
        let x = cyc(&field, &a[..order as usize]);
        let y = cyc(&field, &b[..order as usize]);
        let (ex, ey) = (x.to_complex(DIGITS), y.to_complex(DIGITS));
        prop_assert!(close(&x.add(&y).to_complex(DIGITS), &ex.add(&ey)));
        prop_assert!(close(&x.mul(&y).to_complex(DIGITS), &ex.mul(&ey)));
        prop_assert!(close(&x.conj().to_complex(DIGITS), &PrecComplex::new(ex.re.clone(), -ex.im.clone(), DIGITS)));
        if !x.is_zero() {
            let inv = x.inv().unwrap();
            prop_assert_eq!(inv.mul(&x), CycNum::one(&field));
            prop_assert!(close(&inv.to_complex(DIGITS), &ex.inv().unwrap()));
        }
        // distributivity, exactly
        let z = CycNum::root(&field, 1);
        prop_assert_eq!(x.add(&y).mul(&z), x.mul(&z).add(&y.mul(&z)));
    }

    #[test]
    fn nilpoly_ring_laws(cap in 1usize..6, a in prop::collection::vec(-9i64..9, 6),
                         b in prop::collection::vec(-9i64..9, 6), c in prop::collection::vec(-9i64..9, 6)) {
        let proto = int(0);
        let mk = |v: &[i64]| NilPoly::from_coeffs(cap, v[..cap].iter().map(|&x| int(x)).collect(), &proto);
        let (p, q, r) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        if a[0] != 0 {
            prop_assert_eq!(p.inv().unwrap().mul(&p), NilPoly::one(cap, &proto));
        }
        // exp is a homomorphism on the nilradical
        let mut pn = p.clone();
        pn.set_coeff(0, int(0));
        let mut qn = q.clone();
        qn.set_coeff(0, int(0));
        prop_assert_eq!(pn.add(&qn).exp_nilpotent(), pn.exp_nilpotent().mul(&qn.exp_nilpotent()));
    }

    /// A nonzero exponential polynomial does not vanish on `support_len` distinct points.
    #[test]
    fn exppoly_vandermonde_separation(ks in prop::collection::btree_set(-6i64..6, 1..5),
                                      cs in prop::collection::vec(1i64..9, 5)) {
        let proto = int(0);
        let mut e = ExpPoly::zero(1, &proto);
        for (k, c) in ks.iter().zip(&cs) {
            e.add_term(*k, &NilPoly::constant(1, int(*c)));
        }
        let pts: Vec<Rational> = (2..2 + e.support_len() as i64).map(int).collect();
        let values: Vec<Rational> = pts.iter().map(|u| e.eval_exp(u).coeff(0)).collect();
        prop_assert!(values.iter().any(|v| *v != int(0)));
        // the evaluation matrix on those points is invertible
        let rows: Vec<Vec<Rational>> = pts.iter().map(|u| ks.iter().map(|&k| num_traits::Pow::pow(u.clone(), k as i32)).collect()).collect();
        prop_assert!(linalg::det(rows, &proto) != int(0));
    }

    /// `age(g) + age(g^{-1}) = N − n_g`.
    #[test]
    fn age_complement(model_ix in 0usize..4, seed in prop::collection::vec(0u32..60, 5)) {
        let models = [(vec![1, 1, 1, 1, 1], 5), (vec![1, 1, 2], 4), (vec![1, 1, 1, 3], 6), (vec![1, 2, 3], 6)];
        let (w, d) = &models[model_ix];
        let m = LGModel::new(w.clone(), *d).unwrap();
        let g = SymmetryGroup::gmax(&m).unwrap();
        let exps: Vec<u32> = (0..m.n()).map(|j| seed[j] % m.exponent(j)).collect();
        let i = g.index_of(&GroupElement(exps)).unwrap();
        let n = m.n() as i64;
        prop_assert_eq!(g.age(i) + g.age(g.inv(i)), int(n - g.fixed_rank(i) as i64));
    }

    /// `Ū_{l+d} = e^{d(H+λ)} Ū_l`.
    #[test]
    fn ubar_shift_covariance(l in -6i64..6, which in 0usize..25, model_ix in 0usize..2) {
        let g = if model_ix == 0 {
            SymmetryGroup::closure(&LGModel::quintic(), &[GroupElement(vec![0, 1, 4, 0, 0])]).unwrap()
        } else {
            SymmetryGroup::closure(&LGModel::new(vec![1, 1, 2], 4).unwrap(), &[]).unwrap()
        };
        let s = which % g.order();
        let d = g.degree() as i64;
        let a = transforms::u_bar_basis_image(&g, l, s);
        let b = transforms::u_bar_basis_image(&g, l + d, s);
        prop_assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>());
        for (t, e) in &a {
            let cap = e.cap();
            let one = CycNum::one(g.field());
            let shift = ExpPoly::term(d, NilPoly::exp_linear(cap, &int(d), &one));
            prop_assert_eq!(&e.mul(&shift), &b[t]);
        }
    }
}

#[test]
fn gamma_taylor_frozen_values() {
    // mpmath, 60 digits: Taylor coefficients of Γ(1 + x) and Γ(1/2 + x)
    let one = gamma_taylor(&int(1), 3, 60);
    let want_one = ["1.0", "-0.577215664901532860606512090082402431042159335939923598805767225", "0.989055995327972555395395651500634707939183520728214090443195747", "-0.90747907608088628901656016735627511492861144907256376094133116"];
    let half = gamma_taylor(&rat(1, 2), 3, 60);
    let want_half = ["1.77245385090551602729816748334114518279754945612238712821380775", "-3.48023090691326202693859519814434975003242933450376021515433339", "7.79008872120312639033726564251141218576267859574836516626410637", "-15.7947670515357972040496151978022436956345090391393269344054921"];
    for (got, want) in [(one, want_one), (half, want_half)] {
        for (g, w) in got.iter().zip(want) {
            let w = rug::Float::with_val(256, rug::Float::parse(w).unwrap());
            let diff = rug::Float::with_val(256, &g.re - &w).abs();
            assert!(diff < 1e-55, "{} vs {w}", g.re);
        }
    }
}

/// The vGIT images of the window generators form an integral basis of `K(ℙ(G))`.
#[test]
fn vgit_window_matrix_is_unimodular() {
    let groups = [
        SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap(),
        SymmetryGroup::closure(&LGModel::new(vec![1, 1, 2], 4).unwrap(), &[]).unwrap(),
        SymmetryGroup::closure(&LGModel::quintic(), &[GroupElement(vec![0, 1, 4, 0, 0])]).unwrap(),
    ];
    for g in &groups {
        let sc = g.model().sum_weights() as i64;
        let mut basis = Vec::new();
        for k in 0..sc {
            for z in g.characters() {
                basis.push(ktheory::GammaCharacter::new(k, z.clone(), 0));
            }
        }
        for l in -5..=5 {
            let w = WindowSpec::new(l, g.degree());
            let mut rows = Vec::new();
            for c in ktheory::window_generators(g, w) {
                let img = ktheory::vgit_l(g, &KClass::line(KSpace::YMinus, c), w).unwrap();
                let nf = pg_normal_form(g, &img.relabel(KSpace::PG));
                let row: Vec<Rational> = basis.iter().map(|b| int(nf.terms().get(b).copied().unwrap_or(0))).collect();
                rows.push(row);
            }
            let det = linalg::det(rows, &int(0));
            assert!(det == int(1) || det == int(-1), "l = {l}: det {det}");
        }
    }
}

#[test]
fn delta_maps_are_bijections() {
    for g in [
        SymmetryGroup::closure(&LGModel::quintic(), &[]).unwrap(),
        SymmetryGroup::closure(&LGModel::quintic(), &[GroupElement(vec![0, 1, 4, 0, 0])]).unwrap(),
    ] {
        let zero = CycNum::zero(g.field());
        let dm = transforms::delta_minus(&g).unwrap();
        assert!(!dm.det(&zero).unwrap().is_zero());
        let dp = transforms::delta_plus(&g).unwrap();
        assert_eq!(dp.rows(), dp.cols());
        assert!(!dp.det(&zero).unwrap().is_zero());
        assert_eq!(dp.cols(), state::narrow_basis(&g, SpaceTag::FJRW).unwrap().len());
    }
}
