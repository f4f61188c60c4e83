//! Named verification checks with default witness sets, shared by the CLI and the tests.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::chern::{self, kawasaki_chi, lattice_rank};
use crate::error::{Error, Result};
use crate::foundation::rational::int;
use crate::foundation::{CycNum, PrecComplex};
use crate::ifunc;
use crate::ktheory::{self, ChiOracle, GammaCharacter, KClass, KSpace, WindowSpec};
use crate::model::SymmetryGroup;
use crate::report::CheckReport;
use crate::state::{self, SpaceTag};
use crate::transforms;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Induced,
    Narrow,
    Delta,
    Qsd,
    Ksquare,
    GammaPairing,
    Chi,
    Normalization,
    Lattice,
    Lgcy,
    IFunction,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::Induced,
        CheckKind::Narrow,
        CheckKind::Delta,
        CheckKind::Qsd,
        CheckKind::Ksquare,
        CheckKind::GammaPairing,
        CheckKind::Chi,
        CheckKind::Normalization,
        CheckKind::Lattice,
        CheckKind::Lgcy,
        CheckKind::IFunction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Induced => "induced",
            CheckKind::Narrow => "narrow",
            CheckKind::Delta => "delta",
            CheckKind::Qsd => "qsd",
            CheckKind::Ksquare => "ksquare",
            CheckKind::GammaPairing => "gamma-pairing",
            CheckKind::Chi => "chi",
            CheckKind::Normalization => "normalization",
            CheckKind::Lattice => "lattice",
            CheckKind::Lgcy => "lgcy",
            CheckKind::IFunction => "ifunction",
        }
    }

    pub fn parse(s: &str) -> Result<CheckKind> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }

    /// Checks stated only for Calabi–Yau pairs.
    pub fn needs_cy(self) -> bool {
        matches!(self, CheckKind::Qsd | CheckKind::Ksquare | CheckKind::Lgcy)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Inclusive range of window parameters `l`.
    pub l_range: (i64, i64),
    pub digits: u32,
    pub order: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { l_range: (-5, 5), digits: 50, order: ifunc::DEFAULT_ORDER }
    }
}

impl SuiteOptions {
    pub fn ls(&self) -> Vec<i64> {
        (self.l_range.0..=self.l_range.1).collect()
    }

    /// Tolerance for numeric identities: 20 digits at the default 50-digit precision.
    pub fn tol_log10(&self) -> f64 {
        -((self.digits as f64) * 0.4).max(5.0)
    }
}

fn per_l(name: &str, ls: &[i64], f: impl Fn(i64) -> Result<CheckReport> + Sync) -> Result<CheckReport> {
    let parts = ls.par_iter().map(|&l| f(l)).collect::<Result<Vec<_>>>()?;
    let mut report = CheckReport::new(name);
    for p in parts {
        report.absorb("", p);
    }
    Ok(report)
}

/// `χ_{Y₋}(x, y)` (character sum) against `χ_{Y₊}(vGIT x, vGIT y)` (monomial counts) on window generators.
pub fn verify_chi(group: &SymmetryGroup, l: i64) -> Result<CheckReport> {
    let w = WindowSpec::new(l, group.degree());
    let oracle = ChiOracle::new(group);
    let gens: Vec<KClass> = ktheory::window_generators(group, w).into_iter().map(|c| KClass::line(KSpace::YMinus, c)).collect();
    let images = gens.iter().map(|x| ktheory::vgit_l(group, x, w)).collect::<Result<Vec<_>>>()?;
    let rows: Vec<Result<Vec<(String, bool, String)>>> = (0..gens.len())
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for j in 0..gens.len() {
                let closed = oracle.chi_yminus(&gens[i], &gens[j])?;
                let brute = oracle.chi_yminus_brute(&gens[i], &gens[j]);
                let plus = oracle.chi_yplus(&images[i], &images[j])?;
                let ok = closed == plus && closed == brute;
                row.push((format!("l={l} ({}, {})", gens[i], gens[j]), ok, format!("Y- {closed} (brute {brute}), Y+ {plus}")));
            }
            Ok(row)
        })
        .collect();
    let mut report = CheckReport::new("chi");
    for r in rows {
        for (w, ok, d) in r? {
            report.push(w, ok, d);
        }
    }
    Ok(report)
}

/// `χ(O(a), O(b, ζ))` on `ℙ(G)` from the state-space pairing against monomial counts, `|a − b| ≤ 2d`.
pub fn verify_normalization(group: &SymmetryGroup) -> Result<CheckReport> {
    let d = group.degree() as i64;
    let oracle = ChiOracle::new(group);
    let chars = group.characters();
    // the pairing side depends only on b − a and ζ
    let shifts: Vec<i64> = (-3 * d..=3 * d).collect();
    let rr: HashMap<(i64, usize), CycNum> = shifts
        .par_iter()
        .flat_map(|&s| chars.par_iter().enumerate().map(move |(i, z)| (s, i, z)))
        .map(|(s, i, z)| Ok(((s, i), kawasaki_chi(group, s, z)?)))
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("normalization");
    for a in -d..=d {
        for b in (a - 2 * d)..=(a + 2 * d) {
            for (i, z) in chars.iter().enumerate() {
                let e = KClass::line(KSpace::PG, GammaCharacter::plain(group, a));
                let f = KClass::line(KSpace::PG, GammaCharacter::new(b, z.clone(), 0));
                let counted = oracle.chi_pg(&e, &f)?;
                let value = &rr[&(b - a, i)];
                let ok = value.as_rational() == Some(int(counted as i64));
                report.push(format!("(O({a}), O({b}, {z}))"), ok, format!("counted {counted}, pairing {value}"));
            }
        }
    }
    Ok(report)
}

/// Ranks of the Chern-character lattices of `i⁰_* O(k, ζ)` on `Y₋` and of `O(k, ζ)`, `0 ≤ k < Σc`, on `ℙ(G)`.
pub fn verify_lattice(group: &SymmetryGroup) -> Result<CheckReport> {
    let d = group.degree() as i64;
    let sc = group.model().sum_weights() as i64;
    let mut report = CheckReport::new("lattice");
    let minus: Vec<KClass> = (0..d)
        .flat_map(|k| group.characters().into_iter().map(move |z| KClass::line(KSpace::YMinus, GammaCharacter::new(k, z.clone(), 0))))
        .collect();
    let r = lattice_rank(group, &minus)?;
    let nar = group.narrow_elements().len();
    report.push("Y- narrow lattice", r == nar, format!("rank {r}, narrow sectors {nar}"));
    let pg: Vec<KClass> = (0..sc)
        .flat_map(|k| group.characters().into_iter().map(move |z| KClass::line(KSpace::PG, GammaCharacter::new(k, z.clone(), 0))))
        .collect();
    let r = lattice_rank(group, &pg)?;
    let dim = state::basis(group, SpaceTag::PG)?.len();
    report.push("P(G) lattice", r == dim, format!("rank {r}, dim {dim}"));
    Ok(report)
}

/// Default witnesses for the Gamma-pairing identity: line bundles on `ℙ(G)` and Koszul factorizations.
pub fn gamma_pairs(group: &SymmetryGroup) -> Vec<(KClass, KClass)> {
    let chars = group.characters();
    let mut out = Vec::new();
    for (space, ks) in [(KSpace::PG, [0i64, 1, 3]), (KSpace::MF, [0, 1, 2])] {
        for &a in &ks {
            for &b in &ks {
                for z in chars.iter().take(3) {
                    out.push((KClass::line(space, GammaCharacter::plain(group, a)), KClass::line(space, GammaCharacter::new(b, z.clone(), 0))));
                }
            }
        }
    }
    out
}

pub fn verify_ifunction(group: &SymmetryGroup, order: u32, digits: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("ifunction");
    let minus = ifunc::i_minus_series(group, order)?;
    report.push("leading terms z 1_id + t 1_j", ifunc::leading_structure_ok(group, &minus), "");
    report.absorb("minus ", ifunc::degree_audit(group, &minus));
    let plus = ifunc::i_plus_series(group, order)?;
    report.absorb("plus ", ifunc::degree_audit(group, &plus));
    report.absorb("plus ", ifunc::gamma_ratio_check(group, &plus, digits + 10, -((digits as f64) - 5.0)));
    Ok(report)
}

/// Run one check; `Ok(None)` when the check does not apply to the model.
pub fn run_check(group: &SymmetryGroup, kind: CheckKind, opts: &SuiteOptions) -> Result<Option<CheckReport>> {
    if kind.needs_cy() && !group.predicates().quasi_cy {
        return Ok(None);
    }
    let ls = opts.ls();
    let z = PrecComplex::zero(opts.digits);
    let report = match kind {
        CheckKind::Induced => per_l("induced", &ls, |l| transforms::verify_induced(group, l))?,
        CheckKind::Narrow => per_l("narrow", &ls, |l| transforms::verify_u_narrow(group, l))?,
        CheckKind::Delta => transforms::verify_delta_square(group)?,
        CheckKind::Qsd => transforms::verify_qsd_square(group)?,
        CheckKind::Ksquare => per_l("ksquare", &ls, |l| transforms::verify_ksquare(group, l))?,
        CheckKind::GammaPairing => chern::verify_gamma_pairing(group, &gamma_pairs(group), &z, opts.digits, opts.tol_log10())?,
        CheckKind::Chi => per_l("chi", &ls, |l| verify_chi(group, l))?,
        CheckKind::Normalization => verify_normalization(group)?,
        CheckKind::Lattice => verify_lattice(group)?,
        CheckKind::Lgcy => per_l("lgcy", &ls, |l| transforms::verify_lgcy_pairing(group, l, &z, opts.digits, opts.tol_log10()))?,
        CheckKind::IFunction => verify_ifunction(group, opts.order, opts.digits)?,
    };
    Ok(Some(report))
}
