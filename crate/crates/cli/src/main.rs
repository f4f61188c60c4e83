mod modelfile;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use lgcy::chern::orb_ch;
use lgcy::foundation::rational;
use lgcy::ifunc::{self, Side};
use lgcy::ktheory::{self, GammaCharacter, KClass, KSpace, WindowSpec};
use lgcy::model::SymmetryGroup;
use lgcy::state::{self, SpaceTag};
use lgcy::suite::{self, CheckKind, SuiteOptions};
use rayon::prelude::*;
use serde_json::{json, Value};

use modelfile::ModelFile;
use report::{CheckOutcome, ModelSummary, OptionsSummary, Report, RunInfo, SCHEMA_VERSION};

const DEFAULT_PRECISION: u32 = 50;

#[derive(Parser)]
#[command(name = "lgcy", version, about = "State spaces, window equivalences and LG/CY checks for Fermat pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a model file.
    Model {
        #[command(subcommand)]
        what: ModelCmd,
    },
    /// Run a computation and print JSON.
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Run verification checks and emit a JSON report.
    Check {
        /// induced, delta, qsd, ksquare, gamma-pairing, chi, lgcy, narrow, normalization, lattice, ifunction or all
        name: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Group, sectors and state-space dimensions
    Info {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// Bases of the state spaces.
    StateSpace {
        #[arg(long)]
        space: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Orbifold Chern character of a line bundle or Koszul class.
    Ch {
        /// BG, PG, VMinus, YMinus, YPlus, MF or ZAmbient
        #[arg(long)]
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Index into the sorted character list of the quotient group.
        #[arg(long, default_value_t = 0)]
        character: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Truncated I-function series.
    Ifunction {
        #[arg(long, default_value = "minus")]
        side: String,
        #[command(flatten)]
        common: Common,
    },
    /// Window images of `i⁰_* O(k, ζ)` under vGIT_l and Orlov_l.
    Kclass {
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 0)]
        character: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Clone)]
struct Common {
    /// TOML model file; the quintic with G = <j> when omitted.
    #[arg(long)]
    model: Option<PathBuf>,
    /// Inclusive window range `a..b`.
    #[arg(long, allow_hyphen_values = true)]
    l_range: Option<String>,
    /// Truncation order of I-function series.
    #[arg(long)]
    order: Option<u32>,
    /// Working precision in decimal digits.
    #[arg(long, env = "LGCY_PRECISION")]
    precision: Option<u32>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Checks,
}

type Outcome<T> = std::result::Result<T, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

struct Ctx {
    model: ModelFile,
    opts: SuiteOptions,
    jobs: usize,
    out: Option<PathBuf>,
}

fn parse_l_range(s: &str) -> Outcome<(i64, i64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| Failure::Usage(format!("--l-range expects a..b, got {s:?}")))?;
    let a: i64 = a.trim().parse().map_err(|_| Failure::Usage(format!("bad range start in {s:?}")))?;
    let b: i64 = b.trim().parse().map_err(|_| Failure::Usage(format!("bad range end in {s:?}")))?;
    if a > b {
        return Err(Failure::Usage(format!("empty range {s:?}")));
    }
    Ok((a, b))
}

fn context(c: &Common) -> Outcome<Ctx> {
    let model = match &c.model {
        Some(p) => ModelFile::load(p).map_err(usage)?,
        None => ModelFile::default_quintic(),
    };
    let mut opts = SuiteOptions::default();
    if let Some([a, b]) = model.options.l_range {
        opts.l_range = (a, b);
    }
    if let Some(o) = model.options.order {
        opts.order = o;
    }
    opts.digits = model.options.precision.unwrap_or(DEFAULT_PRECISION);
    if let Some(r) = &c.l_range {
        opts.l_range = parse_l_range(r)?;
    }
    if let Some(o) = c.order {
        opts.order = o;
    }
    if let Some(p) = c.precision {
        if p < 10 {
            return Err(Failure::Usage("--precision must be at least 10 digits".into()));
        }
        opts.digits = p;
    }
    let jobs = c.jobs.unwrap_or_else(rayon::current_num_threads).max(1);
    Ok(Ctx { model, opts, jobs, out: c.out.clone() })
}

fn emit(ctx: &Ctx, v: &impl serde::Serialize) -> Outcome<()> {
    let text = serde_json::to_string_pretty(v).map_err(usage)? + "\n";
    match &ctx.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Outcome<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(usage)?;
    Ok(pool.install(f))
}

fn model_info(ctx: &Ctx) -> Outcome<()> {
    let g = &ctx.model.group;
    let m = g.model();
    let p = g.predicates();
    let mut dims = BTreeMap::new();
    for space in SpaceTag::ALL {
        if let Ok(b) = state::basis(g, space) {
            dims.insert(space.name(), b.len());
        }
    }
    let v = json!({
        "name": ctx.model.name,
        "fingerprint": ctx.model.fingerprint(),
        "weights": m.weights(),
        "degree": m.degree(),
        "q": (0..m.n()).map(|j| rational::fmt(&m.q(j))).collect::<Vec<_>>(),
        "group_order": g.order(),
        "bar_order": g.bar_order(),
        "narrow_elements": g.narrow_elements().iter().map(|&i| g.element(i).to_string()).collect::<Vec<_>>(),
        "characters": g.characters().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "quasi_cy": p.quasi_cy,
        "in_sl": p.in_sl,
        "convex_od": p.convex_od,
        "state_space_dims": dims,
        "convergence_constant": rational::fmt(&ifunc::convergence_constant(m)),
    });
    emit(ctx, &v)
}

fn parse_kspace(s: &str) -> Outcome<KSpace> {
    let all = [KSpace::BG, KSpace::PG, KSpace::VMinus, KSpace::YMinus, KSpace::YPlus, KSpace::MF, KSpace::ZAmbient];
    all.into_iter().find(|k| k.name().eq_ignore_ascii_case(s)).ok_or_else(|| Failure::Usage(format!("unknown space {s:?}")))
}

fn character(g: &SymmetryGroup, i: usize) -> Outcome<lgcy::model::BarCharacter> {
    g.characters().get(i).cloned().ok_or_else(|| Failure::Usage(format!("character index {i} out of range (have {})", g.characters().len())))
}

fn state_space(ctx: &Ctx, space: Option<&str>) -> Outcome<()> {
    let g = &ctx.model.group;
    let spaces: Vec<SpaceTag> = match space {
        Some(s) => vec![SpaceTag::parse(s).map_err(usage)?],
        None => SpaceTag::ALL.to_vec(),
    };
    let mut out = BTreeMap::new();
    for s in spaces {
        let basis = state::basis(g, s).map_err(usage)?;
        let rows: Vec<Value> = basis
            .iter()
            .map(|e| json!({ "label": e.label(), "sector": g.element(e.sector).to_string(), "h_power": e.h_power, "degree": rational::fmt(&e.degree) }))
            .collect();
        out.insert(s.name(), rows);
    }
    emit(ctx, &out)
}

fn chern(ctx: &Ctx, space: &str, k: i64, ch: usize) -> Outcome<()> {
    let g = &ctx.model.group;
    let ks = parse_kspace(space)?;
    let c = GammaCharacter::new(k, character(g, ch)?, 0);
    let x = KClass::line(ks, c.clone());
    let v = orb_ch(g, &x).map_err(usage)?;
    let mut sectors = BTreeMap::new();
    for (s, p) in v.sectors() {
        sectors.insert(g.element(*s).to_string(), p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    emit(ctx, &json!({ "class": x.to_string(), "space": v.space().name(), "sectors": sectors }))
}

fn ifunction(ctx: &Ctx, side: &str) -> Outcome<()> {
    let g = &ctx.model.group;
    let side = Side::parse(side).map_err(usage)?;
    let order = ctx.opts.order;
    let series = in_pool(ctx.jobs, || match side {
        Side::Minus => ifunc::i_minus_series(g, order),
        Side::Plus => ifunc::i_plus_series(g, order),
    })?
    .map_err(usage)?;
    emit(ctx, &series.export(g))
}

fn kclass(ctx: &Ctx, l: i64, k: i64, ch: usize) -> Outcome<()> {
    let g = &ctx.model.group;
    let w = WindowSpec::new(l, g.degree());
    let c = GammaCharacter::new(k, character(g, ch)?, 0);
    let x = KClass::line(KSpace::YMinus, c.clone());
    let vgit = ktheory::vgit_l(g, &x, w).map_err(usage)?;
    let orlov = if g.predicates().quasi_cy { ktheory::orlov_l(g, &x.relabel(KSpace::MF), w).map_err(usage)?.to_string() } else { "n/a".into() };
    emit(
        ctx,
        &json!({
            "input": x.to_string(),
            "window": [w.l, w.l + g.degree() as i64 - 1],
            "vgit": vgit.to_string(),
            "vgit_pg_normal_form": ktheory::pg_normal_form(g, &vgit.relabel(KSpace::PG)).to_string(),
            "orlov": orlov,
        }),
    )
}

fn check(ctx: &Ctx, name: &str) -> Outcome<()> {
    let kinds: Vec<CheckKind> = if name == "all" { CheckKind::ALL.to_vec() } else { vec![CheckKind::parse(name).map_err(usage)?] };
    let g = &ctx.model.group;
    let opts = &ctx.opts;
    let results = in_pool(ctx.jobs, || {
        kinds
            .par_iter()
            .map(|&k| {
                let t = Instant::now();
                let r = suite::run_check(g, k, opts);
                (k, r, t.elapsed().as_millis())
            })
            .collect::<Vec<_>>()
    })?;
    let mut checks = Vec::new();
    let mut timings = BTreeMap::new();
    for (k, r, ms) in results {
        timings.insert(k.name().to_string(), ms);
        let outcome = match r {
            Ok(Some(rep)) => CheckOutcome::from_report(&rep),
            Ok(None) => CheckOutcome::skipped(k.name(), "stated for Calabi-Yau pairs only"),
            Err(e) => return Err(Failure::Usage(format!("check {k}: {e}"))),
        };
        eprintln!("{:<14} {:<7} {} cases, {} failed", outcome.name, outcome.status, outcome.cases, outcome.failed);
        checks.push(outcome);
    }
    let passed = checks.iter().all(|c| c.status != "fail");
    let m = g.model();
    let report = Report {
        schema_version: SCHEMA_VERSION,
        library_version: env!("CARGO_PKG_VERSION"),
        model: ModelSummary {
            name: ctx.model.name.clone(),
            weights: m.weights().to_vec(),
            degree: m.degree(),
            group_order: g.order(),
            fingerprint: ctx.model.fingerprint(),
        },
        options: OptionsSummary { l_range: [opts.l_range.0, opts.l_range.1], precision: opts.digits, order: opts.order },
        passed,
        checks,
        run: RunInfo {
            timestamp_unix: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
            jobs: ctx.jobs,
            timings_ms: timings,
        },
    };
    emit(ctx, &report)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn run(cli: Cli) -> Outcome<()> {
    match cli.command {
        Command::Model { what: ModelCmd::Info { common } } => model_info(&context(&common)?),
        Command::Compute { what } => match what {
            ComputeCmd::StateSpace { space, common } => state_space(&context(&common)?, space.as_deref()),
            ComputeCmd::Ch { space, k, character, common } => chern(&context(&common)?, &space, k, character),
            ComputeCmd::Ifunction { side, common } => ifunction(&context(&common)?, &side),
            ComputeCmd::Kclass { l, k, character, common } => kclass(&context(&common)?, l, k, character),
        },
        Command::Check { name, common } => check(&context(&common)?, &name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
