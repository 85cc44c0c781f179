//! One line per acceptance criterion. Every value is exact; the only
//! tolerances are the wall-clock limits pinned below.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use acw_core::dgforms::{DGContext, InvariantPolynomial};
use acw_core::exactalg::{artinian_length, factorial_q, parse_poly, q, Monomial, MultiPoly, Rational, TruncatedSeries, DEFAULT_LENGTH_CAP};
use acw_core::residues::{gauss_bonnet_local, local_invariant, simple_zero_invariant, working_precision, LocalZeroData};
use acw_core::scenarios::{bott_sum, projective_space_scenario, Bundle};
use acw_core::simplicial::{integrate_over_simplex, FiniteSimplicialSet};
use acw_core::sullivan::verify_de_rham;
use acw_core::Result;

const DOUBLE_ZERO_LIMIT: Duration = Duration::from_secs(1);
const SIMPLE_ZEROS_LIMIT: Duration = Duration::from_secs(1);
const BOTT_LIMIT: Duration = Duration::from_secs(30);
const GAUSS_BONNET_LIMIT: Duration = Duration::from_secs(60);
const DE_RHAM_LIMIT: Duration = Duration::from_secs(60);
const PROPERTY_LIMIT: Duration = Duration::from_secs(120);

const RANDOM_SEQUENCES: usize = 25;
const RANDOM_SEED: u64 = 0x5eed_0007;

const PROPERTY_SUITES: &[&str] = &[
    "exactalg_props",
    "dgforms_props",
    "simplicial_props",
    "sullivan_props",
    "adelic_props",
    "residues_props",
    "scenarios_props",
];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn series(s: &str, vars: &[&str]) -> Result<TruncatedSeries> {
    TruncatedSeries::new(parse_poly(s, vars)?, working_precision(vars.len(), None))
}

fn double_zero() -> Result<Outcome> {
    let zd = LocalZeroData::parse("z", &["f"], &["f^2"], &[vec!["-f"]], working_precision(1, None))?;
    let v = local_invariant(&InvariantPolynomial::parse("c1")?, &zd)?;
    Ok(outcome(v == q(1), format!("local invariant {v}, expected 1")))
}

/// `v = f ∂/∂f` on `O(1)`: zeros at the two poles of the line.
fn simple_zeros() -> Result<Outcome> {
    let scn = projective_space_scenario(1, &[q(0), q(1)], Bundle::Line(1))?;
    let p = InvariantPolynomial::parse("c1")?;
    let mut values = Vec::new();
    let mut agree = true;
    for z in &scn.zeros {
        let s = simple_zero_invariant(&p, z)?;
        agree &= s == local_invariant(&p, z)?;
        values.push(s);
    }
    let ok = agree && values == [q(1), q(0)];
    let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
    Ok(outcome(ok, format!("values [{}], closed form agrees: {agree}", shown.join(", "))))
}

fn bott() -> Result<Outcome> {
    let w = |n: usize| (0..=n as i64).map(|i| q(3 * i - 1)).collect::<Vec<Rational>>();
    let mut cases = Vec::new();
    for d in 1..=3 {
        cases.push((1, Bundle::Line(d), "c1".to_string(), q(d)));
    }
    cases.push((1, Bundle::Tangent, "c1".into(), q(2)));
    for d in 1..=2 {
        cases.push((2, Bundle::Line(d), "c1^2".into(), q(d * d)));
    }
    cases.push((2, Bundle::Tangent, "c2".into(), q(3)));
    let mut failed = Vec::new();
    for (n, bundle, p, expected) in &cases {
        let scn = projective_space_scenario(*n, &w(*n), *bundle)?;
        let r = bott_sum(&scn, &InvariantPolynomial::parse(p)?)?;
        if r.value != *expected || !r.passed {
            failed.push(format!("{} {p} gave {}", scn.name, r.value));
        }
    }
    let detail = if failed.is_empty() { format!("{} scenarios exact", cases.len()) } else { failed.join("; ") };
    Ok(outcome(failed.is_empty(), detail))
}

fn random_sequence(rng: &mut ChaCha8Rng) -> Result<Vec<TruncatedSeries>> {
    let prec = working_precision(2, None);
    let mut a = Vec::with_capacity(2);
    for _ in 0..2 {
        let lo = rng.gen_range(1..=3);
        let mut p = MultiPoly::zero(2);
        for _ in 0..rng.gen_range(1..=4) {
            let deg = rng.gen_range(lo..=3);
            let i = rng.gen_range(0..=deg);
            p.add_term(Monomial(vec![i, deg - i]), q(rng.gen_range(-3..=3)));
        }
        a.push(TruncatedSeries::new(p, prec)?);
    }
    Ok(a)
}

fn gauss_bonnet() -> Result<Outcome> {
    let v2 = ["f1", "f2"];
    let shipped = [
        vec![series("f", &["f"])?],
        vec![series("f1^2", &v2)?, series("f2^3", &v2)?],
        vec![series("f1^2 - f2^3", &v2)?, series("f2^2", &v2)?],
    ];
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in &shipped {
        let (res, len) = gauss_bonnet_local(a)?;
        checked += 1;
        if res != q(len as i64) {
            bad.push(format!("shipped {checked}: {res} vs {len}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut random = 0;
    let mut lengths = Vec::new();
    while random < RANDOM_SEQUENCES {
        let a = random_sequence(&mut rng)?;
        if a.iter().any(|s| s.poly().is_zero()) || artinian_length(&a, DEFAULT_LENGTH_CAP).is_err() {
            continue;
        }
        let (res, len) = gauss_bonnet_local(&a)?;
        random += 1;
        lengths.push(len);
        if res != q(len as i64) {
            bad.push(format!("random {random}: {res} vs {len}"));
        }
    }
    let detail = if bad.is_empty() {
        format!("{checked} shipped and {random} random sequences, lengths up to {}", lengths.iter().max().unwrap_or(&0))
    } else {
        bad.join("; ")
    };
    Ok(outcome(bad.is_empty(), detail))
}

fn de_rham() -> Result<Outcome> {
    let mut sets: Vec<FiniteSimplicialSet> = (0..=3).map(FiniteSimplicialSet::standard).collect();
    sets.push(FiniteSimplicialSet::boundary(2));
    sets.push(FiniteSimplicialSet::points(2));
    let mut bad = Vec::new();
    let mut products = 0;
    for s in &sets {
        let r = verify_de_rham(s, None)?;
        products += r.products.len();
        if !r.passed() {
            bad.push(s.name().to_string());
        }
    }
    let detail = if bad.is_empty() {
        format!("{} sets, {products} cocycle products", sets.len())
    } else {
        format!("failed on {}", bad.join(", "))
    };
    Ok(outcome(bad.is_empty(), detail))
}

fn normalization() -> Result<Outcome> {
    let mut ok = true;
    for l in 1..=4usize {
        let ctx = DGContext::new(l, &[]);
        let forward = (1..=l).fold(ctx.one(), |acc, i| acc.w(&ctx.dt(i)));
        let shifted = (0..l).fold(ctx.one(), |acc, i| acc.w(&ctx.dt(i)));
        let fact = factorial_q(l as u64);
        let sign = if l % 2 == 0 { q(1) } else { q(-1) };
        ok &= integrate_over_simplex(&forward) == q(1) / &fact;
        ok &= integrate_over_simplex(&shifted) == sign / fact;
    }
    Ok(outcome(ok, "1/l! and (-1)^l/l! for l = 1..4"))
}

/// The newest build of an integration test binary next to this one.
fn sibling(dir: &Path, name: &str) -> Option<PathBuf> {
    let prefix = format!("{name}-");
    std::fs::read_dir(dir)
        .ok()?
        .filter_map(|e| e.ok())
        .filter(|e| {
            let f = e.file_name().to_string_lossy().into_owned();
            f.starts_with(&prefix) && (!f.contains('.') || f.ends_with(".exe"))
        })
        .filter_map(|e| Some((e.metadata().ok()?.modified().ok()?, e.path())))
        .max()
        .map(|(_, p)| p)
}

fn property_suites() -> Result<Outcome> {
    let exe = std::env::current_exe().expect("test binary path");
    let dir = exe.parent().expect("deps directory");
    let mut bad = Vec::new();
    for name in PROPERTY_SUITES {
        let Some(bin) = sibling(dir, name) else {
            bad.push(format!("{name} not built"));
            continue;
        };
        let out = Command::new(&bin).arg("--quiet").output();
        match out {
            Ok(o) if o.status.success() => {}
            Ok(_) => bad.push(format!("{name} failed")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    let detail = if bad.is_empty() { format!("{} suites", PROPERTY_SUITES.len()) } else { bad.join("; ") };
    Ok(outcome(bad.is_empty(), detail))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Result<Outcome>, Option<Duration>);
    let criteria: [Criterion; 7] = [
        ("double zero of f^2 d/df on O(1)", double_zero, Some(DOUBLE_ZERO_LIMIT)),
        ("simple zeros of f d/df on O(1)", simple_zeros, Some(SIMPLE_ZEROS_LIMIT)),
        ("Bott sums on projective spaces", bott, Some(BOTT_LIMIT)),
        ("local Gauss-Bonnet identity", gauss_bonnet, Some(GAUSS_BONNET_LIMIT)),
        ("simplicial de Rham theorem", de_rham, Some(DE_RHAM_LIMIT)),
        ("normalization of the fiber integral", normalization, None),
        ("property suites", property_suites, Some(PROPERTY_LIMIT)),
    ];
    let mut all = true;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let (ok, detail) = match result {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = limit.map_or(true, |l| took < l);
        let timing = match limit {
            Some(l) => format!("{:.3} s, limit {} s", took.as_secs_f64(), l.as_secs()),
            None => format!("{:.3} s", took.as_secs_f64()),
        };
        let pass = ok && in_time;
        all &= pass;
        println!("{} criterion {}: {name}: {detail} ({timing})", if pass { "PASS" } else { "FAIL" }, i + 1);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
