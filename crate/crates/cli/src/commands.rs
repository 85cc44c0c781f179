//! One function per subcommand, each turning its input into a report.

use acw_core::dgforms::InvariantPolynomial;
use acw_core::exactalg::{artinian_length, fmt_rational, sign_pow, DEFAULT_LENGTH_CAP};
use acw_core::residues::residue_general;
use acw_core::scenarios::{bott_sum, chern_report, curve_adelic_integral, Scenario};
use acw_core::simplicial::FiniteSimplicialSet;
use acw_core::sullivan::verify_de_rham;
use acw_core::{Error, Result};

use crate::inputs::FractionFile;
use crate::report::Report;

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub precision: Option<u32>,
}

impl Options {
    fn chain_precision(&self) -> Option<i64> {
        self.precision.map(i64::from)
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn residue(name: &str, src: &str, opts: Options) -> Result<Report> {
    let mut report = Report::new("residue");
    report.input(name, src.as_bytes());
    let f = FractionFile::parse(src)?.build(opts.precision)?;
    let vars = &f.file.vars;
    if let Some(n) = &f.file.name {
        report.info("name", n.clone());
    }
    report.info("fraction", f.fraction.render(vars));
    let r = residue_general(&f.fraction)?;
    report.info("residue", fmt_rational(&r));
    let mut value = r.clone();
    if f.file.signed {
        let n = vars.len() as u64;
        value = sign_pow(n * (n + 1) / 2) * r.clone();
        report.info("local invariant", fmt_rational(&value));
    }
    if f.jacobian {
        let len = artinian_length(&f.fraction.denominators, DEFAULT_LENGTH_CAP)?;
        report.check("artinian length", len.to_string(), r == acw_core::exactalg::Rational::from_integer(len.into()));
    }
    if let Some(e) = &f.expected {
        report.check("expected", fmt_rational(e), *e == value);
    }
    Ok(report)
}

pub fn bott(name: &str, src: &str, poly: Option<&str>, opts: Options) -> Result<Report> {
    let mut report = Report::new("bott");
    report.input(name, src.as_bytes());
    let scn = Scenario::from_json(src, opts.precision)?;
    let poly = poly
        .map(str::to_string)
        .or_else(|| scn.poly.clone())
        .ok_or_else(|| Error::Parse("no invariant polynomial: pass --poly".into()))?;
    let p = InvariantPolynomial::parse(&poly)?;
    let r = bott_sum(&scn, &p)?;
    report.info("scenario", r.scenario.clone());
    report.info("polynomial", r.poly.clone());
    for z in &r.zeros {
        let mut value = format!("{} -> {} (length {})", z.fraction, z.invariant, z.length);
        if let Some(s) = &z.simple {
            value.push_str(&format!(", closed form {s}"));
        }
        report.check(format!("zero {}", z.label), value, z.agrees);
    }
    report.info("sum of local invariants", r.local_sum.clone());
    report.info("chern number", r.chern_number.clone());
    if let Some(e) = &r.expected {
        report.check("expected", e.clone(), r.passed);
    }
    if let Some(p) = &scn.provenance {
        report.info("provenance", p.clone());
    }
    Ok(report)
}

pub fn derham(name: &str, src: &str, weight_cap: Option<usize>) -> Result<Report> {
    let mut report = Report::new("derham");
    report.input(name, src.as_bytes());
    let s = FiniteSimplicialSet::from_json(src)?;
    let r = verify_de_rham(&s, weight_cap)?;
    report.info("simplicial set", r.name.clone());
    report.info("weight cap", format!("{} (rechecked at {})", r.weight_cap, r.recheck_cap));
    for (w, row) in r.per_weight.iter().enumerate() {
        if row.iter().any(|&x| x != 0) {
            report.info(format!("new classes at weight {w}"), list(row));
        }
    }
    report.info("sullivan ranks", list(&r.sullivan_ranks));
    report.check("cochain ranks", list(&r.cochain_ranks), r.sullivan_ranks == r.cochain_ranks);
    for (q, m) in r.induced.iter().enumerate() {
        let rows: Vec<String> = m.iter().map(|row| list(row)).collect();
        report.info(format!("integration on H^{q}"), format!("[{}]", rows.join(", ")));
    }
    report.check("integration is a chain map", r.chain_map.to_string(), r.chain_map);
    report.check("isomorphism on cohomology", r.isomorphism.to_string(), r.isomorphism);
    report.check(
        "multiplicative on cohomology",
        format!("{} ({} products)", r.multiplicative, r.products.len()),
        r.multiplicative,
    );
    Ok(report)
}

pub fn chern(name: &str, src: &str, chain: &str, opts: Options) -> Result<Report> {
    let mut report = Report::new("chern");
    report.input(name, src.as_bytes());
    let scn = Scenario::from_json(src, opts.precision)?;
    let chart = scn
        .chart
        .as_ref()
        .ok_or_else(|| Error::UnknownChain(format!("{} has no chart data", scn.name)))?;
    let r = chern_report(chart, chain, opts.chain_precision())?;
    report.info("chain", format!("({})", r.chain.join(", ")));
    report.info("theta", r.theta.clone());
    report.info("curvature (1,1)", r.curvature_11.clone());
    for (i, c) in r.components.iter().enumerate() {
        report.info(format!("c{}", i + 1), c.clone());
    }
    if let Some(w) = &r.whitney {
        report.info("P_t total", list(&w.total));
        report.info("P_t sub", list(&w.sub));
        report.info("P_t quotient", list(&w.quotient));
        report.check("whitney product", list(&w.product), w.holds);
    }
    if let Some(e) = &r.expected {
        report.check("expected", list(e), *e == r.components);
    }
    Ok(report)
}

pub fn curve(name: &str, src: &str, opts: Options) -> Result<Report> {
    let mut report = Report::new("curve");
    report.input(name, src.as_bytes());
    let scn = Scenario::from_json(src, opts.precision)?;
    let spec = scn
        .curve
        .as_ref()
        .ok_or_else(|| Error::Parse(format!("{} has no curve data", scn.name)))?;
    let r = curve_adelic_integral(spec, opts.chain_precision())?;
    for c in &r.chains {
        report.info(format!("chain (generic, {})", c.point), format!("{} , residue {}", c.component, c.residue));
    }
    report.info("integral", r.total.clone());
    if let Some(e) = &r.expected {
        report.check("expected", e.clone(), r.passed);
    }
    Ok(report)
}
