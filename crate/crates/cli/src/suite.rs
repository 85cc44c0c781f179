//! The shipped acceptance scenarios, compiled into the binary so that
//! `verify-all` runs from any directory.

use acw_core::Result;

use crate::commands::{self, Options};
use crate::report::Report;

pub enum Check {
    Residue,
    Bott(&'static str),
    Derham,
    Chern(&'static str),
    Curve,
}

macro_rules! data {
    ($name:literal) => {
        ($name, include_str!(concat!("../data/", $name)))
    };
}

pub const SUITE: &[((&str, &str), Check)] = &[
    (data!("double-zero.json"), Check::Residue),
    (data!("monomial-unit.json"), Check::Residue),
    (data!("monomial-five.json"), Check::Residue),
    (data!("linear-change.json"), Check::Residue),
    (data!("cusp-gauss-bonnet.json"), Check::Residue),
    (data!("p1-o1-degenerate.json"), Check::Bott("c1")),
    (data!("p1-o3-degenerate.json"), Check::Bott("c1")),
    (data!("p1-o1.json"), Check::Bott("c1")),
    (data!("p1-o2.json"), Check::Bott("c1")),
    (data!("p1-o3.json"), Check::Bott("c1")),
    (data!("p1-tangent.json"), Check::Bott("c1")),
    (data!("p2-o1.json"), Check::Bott("c1^2")),
    (data!("p2-o2.json"), Check::Bott("c1^2")),
    (data!("p2-tangent.json"), Check::Bott("c2")),
    (data!("delta2.json"), Check::Derham),
    (data!("boundary-delta2.json"), Check::Derham),
    (data!("two-points.json"), Check::Derham),
    (data!("delta3.json"), Check::Derham),
    (data!("p1-o1-degenerate.json"), Check::Chern("generic,0")),
    (data!("flat.json"), Check::Chern("generic,0")),
    (data!("whitney.json"), Check::Chern("generic,0")),
    (data!("p1-o0-degenerate.json"), Check::Curve),
    (data!("p1-o1-degenerate.json"), Check::Curve),
    (data!("p1-o3-degenerate.json"), Check::Curve),
];

pub fn run_check(name: &str, src: &str, check: &Check, opts: Options) -> Result<Report> {
    match check {
        Check::Residue => commands::residue(name, src, opts),
        Check::Bott(p) => commands::bott(name, src, Some(p), opts),
        Check::Derham => commands::derham(name, src, None),
        Check::Chern(chain) => commands::chern(name, src, chain, opts),
        Check::Curve => commands::curve(name, src, opts),
    }
}

fn describe(name: &str, check: &Check) -> String {
    match check {
        Check::Residue => format!("residue {name}"),
        Check::Bott(p) => format!("bott {name} --poly {p}"),
        Check::Derham => format!("derham {name}"),
        Check::Chern(c) => format!("chern {name} --chain {c}"),
        Check::Curve => format!("curve {name}"),
    }
}

/// The last informative value of a sub-report, used as the summary line.
fn headline(r: &Report) -> String {
    let key = match r.command.as_str() {
        "residue" => ["local invariant", "residue"].as_slice(),
        "bott" => &["chern number"],
        "derham" => &["sullivan ranks"],
        "chern" => &["c1"],
        _ => &["integral"],
    };
    key.iter()
        .find_map(|k| r.items.iter().find(|i| i.name == *k))
        .map(|i| i.value.clone())
        .unwrap_or_default()
}

pub fn verify_all(opts: Options) -> Report {
    let mut report = Report::new("verify-all");
    for ((name, src), _) in SUITE {
        if !report.inputs.iter().any(|i| i.name == *name) {
            report.input(name, src.as_bytes());
        }
    }
    for ((name, src), check) in SUITE {
        let label = describe(name, check);
        match run_check(name, src, check, opts) {
            Ok(r) => report.check(label, headline(&r), r.passed),
            Err(e) => report.check(label, format!("error: {e}"), false),
        }
    }
    report
}
