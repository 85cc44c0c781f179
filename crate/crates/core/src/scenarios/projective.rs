//! Torus vector fields on projective spaces and their fixed points.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::model::{ChartSpec, CurvePoint, CurveSpec, FrameSpec, Scenario};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, q, Matrix, MultiPoly, Rational, TruncatedSeries};
use crate::residues::{working_precision, LocalZeroData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bundle {
    /// `O(d)`.
    Line(i64),
    Tangent,
}

/// `(λ_i − λ_j) f_i` rendered in a parseable form.
fn linear(c: &Rational, var: &str) -> String {
    format!("{}*{var}", paren(c))
}

fn paren(c: &Rational) -> String {
    let s = fmt_rational(c);
    if s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

/// `P^n` with `v = Σ λ_i y_i ∂/∂y_i`. At the fixed point `p_j` the chart
/// coordinates are `f_k = y_i / y_j` (`i ≠ j` in increasing order) and
/// `a_k = (λ_i − λ_j) f_k`. On `O(d)` the field acts by the weight
/// `d (λ_j − λ_n)`; on the tangent bundle `Λ = −(∂a_i/∂f_k)`.
pub fn projective_space_scenario(n: usize, weights: &[Rational], bundle: Bundle) -> Result<Scenario> {
    if weights.len() != n + 1 || n == 0 {
        return Err(Error::DimensionMismatch(format!("{} weights for P^{n}", weights.len())));
    }
    for (i, w) in weights.iter().enumerate() {
        if weights[..i].contains(w) {
            return Err(Error::RepeatedWeights);
        }
    }
    let coords: Vec<String> = (1..=n).map(|k| format!("f{k}")).collect();
    let prec = working_precision(n, None);
    let mut zeros = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let others: Vec<usize> = (0..=n).filter(|&i| i != j).collect();
        let diffs: Vec<Rational> = others.iter().map(|&i| &weights[i] - &weights[j]).collect();
        let a: Vec<String> = diffs.iter().zip(&coords).map(|(c, v)| linear(c, v)).collect();
        let lambda: Vec<Vec<String>> = match bundle {
            Bundle::Line(d) => vec![vec![paren(&(q(d) * (&weights[j] - &weights[n])))]],
            Bundle::Tangent => (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| if r == c { paren(&-diffs[r].clone()) } else { "0".into() })
                        .collect()
                })
                .collect(),
        };
        zeros.push(LocalZeroData::parse(&format!("p{j}"), &coords, &a, &lambda, prec)?);
    }
    let (r, name, expected, poly, provenance) = match bundle {
        Bundle::Line(d) => (
            1,
            format!("P{n} O({d})"),
            q(d).pow(n as i32),
            format!("c1^{n}"),
            format!("integral of c1(O({d}))^{n} over P^{n} is d^n"),
        ),
        Bundle::Tangent => (
            n,
            format!("P{n} tangent"),
            q(n as i64 + 1),
            format!("c{n}"),
            format!("Euler characteristic of P^{n}"),
        ),
    };
    let poly = if n == 1 { poly.replace("^1", "") } else { poly };
    Ok(Scenario {
        name,
        n,
        r,
        zeros,
        expected: Some(expected),
        provenance: Some(provenance),
        poly: Some(poly),
        chart: None,
        curve: None,
    })
}

/// `O(d)` on the projective line with `v = f^2 ∂/∂f`: a single double
/// zero at the origin, where `Λ = −d f`. Carries the section frame of
/// `f^d` for chain and curve checks.
pub fn degenerate_line_scenario(d: i64) -> Result<Scenario> {
    let prec = working_precision(1, None);
    let lambda = format!("{}*f", paren(&q(-d)));
    let zero = LocalZeroData::parse("z", &["f"], &["f^2"], &[vec![lambda.as_str()]], prec)?;
    let section = match d {
        0 => "1".to_string(),
        1 => "f".to_string(),
        _ => format!("f^{d}"),
    };
    let frames: BTreeMap<String, Vec<Vec<String>>> = [
        ("generic".to_string(), vec![vec![section.clone()]]),
        ("0".to_string(), vec![vec!["1".to_string()]]),
        ("inf".to_string(), vec![vec![section.clone()]]),
    ]
    .into();
    let chart = ChartSpec {
        base: vec!["f".into()],
        bundle: Some(FrameSpec { rank: 1, frames }),
        extension: None,
        expected: [("generic,0".to_string(), vec![if d == 0 { "0".to_string() } else { format!("{d}/f d f") }])]
            .into(),
    };
    let point = |label: &str, at: Option<&str>, frame: &str| CurvePoint {
        label: label.into(),
        at: at.map(Into::into),
        frame: frame.into(),
        over: None,
    };
    let curve = CurveSpec {
        coordinate: "f".into(),
        points: vec![
            point("generic", None, &section),
            point("0", Some("0"), "1"),
            point("inf", Some("inf"), &section),
        ],
        expected: Some(d.to_string()),
    };
    Ok(Scenario {
        name: format!("P1 O({d}) degenerate"),
        n: 1,
        r: 1,
        zeros: vec![zero],
        expected: Some(q(d)),
        provenance: Some("degree of O(d); d = 1 is the worked double-zero example".into()),
        poly: Some("c1".into()),
        chart: Some(chart),
        curve: Some(curve),
    })
}

/// Adds `p` times an element of `(a)` to every entry of each `Λ`-lift.
pub fn perturb_lifts(scn: &Scenario, p: &[MultiPoly]) -> Scenario {
    let mut out = scn.clone();
    for z in &mut out.zeros {
        let prec = z.a[0].precision();
        let shift = z
            .a
            .iter()
            .zip(p.iter().cycle())
            .map(|(a, c)| a.mul(&TruncatedSeries::new(c.clone(), prec).expect("polynomial")))
            .fold(TruncatedSeries::zero(z.n(), prec), |acc, t| acc.add(&t));
        let r = z.r();
        z.lambda = Matrix::from_fn(r, r, |i, j| z.lambda.get(i, j).add(&shift.scale(&q((i + 2 * j + 1) as i64))));
    }
    out
}
