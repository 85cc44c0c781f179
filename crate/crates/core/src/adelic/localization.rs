//! The projector `π` for a vector field and the localization identities on
//! chains avoiding the zero locus.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::chain::{AdelicFrame, ChainAlgebra};
use super::connection::{curvature_11, mixed_connection};
use crate::dgforms::{polarize, DiffForm, FormMatrix, InvariantPolynomial};
use crate::error::{Error, Result};
use crate::exactalg::{binomial, q, LaurentSeries, Matrix, MultiPoly, Rational, Ring};

/// A point of the chart `U`: the generic point, or a closed point with
/// coordinates. Points of the zero locus are flagged.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartPoint {
    pub label: String,
    pub coords: Option<Vec<Rational>>,
    pub in_zero_locus: bool,
}

impl ChartPoint {
    pub fn generic(label: &str) -> Self {
        ChartPoint {
            label: label.to_string(),
            coords: None,
            in_zero_locus: false,
        }
    }

    pub fn closed(label: &str, coords: Vec<Rational>) -> Self {
        ChartPoint {
            label: label.to_string(),
            coords: Some(coords),
            in_zero_locus: false,
        }
    }

    pub fn zero(label: &str) -> Self {
        ChartPoint {
            label: label.to_string(),
            coords: None,
            in_zero_locus: true,
        }
    }
}

fn nonvanishing(a: &MultiPoly, at: &Option<Vec<Rational>>) -> bool {
    match at {
        None => !a.is_zero(),
        Some(c) => !a.eval(c).is_zero(),
    }
}

/// `π_(x)`: zero on the zero locus, otherwise `a_j^{-1} df_j` for the first
/// `j` with `a_j(x) != 0`. Returned as the coefficients of `df_1..df_n`.
pub fn projector(a: &[MultiPoly], x: &ChartPoint, precision: i64) -> Result<Vec<LaurentSeries>> {
    let n = a.len();
    let zero = LaurentSeries::zero(n, 0);
    if x.in_zero_locus {
        return Ok(vec![zero; n]);
    }
    let j = a
        .iter()
        .position(|aj| nonvanishing(aj, &x.coords))
        .ok_or_else(|| Error::NoNonvanishing(x.label.clone()))?;
    let mut out = vec![zero; n];
    out[j] = LaurentSeries::exact(a[j].clone(), 0).inverse(precision)?;
    Ok(out)
}

/// `⟨v, π⟩ = Σ a_j π_j`.
pub fn pairing(a: &[MultiPoly], pi: &[LaurentSeries]) -> LaurentSeries {
    let n = a.len();
    a.iter()
        .zip(pi)
        .fold(LaurentSeries::zero(n, 0), |acc, (aj, pj)| acc.add(&LaurentSeries::exact(aj.clone(), 0).mul(pj)))
}

/// Everything the localization identities need on one chart.
#[derive(Clone, Debug)]
pub struct LocalizationData {
    /// `v = Σ a_j ∂/∂f_j`.
    pub a: Vec<MultiPoly>,
    /// Matrix of `Λ` in the reference frame.
    pub lambda: Matrix<MultiPoly>,
    pub frame: AdelicFrame,
    /// `π_(x)` per point label, as coefficients of `df_j`.
    pub projectors: BTreeMap<String, Vec<LaurentSeries>>,
    pub poly: InvariantPolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationReport {
    pub contraction: String,
    pub d_l: String,
    pub eta: String,
    pub residual: String,
    pub holds: bool,
}

/// `L = Λ − ι_v θ`.
pub fn l_matrix(data: &LocalizationData, theta: &FormMatrix, alg: &ChainAlgebra) -> Result<FormMatrix> {
    let v = base_field(data, alg);
    let lambda = alg.matrix(&data.lambda);
    let iota = theta.try_map(|e| e.contract(&v))?;
    Ok(lambda.sub(&iota))
}

fn base_field(data: &LocalizationData, alg: &ChainAlgebra) -> Vec<LaurentSeries> {
    data.a.iter().map(|p| alg.function(p).function_part()).collect()
}

/// `η_{n−1} = Σ_{k+m=n−1} C(n,k) P̃(Θ^{1,1}×k, L×(n−k)) · π · (D''π)^m`.
pub fn eta_top(
    p: &InvariantPolynomial,
    l: &FormMatrix,
    theta11: &FormMatrix,
    pi: &DiffForm,
) -> Result<DiffForm> {
    let n = p.degree() as usize;
    let dpi = pi.d_simplex();
    let mut acc = pi.zero_like();
    if n == 0 {
        return Ok(acc);
    }
    let mut dpi_pow = pi.one_like();
    for m in 0..n {
        let k = n - 1 - m;
        let mut args = vec![theta11.clone(); k];
        args.extend(vec![l.clone(); n - k]);
        let pk = polarize(p, &args)?.scale(&Rational::from_integer(binomial(n as u64, k as u64).into()));
        acc = acc.add(&pk.w(pi).w(&dpi_pow));
        dpi_pow = dpi_pow.w(&dpi);
    }
    Ok(acc)
}

/// On a chain avoiding the zero locus, checks `ι_v Θ^{1,1} = D''L` and
/// `D''η_{n−1} + P(Θ^{1,1}) = 0`.
pub fn localization_check(data: &LocalizationData, alg: &ChainAlgebra) -> Result<LocalizationReport> {
    let ctx = alg.ctx();
    let n = ctx.base_dim();
    if data.a.len() != n || data.poly.degree() as usize != n {
        return Err(Error::DegreeMismatch(format!(
            "need {n} field components and a polynomial of degree {n}"
        )));
    }
    let mut pis = BTreeMap::new();
    for x in &alg.chain().labels {
        let pi = data.projectors.get(x).ok_or_else(|| Error::MissingPoint(x.clone()))?;
        pis.insert(x.clone(), alg.one_form(pi));
    }
    let pi = alg.covertex_lift(&pis)?;
    let conn = mixed_connection(&data.frame, alg)?;
    let theta11 = curvature_11(&conn, alg);
    let l = l_matrix(data, &conn.theta, alg)?;
    let v = base_field(data, alg);

    let contraction = theta11.try_map(|e| e.contract(&v))?;
    let d_l = l.map(DiffForm::d_simplex);
    let diff = contraction.sub(&d_l);
    if let Some(bad) = diff.entries().find(|e| !e.is_zero()) {
        return Err(Error::IdentityFailed {
            what: "contraction of the (1,1) curvature against D''L".into(),
            residual: bad.render(),
        });
    }

    let eta = eta_top(&data.poly, &l, &theta11, &pi)?;
    let p_theta = data.poly.eval_ring(&theta11);
    let residual = eta.d_simplex().add(&p_theta);
    if !residual.is_zero() {
        return Err(Error::IdentityFailed {
            what: "D''η + P(Θ^{1,1})".into(),
            residual: residual.render(),
        });
    }
    Ok(LocalizationReport {
        contraction: render_matrix(&contraction),
        d_l: render_matrix(&d_l),
        eta: eta.render(),
        residual: residual.render(),
        holds: true,
    })
}

pub(crate) fn render_matrix(m: &FormMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).render()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// `⟨v, π⟩ − 1` on every point of `points`; empty when the projector is valid.
pub fn pairing_defects(a: &[MultiPoly], projectors: &BTreeMap<String, Vec<LaurentSeries>>) -> Vec<String> {
    let n = a.len();
    projectors
        .iter()
        .filter(|(_, pi)| pi.iter().any(|c| !c.is_zero()))
        .filter(|(_, pi)| !pairing(a, pi).sub(&LaurentSeries::constant(n, 0, q(1))).is_zero())
        .map(|(x, _)| x.clone())
        .collect()
}
