//! Connection, curvature and Chern form components on one chain of a chart.

use serde::Serialize;

use super::model::ChartSpec;
use crate::adelic::localization::render_matrix;
use crate::adelic::{chern_form_component, curvature_11, mixed_connection, whitney_check, ChainAlgebra, WhitneyReport};
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct ChernReport {
    pub chain: Vec<String>,
    pub theta: String,
    pub curvature_11: String,
    /// `∫_Δ P_i(Θ)` for `i = 1..r`.
    pub components: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub whitney: Option<WhitneyReport>,
    pub passed: bool,
}

pub fn chern_report(spec: &ChartSpec, chain: &str, precision: Option<i64>) -> Result<ChernReport> {
    let chain = spec.chain(chain)?;
    let frame = spec.frame()?;
    let alg = ChainAlgebra::new(chain.clone(), &spec.base, precision);
    let conn = mixed_connection(&frame, &alg)?;
    let theta11 = curvature_11(&conn, &alg);
    let components = (1..=frame.rank())
        .map(|i| chern_form_component(i, &conn, &alg).map(|c| c.render()))
        .collect::<Result<Vec<_>>>()?;
    let whitney = match spec.sub_quotient()? {
        Some((sub, quotient, off)) => Some(whitney_check(&sub, &quotient, &off, &alg)?),
        None => None,
    };
    let expected = spec.expected.get(&chain.labels.join(",")).cloned();
    let passed = expected.as_ref().map_or(true, |e| *e == components) && whitney.as_ref().map_or(true, |w| w.holds);
    Ok(ChernReport {
        chain: chain.labels.clone(),
        theta: render_matrix(&conn.theta),
        curvature_11: render_matrix(&theta11),
        components,
        expected,
        whitney,
        passed,
    })
}
