//! Bott-glued connections on a chain and their characteristic forms.

use std::collections::BTreeMap;

use serde::Serialize;

use super::chain::{AdelicFrame, ChainAlgebra};
use crate::dgforms::{
    invariant_eval, matrix_curvature, total_invariant, DiffForm, FormMatrix, InvariantPolynomial,
};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, MultiPoly, Ring};
use crate::simplicial::{fiber_integral, pullback_along, DeltaMorphism};

/// `θ` with its curvature, plus the per-point `g_i^{-1} dg_i` it came from.
#[derive(Clone, Debug)]
pub struct ChainConnection {
    pub theta: FormMatrix,
    pub curvature: FormMatrix,
    pub dlogs: Vec<FormMatrix>,
}

impl ChainConnection {
    pub fn rank(&self) -> usize {
        self.theta.rows()
    }

    fn part(&self, p: u32, q: u32) -> FormMatrix {
        self.curvature.map(|e| e.part(p, q))
    }

    /// The `(2,0)` part, in the base directions only.
    pub fn curvature_20(&self) -> FormMatrix {
        self.part(2, 0)
    }

    /// `D''θ`, which for `θ` of bidegree `(1,0)` is `Θ^{1,1}`.
    pub fn d_simplex_theta(&self) -> FormMatrix {
        self.theta.map(DiffForm::d_simplex)
    }

    pub fn curvature_11_part(&self) -> FormMatrix {
        self.part(1, 1)
    }
}

/// Inverse of a matrix of functions through its adjugate.
pub fn invert_functions(g: &FormMatrix, precision: i64, label: &str) -> Result<FormMatrix> {
    let n = g.rows();
    let det = g.det();
    let inv_det = det
        .function_part()
        .inverse(precision)
        .map_err(|_| Error::NonInvertibleFrame(label.to_string()))?;
    let ctx = det.ctx().clone();
    if n == 1 {
        return Ok(Matrix::from_rows(vec![vec![DiffForm::function(&ctx, inv_det)]]));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(Matrix::from_fn(n, n, |i, j| {
        let rows: Vec<usize> = idx.iter().copied().filter(|&k| k != j).collect();
        let cols: Vec<usize> = idx.iter().copied().filter(|&k| k != i).collect();
        let minor = g.select(&rows, &cols).det().times_function(&inv_det);
        if (i + j) % 2 == 0 {
            minor
        } else {
            minor.neg()
        }
    }))
}

/// `θ = −Σ t_i g_i^{-1} dg_i` on the chain.
pub fn mixed_connection(frame: &AdelicFrame, alg: &ChainAlgebra) -> Result<ChainConnection> {
    let ctx = alg.ctx();
    if frame.base().iter().map(String::as_str).collect::<Vec<_>>() != ctx.base_names() {
        return Err(Error::ContextMismatch);
    }
    let r = frame.rank();
    let mut theta = Matrix::filled(r, r, ctx.zero());
    let mut dlogs = Vec::new();
    for (i, x) in alg.chain().labels.iter().enumerate() {
        let g = alg.matrix(frame.get(x).ok_or_else(|| Error::MissingPoint(x.clone()))?);
        let inv = invert_functions(&g, alg.precision(), x)?;
        let dlog = inv.mul(&g.map(DiffForm::d));
        theta = theta.sub(&dlog.map(|e| ctx.t(i).w(e)));
        dlogs.push(dlog);
    }
    let curvature = matrix_curvature(&theta)?;
    Ok(ChainConnection {
        theta,
        curvature,
        dlogs,
    })
}

/// `Θ^{1,1} = −Σ dt_i ∧ g_i^{-1} dg_i`.
pub fn curvature_11(conn: &ChainConnection, alg: &ChainAlgebra) -> FormMatrix {
    let ctx = alg.ctx();
    let r = conn.rank();
    conn.dlogs.iter().enumerate().fold(Matrix::filled(r, r, ctx.zero()), |acc, (i, w)| {
        acc.sub(&w.map(|e| ctx.dt(i).w(e)))
    })
}

/// `∫_Δ P(Θ)` as a form on the base.
pub fn chern_weil_component(p: &InvariantPolynomial, conn: &ChainConnection, alg: &ChainAlgebra) -> Result<DiffForm> {
    fiber_integral(&invariant_eval(p, &conn.curvature)?, alg.base_ctx())
}

/// `c_i = ∫_Δ P_i(Θ)`.
pub fn chern_form_component(i: usize, conn: &ChainConnection, alg: &ChainAlgebra) -> Result<DiffForm> {
    if i == 0 {
        return Ok(alg.base_ctx().one());
    }
    if i > conn.rank() {
        return Ok(alg.base_ctx().zero());
    }
    chern_weil_component(&InvariantPolynomial::elementary(i), conn, alg)
}

#[derive(Clone, Debug, Serialize)]
pub struct WhitneyReport {
    /// Coefficients of `P_t` for the extension, the sub and the quotient.
    pub total: Vec<String>,
    pub sub: Vec<String>,
    pub quotient: Vec<String>,
    pub product: Vec<String>,
    pub holds: bool,
    pub first_failure: Option<usize>,
}

fn mul_series(a: &[DiffForm], b: &[DiffForm]) -> Vec<DiffForm> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.w(y));
        }
    }
    out
}

/// `P_t(Θ) = P_t(Θ')·P_t(Θ'')` for the block frames of an extension,
/// compared coefficient by coefficient in `t`.
pub fn whitney_check(
    sub: &AdelicFrame,
    quotient: &AdelicFrame,
    off: &BTreeMap<String, Matrix<MultiPoly>>,
    alg: &ChainAlgebra,
) -> Result<WhitneyReport> {
    let ext = AdelicFrame::extension(sub, quotient, off)?;
    let total = total_invariant(&mixed_connection(&ext, alg)?.curvature)?;
    let p1 = total_invariant(&mixed_connection(sub, alg)?.curvature)?;
    let p2 = total_invariant(&mixed_connection(quotient, alg)?.curvature)?;
    let product = mul_series(&p1, &p2);
    let first_failure = total.iter().zip(&product).position(|(a, b)| !a.sub(b).is_zero());
    let render = |v: &[DiffForm]| v.iter().map(DiffForm::render).collect();
    Ok(WhitneyReport {
        total: render(&total),
        sub: render(&p1),
        quotient: render(&p2),
        product: render(&product),
        holds: first_failure.is_none(),
        first_failure,
    })
}

/// Two frame choices on the same points give first Chern components that
/// differ by the coboundary of `β_x = −dlog(det g'_x / det g_x)`:
/// `c_1' − c_1 = β_{x_1} − β_{x_0}` on a 1-chain, and `0` on a point.
#[derive(Clone, Debug)]
pub struct IndependenceCheck {
    pub difference: DiffForm,
    pub coboundary: DiffForm,
    pub holds: bool,
}

fn dlog_det(frame: &AdelicFrame, label: &str, alg: &ChainAlgebra) -> Result<DiffForm> {
    let g = alg.matrix(frame.get(label).ok_or_else(|| Error::MissingPoint(label.to_string()))?);
    let inv = invert_functions(&g, alg.precision(), label)?;
    Ok(inv.mul(&g.map(DiffForm::d)).trace())
}

pub fn independence_check(a: &AdelicFrame, b: &AdelicFrame, alg: &ChainAlgebra) -> Result<IndependenceCheck> {
    let ca = chern_form_component(1, &mixed_connection(a, alg)?, alg)?;
    let cb = chern_form_component(1, &mixed_connection(b, alg)?, alg)?;
    let difference = cb.sub(&ca);
    let labels = &alg.chain().labels;
    let base = alg.base_ctx();
    let coboundary = match labels.len() {
        1 => base.zero(),
        2 => {
            let beta = |x: &str| -> Result<DiffForm> {
                let da = dlog_det(a, x, alg)?;
                let db = dlog_det(b, x, alg)?;
                pullback_along(&DeltaMorphism::vertex(1, 0), &da.sub(&db), base)
            };
            beta(&labels[1])?.sub(&beta(&labels[0])?)
        }
        _ => {
            return Err(Error::DimensionMismatch(
                "independence is checked on points and 1-chains".into(),
            ))
        }
    };
    let holds = difference.sub(&coboundary).is_zero();
    Ok(IndependenceCheck {
        difference,
        coboundary,
        holds,
    })
}
