//! Normalized rational cochains on a finite simplicial set.

use num_traits::Zero;

use super::delta::DeltaMorphism;
use super::forms::{integrate_over_simplex, pullback_along};
use super::sset::FiniteSimplicialSet;
use crate::dgforms::{DGContext, DiffForm};
use crate::error::{Error, Result};
use crate::exactalg::{q as q_, QMatrix, Rational};

/// A `degree`-cochain: one value per nondegenerate `degree`-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<Rational>,
}

impl Cochain {
    pub fn zero(s: &FiniteSimplicialSet, degree: usize) -> Self {
        Cochain {
            degree,
            values: vec![Rational::zero(); s.count(degree)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        if self.degree != other.degree || self.values.len() != other.values.len() {
            return Err(Error::DimensionMismatch("cochains of different shape".into()));
        }
        Ok(Cochain {
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }
}

/// Matrix of `∂ : C^q -> C^{q+1}`, `(∂c)(σ) = Σ (−1)^i c(d_i σ)`.
pub fn coboundary_matrix(s: &FiniteSimplicialSet, q: usize) -> QMatrix {
    let rows = s.count(q + 1);
    let cols = s.count(q);
    let sparse = (0..rows)
        .map(|k| {
            (0..=q + 1)
                .map(|i| {
                    let sign = if i % 2 == 0 { q_(1) } else { q_(-1) };
                    (s.face(q + 1, k, i), sign)
                })
                .collect()
        })
        .collect();
    QMatrix::from_sparse_rows(sparse, cols)
}

pub fn coboundary(s: &FiniteSimplicialSet, c: &Cochain) -> Cochain {
    let values = coboundary_matrix(s, c.degree)
        .mul_vec(&c.values)
        .expect("cochain length matches the simplicial set");
    Cochain {
        degree: c.degree + 1,
        values,
    }
}

/// Alexander–Whitney cup product `(a·b)(σ) = a(front σ)·b(back σ)`.
pub fn aw_product(s: &FiniteSimplicialSet, a: &Cochain, b: &Cochain) -> Result<Cochain> {
    if a.values.len() != s.count(a.degree) || b.values.len() != s.count(b.degree) {
        return Err(Error::DimensionMismatch("cochain not on this simplicial set".into()));
    }
    let d = a.degree + b.degree;
    let values = (0..s.count(d))
        .map(|k| &a.values[s.front(d, k, a.degree)] * &b.values[s.back(d, k, b.degree)])
        .collect();
    Ok(Cochain { degree: d, values })
}

/// `ρ(α)(σ) = ∫_{Δ^m} σ^* α` for every nondegenerate `σ` of `Δ^n`, as a
/// cochain on [`FiniteSimplicialSet::standard`]`(n)`. Only the degree-`q`
/// part of `α` is used.
pub fn rho(alpha: &DiffForm, q: usize) -> Result<Cochain> {
    let n = alpha.ctx().simplex_dim();
    if alpha.ctx().base_dim() != 0 {
        return Err(Error::DimensionMismatch("rho takes forms on a bare simplex".into()));
    }
    let s = FiniteSimplicialSet::standard(n);
    let part = alpha.of_degree(q as u32);
    let target = DGContext::new(q, &[]);
    let mut values = Vec::with_capacity(s.count(q));
    for k in 0..s.count(q) {
        let vertices = s.vertices_of(q, k);
        let sigma = DeltaMorphism::inclusion(n, &vertices)?;
        values.push(integrate_over_simplex(&pullback_along(&sigma, &part, &target)?));
    }
    Ok(Cochain { degree: q, values })
}
