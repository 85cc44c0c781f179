//! Colength of an ideal in a truncated power series ring.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::matrix::{Echelon, SparseRow};
use super::poly::{monomials_below, Monomial, MultiPoly};
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

pub const DEFAULT_LENGTH_CAP: u32 = 16;

/// The span of `{m * a_i : deg m < t}` inside polynomials of degree `< t`.
pub(crate) struct TruncatedIdeal {
    pub t: u32,
    pub index: BTreeMap<Monomial, usize>,
    pub echelon: Echelon,
}

impl TruncatedIdeal {
    pub fn build(gens: &[MultiPoly], nvars: usize, t: u32) -> Self {
        let basis = monomials_below(nvars, t);
        let index: BTreeMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut echelon = Echelon::new();
        for g in gens {
            let low = g.min_degree().unwrap_or(t as i64);
            for m in &basis {
                if m.degree() + low >= t as i64 {
                    continue;
                }
                let row = to_row(&g.mul_monomial(m), &index, t);
                echelon.insert(row);
            }
        }
        TruncatedIdeal { t, index, echelon }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn colength(&self) -> usize {
        self.dim() - self.echelon.rank()
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.echelon.contains(&to_row(p, &self.index, self.t))
    }
}

/// Coordinates of `p` truncated below degree `t`.
pub(crate) fn to_row(p: &MultiPoly, index: &BTreeMap<Monomial, usize>, t: u32) -> SparseRow {
    let mut row: SparseRow = p
        .terms()
        .filter(|(m, c)| m.degree() < t as i64 && !c.is_zero())
        .map(|(m, c)| (index[m], c.clone()))
        .collect();
    row.sort_by_key(|e| e.0);
    row
}

fn powers_in_span(ideal: &TruncatedIdeal, nvars: usize) -> bool {
    (0..nvars).all(|i| {
        (1..ideal.t).any(|e| {
            let mut m = Monomial::one(nvars);
            m.0[i] = e as i32;
            ideal.contains(&MultiPoly::term(m, num_traits::One::one()))
        })
    })
}

/// `dim_Q k[[f]]/(a_1..a_n)`, found by raising the truncation degree until
/// the truncated colength is stable over two increments and every
/// coordinate has a power inside the truncated span.
pub fn artinian_length(a: &[TruncatedSeries], cap: u32) -> Result<usize> {
    let nvars = match a.first() {
        Some(s) => s.nvars(),
        None => return Err(Error::DimensionMismatch("no generators".into())),
    };
    if a.iter().any(|s| s.nvars() != nvars) {
        return Err(Error::DimensionMismatch(
            "generators live in different rings".into(),
        ));
    }
    if let Some(bad) = a.iter().find(|s| !s.constant_term().is_zero()) {
        return Err(Error::NotAUnit(format!(
            "generator with constant term {}",
            bad.constant_term()
        )));
    }
    let available = a.iter().map(|s| s.precision()).min().unwrap_or(0);
    let gens: Vec<MultiPoly> = a.iter().map(|s| s.poly().clone()).collect();
    let mut history: Vec<(usize, bool)> = Vec::new();
    for t in 1..=cap {
        if t > available {
            return Err(Error::PrecisionExhausted {
                needed: t as i64,
                available: available as i64,
            });
        }
        let ideal = TruncatedIdeal::build(&gens, nvars, t);
        history.push((ideal.colength(), powers_in_span(&ideal, nvars)));
        if let [.., (l0, p0), (l1, _), (l2, _)] = history.as_slice() {
            if *p0 && l0 == l1 && l1 == l2 {
                return Ok(*l0);
            }
        }
    }
    Err(Error::NotFinite { cap })
}
