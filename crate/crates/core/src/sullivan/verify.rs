//! Comparing Thom–Sullivan forms with normalized cochains through `∫_Δ`.

use serde::Serialize;

use super::cohomology::{cohomology, to_sparse, Cohomology};
use super::complex::{cochain_view, SullivanComplex, SullivanElement};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, QMatrix};
use crate::simplicial::{aw_product, coboundary, Cochain, FiniteSimplicialSet};

/// Basis of the degree-`q` compatible families of weight `<= w`.
pub fn sullivan_basis(s: &FiniteSimplicialSet, q: usize, w: usize) -> Result<Vec<SullivanElement>> {
    if q > s.dim() + 2 {
        return Err(Error::CapExceeded(format!("degree {q} above {}", s.dim() + 2)));
    }
    if q > s.dim() {
        return Ok(Vec::new());
    }
    Ok(SullivanComplex::new(s, w)?.basis(q))
}

/// `∫_Δ u`.
pub fn integrate_map(s: &FiniteSimplicialSet, u: &SullivanElement) -> Result<Cochain> {
    Ok(SullivanComplex::new(s, u.weight)?.integrate(u))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductCheck {
    pub degrees: (usize, usize),
    pub indices: (usize, usize),
    pub coboundary: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeRhamReport {
    pub name: String,
    pub weight_cap: usize,
    pub recheck_cap: usize,
    /// `rank H(A_{<=w})` per degree, for `w = 0..=weight_cap`.
    pub filtered_ranks: Vec<Vec<usize>>,
    /// Classes first appearing at weight `w`.
    pub per_weight: Vec<Vec<i64>>,
    pub sullivan_ranks: Vec<usize>,
    pub cochain_ranks: Vec<usize>,
    /// Matrix of `H(∫_Δ)` per degree, rendered entry by entry.
    pub induced: Vec<Vec<Vec<String>>>,
    pub isomorphism: bool,
    pub chain_map: bool,
    pub products: Vec<ProductCheck>,
    pub multiplicative: bool,
}

impl DeRhamReport {
    pub fn passed(&self) -> bool {
        self.isomorphism && self.chain_map && self.multiplicative && self.sullivan_ranks == self.cochain_ranks
    }

    pub fn per_weight_total(&self) -> Vec<i64> {
        let n = self.sullivan_ranks.len();
        (0..n).map(|q| self.per_weight.iter().map(|r| r[q]).sum()).collect()
    }
}

pub fn default_weight_cap(s: &FiniteSimplicialSet) -> usize {
    s.dim() + 4
}

fn ranks_at(s: &FiniteSimplicialSet, w: usize) -> Result<(SullivanComplex<'_>, Cohomology)> {
    let a = SullivanComplex::new(s, w)?;
    let h = cohomology(&a.view())?;
    Ok((a, h))
}

pub fn verify_de_rham(s: &FiniteSimplicialSet, weight_cap: Option<usize>) -> Result<DeRhamReport> {
    let cap = weight_cap.unwrap_or_else(|| default_weight_cap(s));
    let recheck = cap + 2;
    let mut filtered_ranks = Vec::new();
    for w in 0..cap {
        filtered_ranks.push(ranks_at(s, w)?.1.ranks);
    }
    let (a, ha) = ranks_at(s, cap)?;
    filtered_ranks.push(ha.ranks.clone());
    let (_, hb) = ranks_at(s, recheck)?;
    if hb.ranks != ha.ranks {
        return Err(Error::CapInsufficient { cap, recheck });
    }
    let per_weight = filtered_ranks
        .iter()
        .enumerate()
        .map(|(w, r)| {
            r.iter()
                .enumerate()
                .map(|(q, &x)| x as i64 - if w == 0 { 0 } else { filtered_ranks[w - 1][q] as i64 })
                .collect()
        })
        .collect();

    let hc = cohomology(&cochain_view(s))?;
    let top = s.dim();

    let chain_map = (0..top).all(|q| {
        a.basis(q)
            .iter()
            .all(|u| a.integrate(&a.d(u)) == coboundary(s, &a.integrate(u)))
    });

    let reps: Vec<Vec<SullivanElement>> = (0..=top)
        .map(|q| ha.reps[q].iter().map(|y| a.element_from_coords(q, y)).collect())
        .collect();

    let mut induced = Vec::new();
    let mut isomorphism = ha.ranks == hc.ranks;
    for q in 0..=top {
        let mut cols = Vec::new();
        for u in &reps[q] {
            let c = a.integrate(u);
            match hc.class_of(q, &c.values)? {
                Some(x) => cols.push(to_sparse(&x)),
                None => {
                    isomorphism = false;
                    cols.push(Vec::new());
                }
            }
        }
        let m = QMatrix::from_sparse_rows(cols, hc.ranks[q]).transpose();
        if m.nrows() != m.ncols() || m.rank() != m.nrows() {
            isomorphism = false;
        }
        induced.push(
            m.to_dense()
                .iter()
                .map(|r| r.iter().map(fmt_rational).collect())
                .collect(),
        );
    }

    let mut products = Vec::new();
    for p in 0..=top {
        for q in 0..=(top - p) {
            for (i, u) in reps[p].iter().enumerate() {
                for (j, v) in reps[q].iter().enumerate() {
                    let defect = product_defect(&a, u, v)?;
                    products.push(ProductCheck {
                        degrees: (p, q),
                        indices: (i, j),
                        coboundary: hc.is_coboundary(p + q, &defect.values),
                    });
                }
            }
        }
    }
    let multiplicative = products.iter().all(|c| c.coboundary);

    Ok(DeRhamReport {
        name: s.name().to_string(),
        weight_cap: cap,
        recheck_cap: recheck,
        filtered_ranks,
        per_weight,
        sullivan_ranks: ha.ranks,
        cochain_ranks: hc.ranks,
        induced,
        isomorphism,
        chain_map,
        products,
        multiplicative,
    })
}

/// `ρ(u·v) − ρ(u)·ρ(v)` for two elements of the same complex.
pub fn product_defect(a: &SullivanComplex<'_>, u: &SullivanElement, v: &SullivanElement) -> Result<Cochain> {
    let s = a.simplicial_set();
    let lhs = a.integrate(&a.product(u, v));
    let rhs = aw_product(s, &a.integrate(u), &a.integrate(v))?;
    lhs.sub(&rhs)
}
