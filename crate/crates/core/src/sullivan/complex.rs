//! Thom–Sullivan forms on a finite simplicial set, cut off at polynomial
//! weight `<= w`, as explicit linear algebra.
//!
//! A form on the simplicial set is a family of forms on its maximal
//! simplices whose pullbacks to every shared face agree. The weight of
//! `t^a dt_I` is `|a| + |I|`; `d` preserves it and face pullbacks never
//! raise it, so the forms of weight `<= w` are a subcomplex.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::cohomology::{to_sparse, CochainComplexView};
use crate::dgforms::{below, Ctx, DGContext, DiffForm};
use crate::error::{Error, Result};
use crate::exactalg::poly::monomials_below;
use crate::exactalg::{LaurentSeries, Monomial, MultiPoly, QMatrix, Rational, SparseRow};
use crate::simplicial::{
    coboundary_matrix, dirichlet, pullback_along, Cochain, DeltaMorphism, FiniteSimplicialSet,
};

/// Hard limit on the weight accepted by [`SullivanComplex::new`].
pub const MAX_WEIGHT: usize = 24;

/// Monomial forms `t^a dt_I` on `Δ^m` of degree `q` and weight `<= w`.
#[derive(Clone, Debug)]
pub struct WeightedForms {
    pub m: usize,
    pub q: usize,
    pub basis: Vec<(u32, Monomial)>,
    index: BTreeMap<(u32, Monomial), usize>,
}

impl WeightedForms {
    pub fn new(m: usize, q: usize, w: usize) -> Self {
        let mut basis = Vec::new();
        if q <= m && q <= w {
            let masks: Vec<u32> = (0u32..(1 << m)).filter(|x| x.count_ones() as usize == q).collect();
            for mono in monomials_below(m, (w - q + 1) as u32) {
                for &mask in &masks {
                    basis.push((mask, mono.clone()));
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        WeightedForms { m, q, basis, index }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn form(&self, ctx: &Ctx, i: usize) -> DiffForm {
        let (mask, mono) = &self.basis[i];
        DiffForm::from_terms(
            ctx,
            [(*mask, LaurentSeries::exact(MultiPoly::term(mono.clone(), Rational::one()), self.m))],
        )
    }

    pub fn form_of(&self, ctx: &Ctx, v: &[Rational]) -> DiffForm {
        let mut terms: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (mask, mono) = &self.basis[i];
            let e = terms.entry(*mask).or_insert_with(|| MultiPoly::zero(self.m));
            e.add_term(mono.clone(), c.clone());
        }
        DiffForm::from_terms(
            ctx,
            terms.into_iter().map(|(k, p)| (k, LaurentSeries::exact(p, self.m))),
        )
    }

    /// Coordinates of the degree-`q` part of `form`; fails if a term has
    /// weight above the cutoff.
    pub fn coords(&self, form: &DiffForm) -> Result<SparseRow> {
        let mut row = Vec::new();
        for (mask, c) in form.terms() {
            if mask.count_ones() as usize != self.q {
                continue;
            }
            for (mono, k) in c.poly().terms() {
                match self.index.get(&(mask, mono.clone())) {
                    Some(&i) => row.push((i, k.clone())),
                    None => {
                        return Err(Error::CapExceeded(format!(
                            "term of weight {} outside the cutoff",
                            mono.degree() + mask.count_ones() as i64
                        )))
                    }
                }
            }
        }
        row.sort_by_key(|e| e.0);
        Ok(row)
    }

    /// `d` of basis element `i` in the coordinates of `next` (degree `q+1`).
    pub fn d_coords(&self, i: usize, next: &WeightedForms) -> SparseRow {
        let (mask, mono) = &self.basis[i];
        let mut row = Vec::new();
        for j in 0..self.m {
            let a = mono.0[j];
            if a == 0 || mask & (1 << j) != 0 {
                continue;
            }
            let mut e = mono.clone();
            e.0[j] -= 1;
            let sign = if below(*mask, j) % 2 == 1 { -a } else { a };
            let idx = next.index[&(mask | (1 << j), e)];
            row.push((idx, Rational::from_integer(sign.into())));
        }
        row.sort_by_key(|e| e.0);
        row
    }

    /// `∫_{Δ^m}` of basis element `i` (top degree only).
    pub fn integral(&self, i: usize) -> Rational {
        let (mask, mono) = &self.basis[i];
        if self.q == self.m && mask.count_ones() as usize == self.m {
            dirichlet(&mono.0)
        } else {
            Rational::zero()
        }
    }
}

/// A path from a maximal simplex down to one of its faces.
#[derive(Clone, Debug)]
struct Path {
    block: usize,
    delta: DeltaMorphism,
}

/// Degree-`q` slice: free forms on maximal simplices and the compatible ones.
#[derive(Clone, Debug)]
struct Slice {
    blocks: Vec<WeightedForms>,
    offsets: Vec<usize>,
    dim: usize,
    /// Basis of compatible families; coordinates of a compatible family in
    /// this basis are its entries at `free`.
    kernel: Vec<Vec<Rational>>,
    free: Vec<usize>,
}

/// The weight-`<= w` Thom–Sullivan complex of a finite simplicial set.
pub struct SullivanComplex<'a> {
    s: &'a FiniteSimplicialSet,
    weight: usize,
    maximal: Vec<(usize, usize)>,
    ctxs: Vec<Ctx>,
    /// For each dimension and simplex, every path reaching it.
    paths: Vec<Vec<Vec<Path>>>,
    slices: Vec<Slice>,
}

/// A compatible family of forms, stored on the maximal simplices.
#[derive(Clone, Debug, PartialEq)]
pub struct SullivanElement {
    pub degree: usize,
    pub weight: usize,
    /// One form per maximal simplex, in [`FiniteSimplicialSet::maximal`] order.
    pub forms: Vec<DiffForm>,
}

impl<'a> SullivanComplex<'a> {
    pub fn new(s: &'a FiniteSimplicialSet, weight: usize) -> Result<Self> {
        if weight > MAX_WEIGHT {
            return Err(Error::CapExceeded(format!("weight {weight} above {MAX_WEIGHT}")));
        }
        let maximal = s.maximal();
        let top = s.dim();
        let ctxs: Vec<Ctx> = (0..=top).map(|m| DGContext::new(m, &[])).collect();
        let mut paths: Vec<Vec<Vec<Path>>> = (0..=top).map(|d| vec![Vec::new(); s.count(d)]).collect();
        for (block, &(m, k)) in maximal.iter().enumerate() {
            for mask in 1u32..(1 << (m + 1)) {
                let verts: Vec<usize> = (0..=m).filter(|i| mask & (1 << i) != 0).collect();
                let delta = DeltaMorphism::inclusion(m, &verts)?;
                let e = verts.len() - 1;
                let tau = s.face_along(m, k, &delta);
                paths[e][tau].push(Path { block, delta });
            }
        }
        let mut out = SullivanComplex {
            s,
            weight,
            maximal,
            ctxs,
            paths,
            slices: Vec::new(),
        };
        for q in 0..=top {
            let slice = out.build_slice(q)?;
            out.slices.push(slice);
        }
        Ok(out)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn simplicial_set(&self) -> &FiniteSimplicialSet {
        self.s
    }

    pub fn maximal(&self) -> &[(usize, usize)] {
        &self.maximal
    }

    fn restrict(&self, path: &Path, form: &DiffForm) -> Result<DiffForm> {
        pullback_along(&path.delta, form, &self.ctxs[path.delta.source()])
    }

    fn build_slice(&self, q: usize) -> Result<Slice> {
        let blocks: Vec<WeightedForms> = self
            .maximal
            .iter()
            .map(|&(m, _)| WeightedForms::new(m, q, self.weight))
            .collect();
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut dim = 0;
        for b in &blocks {
            offsets.push(dim);
            dim += b.len();
        }
        // Constraint rows: for each face reached twice, equal restrictions.
        let mut constraints: Vec<SparseRow> = Vec::new();
        for e in q..self.paths.len() {
            let target = WeightedForms::new(e, q, self.weight);
            if target.is_empty() {
                continue;
            }
            for reach in &self.paths[e] {
                if reach.len() < 2 {
                    continue;
                }
                let restricted: Vec<Vec<SparseRow>> = reach
                    .iter()
                    .map(|p| self.restriction_columns(p, &blocks[p.block], &target))
                    .collect::<Result<_>>()?;
                for a in 1..reach.len() {
                    let mut rows: Vec<SparseRow> = vec![Vec::new(); target.len()];
                    for (sign, idx) in [(Rational::one(), a), (-Rational::one(), 0)] {
                        let p = &reach[idx];
                        for (col, image) in restricted[idx].iter().enumerate() {
                            for (r, v) in image {
                                rows[*r].push((offsets[p.block] + col, &sign * v));
                            }
                        }
                    }
                    constraints.extend(rows);
                }
            }
        }
        let k = QMatrix::from_sparse_rows(constraints, dim);
        let (kernel, free) = kernel_with_free(&k);
        Ok(Slice {
            blocks,
            offsets,
            dim,
            kernel,
            free,
        })
    }

    fn restriction_columns(
        &self,
        p: &Path,
        block: &WeightedForms,
        target: &WeightedForms,
    ) -> Result<Vec<SparseRow>> {
        let m = p.delta.target();
        (0..block.len())
            .map(|i| {
                let f = block.form(&self.ctxs[m], i);
                target.coords(&self.restrict(p, &f)?)
            })
            .collect()
    }

    pub fn dim(&self, q: usize) -> usize {
        self.slices.get(q).map_or(0, |s| s.kernel.len())
    }

    /// Compatible family from coordinates in the kernel basis.
    fn family(&self, q: usize, y: &[Rational]) -> Vec<Rational> {
        let slice = &self.slices[q];
        let mut x = vec![Rational::zero(); slice.dim];
        for (c, b) in y.iter().zip(&slice.kernel) {
            if c.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *xi += c * bi;
                }
            }
        }
        x
    }

    fn family_coords(&self, q: usize, x: &[Rational]) -> Vec<Rational> {
        self.slices[q].free.iter().map(|&i| x[i].clone()).collect()
    }

    fn d_family(&self, q: usize, x: &[Rational]) -> Vec<Rational> {
        let src = &self.slices[q];
        let Some(dst) = self.slices.get(q + 1) else {
            return Vec::new();
        };
        let mut out = vec![Rational::zero(); dst.dim];
        for (b, block) in src.blocks.iter().enumerate() {
            for i in 0..block.len() {
                let c = &x[src.offsets[b] + i];
                if c.is_zero() {
                    continue;
                }
                for (j, v) in block.d_coords(i, &dst.blocks[b]) {
                    out[dst.offsets[b] + j] += c * v;
                }
            }
        }
        out
    }

    /// The complex in kernel-basis coordinates.
    pub fn view(&self) -> CochainComplexView {
        let top = self.slices.len();
        let dims: Vec<usize> = (0..top).map(|q| self.dim(q)).collect();
        let mut maps = Vec::new();
        for q in 0..top {
            let rows = dims.get(q + 1).copied().unwrap_or(0);
            let mut cols: Vec<SparseRow> = Vec::new();
            for k in 0..dims[q] {
                let mut y = vec![Rational::zero(); dims[q]];
                y[k] = Rational::one();
                let dx = self.d_family(q, &self.family(q, &y));
                let coords = if q + 1 < top { self.family_coords(q + 1, &dx) } else { Vec::new() };
                cols.push(to_sparse(&coords));
            }
            maps.push(QMatrix::from_sparse_rows(cols, rows).transpose());
        }
        CochainComplexView { dims, maps }
    }

    /// Matrix of the integration map `A^q -> C^q` in kernel coordinates.
    pub fn integration_matrix(&self, q: usize) -> QMatrix {
        let n = self.dim(q);
        let rows = self.s.count(q);
        let mut cols: Vec<SparseRow> = Vec::new();
        for k in 0..n {
            let mut y = vec![Rational::zero(); n];
            y[k] = Rational::one();
            let c = self.integrate_family(q, &self.family(q, &y));
            cols.push(to_sparse(&c.values));
        }
        QMatrix::from_sparse_rows(cols, rows).transpose()
    }

    fn integrate_family(&self, q: usize, x: &[Rational]) -> Cochain {
        let el = self.element(q, x);
        self.integrate(&el)
    }

    pub fn element(&self, q: usize, x: &[Rational]) -> SullivanElement {
        let slice = &self.slices[q];
        let forms = slice
            .blocks
            .iter()
            .enumerate()
            .map(|(b, block)| {
                let m = self.maximal[b].0;
                block.form_of(&self.ctxs[m], &x[slice.offsets[b]..slice.offsets[b] + block.len()])
            })
            .collect();
        SullivanElement {
            degree: q,
            weight: self.weight,
            forms,
        }
    }

    pub fn element_from_coords(&self, q: usize, y: &[Rational]) -> SullivanElement {
        self.element(q, &self.family(q, y))
    }

    /// Basis of the degree-`q` compatible families.
    pub fn basis(&self, q: usize) -> Vec<SullivanElement> {
        (0..self.dim(q))
            .map(|k| {
                let mut y = vec![Rational::zero(); self.dim(q)];
                y[k] = Rational::one();
                self.element_from_coords(q, &y)
            })
            .collect()
    }

    /// The form of `u` on the `k`-th `d`-simplex.
    pub fn on_simplex(&self, u: &SullivanElement, d: usize, k: usize) -> Result<DiffForm> {
        let p = self.paths[d][k]
            .first()
            .ok_or_else(|| Error::DimensionMismatch(format!("simplex {k} of dimension {d} unreachable")))?;
        pullback_along(&p.delta, &u.forms[p.block], &self.ctxs[d])
    }

    /// `∫ u`: the cochain `τ ↦ ∫_{Δ^q} u|_τ`.
    pub fn integrate(&self, u: &SullivanElement) -> Cochain {
        let q = u.degree;
        let values = (0..self.s.count(q))
            .map(|k| {
                let form = self.on_simplex(u, q, k).expect("every simplex lies under a maximal one");
                crate::simplicial::integrate_over_simplex(&form.of_degree(q as u32))
            })
            .collect();
        Cochain { degree: q, values }
    }

    /// Are the restrictions of `u` to shared faces equal?
    pub fn is_compatible(&self, u: &SullivanElement) -> Result<bool> {
        for (e, level) in self.paths.iter().enumerate() {
            for reach in level {
                let mut first: Option<DiffForm> = None;
                for p in reach {
                    let f = pullback_along(&p.delta, &u.forms[p.block], &self.ctxs[e])?;
                    match &first {
                        None => first = Some(f),
                        Some(g) if *g != f => return Ok(false),
                        _ => {}
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn d(&self, u: &SullivanElement) -> SullivanElement {
        SullivanElement {
            degree: u.degree + 1,
            weight: u.weight,
            forms: u.forms.iter().map(DiffForm::d).collect(),
        }
    }

    pub fn product(&self, u: &SullivanElement, v: &SullivanElement) -> SullivanElement {
        SullivanElement {
            degree: u.degree + v.degree,
            weight: u.weight + v.weight,
            forms: u.forms.iter().zip(&v.forms).map(|(a, b)| a.w(b)).collect(),
        }
    }

    pub fn cochain_view(&self) -> CochainComplexView {
        cochain_view(self.s)
    }
}

pub fn cochain_view(s: &FiniteSimplicialSet) -> CochainComplexView {
    let dims: Vec<usize> = (0..=s.dim()).map(|d| s.count(d)).collect();
    let maps = (0..=s.dim())
        .map(|q| {
            if q < s.dim() {
                coboundary_matrix(s, q)
            } else {
                QMatrix::zeros(0, s.count(q))
            }
        })
        .collect();
    CochainComplexView { dims, maps }
}

/// Kernel basis together with its free columns.
fn kernel_with_free(k: &QMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let (_, pivots) = k.rref();
    let free = (0..k.ncols()).filter(|c| pivots.binary_search(c).is_err()).collect();
    (k.kernel(), free)
}
