//! Cohomology of finite-dimensional rational cochain complexes.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{Echelon, QMatrix, Rational, SparseRow};

/// `maps[q] : C^q -> C^{q+1}` as a `dims[q+1] × dims[q]` matrix.
#[derive(Clone, Debug)]
pub struct CochainComplexView {
    pub dims: Vec<usize>,
    pub maps: Vec<QMatrix>,
}

#[derive(Clone, Debug)]
pub struct Cohomology {
    pub ranks: Vec<usize>,
    /// Cocycles whose classes form a basis of `H^q`.
    pub reps: Vec<Vec<Vec<Rational>>>,
    /// Spanning set of the coboundaries in each degree.
    pub boundaries: Vec<Vec<Vec<Rational>>>,
}

pub(crate) fn to_sparse(v: &[Rational]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub(crate) fn to_dense(row: &SparseRow, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, v) in row {
        out[*i] = v.clone();
    }
    out
}

impl CochainComplexView {
    pub fn zero(degrees: usize) -> Self {
        CochainComplexView {
            dims: vec![0; degrees],
            maps: (0..degrees).map(|_| QMatrix::zeros(0, 0)).collect(),
        }
    }

    pub fn map(&self, q: usize) -> QMatrix {
        match self.maps.get(q) {
            Some(m) => m.clone(),
            None => QMatrix::zeros(0, self.dims[q]),
        }
    }

    pub fn check(&self) -> Result<()> {
        for q in 0..self.dims.len() {
            let m = self.map(q);
            let expect_rows = self.dims.get(q + 1).copied().unwrap_or(0);
            if m.ncols() != self.dims[q] || m.nrows() != expect_rows {
                return Err(Error::DimensionMismatch(format!("coboundary in degree {q}")));
            }
            if q + 1 < self.dims.len() && !self.map(q + 1).mul(&m)?.is_zero() {
                return Err(Error::NotAComplex(q));
            }
        }
        Ok(())
    }
}

pub fn cohomology(view: &CochainComplexView) -> Result<Cohomology> {
    view.check()?;
    let mut ranks = Vec::new();
    let mut reps = Vec::new();
    let mut boundaries = Vec::new();
    for q in 0..view.dims.len() {
        let cocycles = view.map(q).kernel();
        let bnd: Vec<Vec<Rational>> = if q == 0 {
            Vec::new()
        } else {
            let t = view.map(q - 1).transpose();
            (0..t.nrows()).map(|i| to_dense(t.row(i), view.dims[q])).collect()
        };
        let mut e = Echelon::new();
        for b in &bnd {
            e.insert(to_sparse(b));
        }
        let mut r = Vec::new();
        for z in cocycles {
            if e.insert(to_sparse(&z)) {
                r.push(z);
            }
        }
        ranks.push(r.len());
        reps.push(r);
        boundaries.push(bnd);
    }
    Ok(Cohomology {
        ranks,
        reps,
        boundaries,
    })
}

impl Cohomology {
    /// Coordinates of the class of cocycle `z` in degree `q` against the
    /// chosen representatives; `None` if `z` is not in cocycles + coboundaries
    /// span.
    pub fn class_of(&self, q: usize, z: &[Rational]) -> Result<Option<Vec<Rational>>> {
        let n = z.len();
        let columns: Vec<&Vec<Rational>> = self.reps[q].iter().chain(&self.boundaries[q]).collect();
        if columns.is_empty() {
            return Ok(if z.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None });
        }
        let rows: Vec<SparseRow> = columns.iter().map(|c| to_sparse(c)).collect();
        let m = QMatrix::from_sparse_rows(rows, n).transpose();
        Ok(m.solve(z)?.map(|x| x[..self.reps[q].len()].to_vec()))
    }

    /// Is `z` a coboundary in degree `q`?
    pub fn is_coboundary(&self, q: usize, z: &[Rational]) -> bool {
        if z.iter().all(Zero::is_zero) {
            return true;
        }
        let mut e = Echelon::new();
        for b in &self.boundaries[q] {
            e.insert(to_sparse(b));
        }
        e.contains(&to_sparse(z))
    }
}
