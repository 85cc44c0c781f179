//! Sparse exact linear algebra over Q.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Sorted `(column, value)` pairs with no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

/// A sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<SparseRow>,
    cols: usize,
}

fn axpy(a: &SparseRow, c: &Rational, b: &SparseRow) -> SparseRow {
    // a + c*b
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    if let Some((_, lead)) = row.first() {
        let inv = Rational::one() / lead;
        for (_, v) in row.iter_mut() {
            *v = &*v * &inv;
        }
    }
}

/// Row echelon form built one row at a time. Stored rows have leading
/// coefficient 1 and are indexed by their leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Remainder of `row` after clearing every pivot column it meets.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut k = 0;
        while k < row.len() {
            let col = row[k].0;
            if let Some(p) = self.pivots.get(&col) {
                let c = -row[k].1.clone();
                row = axpy(&row, &c, p);
            } else {
                k += 1;
            }
        }
        row
    }

    /// Adds a row; returns `true` if it was independent of the previous ones.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = self.reduce_leading(row);
        if r.is_empty() {
            return false;
        }
        normalize(&mut r);
        self.pivots.insert(r[0].0, r);
        true
    }

    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some((col, v)) = row.first() {
            match self.pivots.get(col) {
                Some(p) => {
                    let c = -v.clone();
                    row = axpy(&row, &c, p);
                }
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce_leading(row.clone()).is_empty()
    }

    /// Clears entries above each pivot so the rows are fully reduced.
    pub fn into_reduced(mut self) -> BTreeMap<usize, SparseRow> {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &c in &cols {
            let mut row = self.pivots.remove(&c).expect("pivot");
            let mut k = 1;
            while k < row.len() {
                let col = row[k].0;
                if let Some(p) = self.pivots.get(&col) {
                    let coef = -row[k].1.clone();
                    row = axpy(&row, &coef, p);
                } else {
                    k += 1;
                }
            }
            self.pivots.insert(c, row);
        }
        self.pivots
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows: vec![Vec::new(); rows],
            cols,
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(QMatrix {
            rows: rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(j, v)| (j, v.clone()))
                        .collect()
                })
                .collect(),
            cols,
        })
    }

    pub fn from_sparse_rows(rows: Vec<SparseRow>, cols: usize) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                let mut out: SparseRow = Vec::with_capacity(r.len());
                for (j, v) in r {
                    debug_assert!(j < cols);
                    match out.last_mut() {
                        Some(last) if last.0 == j => last.1 = &last.1 + &v,
                        _ => out.push((j, v)),
                    }
                }
                out.retain(|e| !e.1.is_zero());
                out
            })
            .collect();
        QMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) if v.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => row.insert(k, (j, v)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.nrows())
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                rows[*j].push((i, v.clone()));
            }
        }
        QMatrix {
            rows,
            cols: self.nrows(),
        }
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().fold(Rational::zero(), |acc, (j, v)| acc + v * &x[*j]))
            .collect())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.cols,
                other.nrows(),
                other.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc: SparseRow = Vec::new();
                for (k, v) in r {
                    acc = axpy(&acc, v, &other.rows[*k]);
                }
                acc
            })
            .collect();
        Ok(QMatrix {
            rows,
            cols: other.cols,
        })
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        // Eliminating along the shorter side is cheaper.
        if self.cols < self.nrows() {
            self.transpose().echelon().rank()
        } else {
            self.echelon().rank()
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let reduced = self.echelon().into_reduced();
        let pivots: Vec<usize> = reduced.keys().copied().collect();
        let mut rows: Vec<SparseRow> = reduced.into_values().collect();
        rows.resize(self.nrows().max(rows.len()), Vec::new());
        (
            QMatrix {
                rows,
                cols: self.cols,
            },
            pivots,
        )
    }

    /// A basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let reduced = self.echelon().into_reduced();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !reduced.contains_key(c)) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (p, row) in &reduced {
                if let Ok(k) = row.binary_search_by_key(&free, |e| e.0) {
                    x[*p] = -row[k].1.clone();
                }
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of `A x = b` with free variables set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "right side of length {} for {} rows",
                b.len(),
                self.nrows()
            )));
        }
        let aug = self.cols;
        let mut e = Echelon::new();
        for (r, bi) in self.rows.iter().zip(b) {
            let mut row = r.clone();
            if !bi.is_zero() {
                row.push((aug, bi.clone()));
            }
            e.insert(row);
        }
        let reduced = e.into_reduced();
        if reduced.contains_key(&aug) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (p, row) in &reduced {
            if let Some((c, v)) = row.last() {
                if *c == aug {
                    x[*p] = v.clone();
                }
            }
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[q(3), q(1)]).unwrap(), Some(vec![q(2), q(1)]));
        let s = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(s.solve(&[q(1), q(3)]).unwrap(), None);
        assert!(a.solve(&[q(1)]).is_err());
    }

    #[test]
    fn rref_pivots() {
        let a = m(&[&[0, 2, 4], &[1, 1, 1]]);
        let (r, p) = a.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r.to_dense()[0], vec![q(1), q(0), q(-1)]);
        assert_eq!(r.to_dense()[1], vec![q(0), q(1), q(2)]);
    }

    #[test]
    fn product_matches_dense() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[3, 0], &[1, 1]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[5, 2], &[1, 1]]));
    }
}
