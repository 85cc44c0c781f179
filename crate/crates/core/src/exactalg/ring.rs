//! A minimal ring interface shared by scalars, polynomials, series and
//! differential forms, plus square matrices over any such ring.
//!
//! Method names avoid `add`/`mul` so the trait can sit next to the
//! `std::ops` impls without ambiguity.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::{q, Rational};

pub trait Ring: Clone + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn from_rational_like(&self, c: &Rational) -> Self {
        self.one_like().scaled(c)
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Ring for super::poly::MultiPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars())
    }
    fn vanishes(&self) -> bool {
        super::poly::MultiPoly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// Evaluate a polynomial (nonnegative exponents) at elements of any ring.
pub fn eval_in<R: Ring>(p: &super::poly::MultiPoly, values: &[R], sample: &R) -> R {
    assert_eq!(values.len(), p.nvars());
    let mut acc = sample.zero_like();
    for (m, c) in p.terms() {
        assert!(m.is_nonnegative(), "eval_in needs a polynomial");
        let mut t = sample.one_like().scaled(c);
        for (x, &e) in values.iter().zip(&m.0) {
            if e > 0 {
                t = t.times(&x.pow(e as u32));
            }
        }
        acc = acc.plus(&t);
    }
    acc
}

/// Polynomials in one auxiliary indeterminate with coefficients in `R`,
/// optionally truncated above a fixed degree. Used for generating
/// functions such as `det(1 + τM)` and the `t`-expansions of the
/// localization argument.
#[derive(Clone, Debug)]
pub struct UniPoly<R: Ring> {
    pub coeffs: Vec<R>,
    pub zero: R,
    /// Coefficients of degree `> max_degree` are discarded.
    pub max_degree: usize,
}

impl<R: Ring> UniPoly<R> {
    pub fn constant(c: R, max_degree: usize) -> Self {
        let zero = c.zero_like();
        UniPoly {
            coeffs: vec![c],
            zero,
            max_degree,
        }
    }

    /// `a + b·τ`.
    pub fn linear(a: R, b: R, max_degree: usize) -> Self {
        let zero = a.zero_like();
        let mut coeffs = vec![a];
        if max_degree >= 1 {
            coeffs.push(b);
        }
        UniPoly {
            coeffs,
            zero,
            max_degree,
        }
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.zero.clone())
    }

    fn trimmed(mut self) -> Self {
        self.coeffs.truncate(self.max_degree + 1);
        while self.coeffs.len() > 1 && self.coeffs.last().map(|c| c.vanishes()).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero_like(&self) -> Self {
        UniPoly::constant(self.zero.clone(), self.max_degree)
    }
    fn one_like(&self) -> Self {
        UniPoly::constant(self.zero.one_like(), self.max_degree)
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(|c| c.vanishes())
    }
    fn plus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect();
        UniPoly {
            coeffs,
            zero: self.zero.clone(),
            max_degree: self.max_degree.min(rhs.max_degree),
        }
        .trimmed()
    }
    fn times(&self, rhs: &Self) -> Self {
        let max_degree = self.max_degree.min(rhs.max_degree);
        let n = (self.coeffs.len() + rhs.coeffs.len() - 1).min(max_degree + 1);
        let mut coeffs = vec![self.zero.clone(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j < n && !b.vanishes() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        UniPoly {
            coeffs,
            zero: self.zero.clone(),
            max_degree,
        }
        .trimmed()
    }
    fn negated(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
            zero: self.zero.clone(),
            max_degree: self.max_degree,
        }
    }
    fn scaled(&self, c: &Rational) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x.scaled(c)).collect(),
            zero: self.zero.clone(),
            max_degree: self.max_degree,
        }
        .trimmed()
    }
}

/// Dense square-or-rectangular matrix over a ring. Products multiply
/// entries left to right, so graded-commutative entries keep their signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn filled(rows: usize, cols: usize, value: R) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Identity of size `n` built from a sample element of the ring.
    pub fn identity_like(n: usize, sample: &R) -> Self {
        let zero = sample.zero_like();
        let one = sample.one_like();
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn zip_map<S: Ring, T: Ring>(&self, other: &Matrix<S>, f: impl Fn(&R, &S) -> T) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows(), other.cols()));
        Matrix::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j), other.get(i, j)))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.plus(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.minus(b))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scaled(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let zero = self.data.first().or(other.data.first()).expect("empty matrix").zero_like();
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.vanishes() && !b.vanishes() {
                    acc = acc.plus(&a.times(b));
                }
            }
            acc
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::vanishes)
    }

    pub fn trace(&self) -> R {
        assert!(self.is_square());
        let mut acc = self.get(0, 0).zero_like();
        for i in 0..self.rows {
            acc = acc.plus(self.get(i, i));
        }
        acc
    }

    /// Block-diagonal/triangular assembly from four blocks.
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        Self::from_fn(rows, cols, |i, j| match (i < a.rows, j < a.cols) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - a.cols).clone(),
            (false, true) => c.get(i - a.rows, j).clone(),
            (false, false) => d.get(i - a.rows, j - a.cols).clone(),
        })
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Leibniz expansion. Meaningful when the entries commute.
    pub fn det(&self) -> R {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            panic!("determinant of an empty matrix needs a sample element");
        }
        let mut acc = self.get(0, 0).zero_like();
        for (perm, sign) in permutations(n) {
            let mut term = self.get(0, perm[0]).clone();
            for (i, &p) in perm.iter().enumerate().skip(1) {
                if term.vanishes() {
                    break;
                }
                term = term.times(self.get(i, p));
            }
            if term.vanishes() {
                continue;
            }
            acc = if sign > 0 { acc.plus(&term) } else { acc.minus(&term) };
        }
        acc
    }

    /// Transposed cofactor matrix, so `M · adj(M) = det(M) · 1`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        if n == 1 {
            return Self::from_fn(1, 1, |_, _| self.get(0, 0).one_like());
        }
        let idx: Vec<usize> = (0..n).collect();
        Self::from_fn(n, n, |i, j| {
            let rows: Vec<usize> = idx.iter().copied().filter(|&k| k != j).collect();
            let cols: Vec<usize> = idx.iter().copied().filter(|&k| k != i).collect();
            let minor = self.select(&rows, &cols).det();
            if (i + j) % 2 == 0 {
                minor
            } else {
                minor.zero_like().minus(&minor)
            }
        })
    }

    /// `[P_1(M), …, P_r(M)]` where `det(1 + τM) = 1 + Σ P_i(M) τ^i`;
    /// `P_i` is the sum of principal `i × i` minors. Entries must commute.
    pub fn elementary_invariants(&self) -> Vec<R> {
        assert!(self.is_square());
        let n = self.rows;
        let mut out = Vec::with_capacity(n);
        for k in 1..=n {
            let mut acc = self.get(0, 0).zero_like();
            for subset in subsets(n, k) {
                acc = acc.plus(&self.select(&subset, &subset).det());
            }
            out.push(acc);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity_like(self.rows, self.get(0, 0));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Matrix<Rational> {
    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &q(1))
    }
}

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i8)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All `k`-element subsets of `0..n`, each sorted, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::qf;

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn det_and_invariants() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det(), q(18));
        let p = m.elementary_invariants();
        assert_eq!(p, vec![q(9), q(24), q(18)]);
        let id = Matrix::<Rational>::identity(4);
        assert_eq!(id.elementary_invariants(), vec![q(4), q(6), q(4), q(1)]);
    }

    #[test]
    fn unipoly_truncates() {
        let a = UniPoly::linear(q(1), q(1), 2);
        let cube = a.times(&a).times(&a);
        assert_eq!(cube.coeffs, vec![q(1), q(3), q(3)]);
        assert_eq!(a.scaled(&qf(1, 2)).coeff(1), qf(1, 2));
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|(_, s)| *s as i32).sum::<i32>(), 0);
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
