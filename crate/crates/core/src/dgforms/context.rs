//! The ambient algebra: simplex coordinates `t1..tl` (with `t0` eliminated)
//! followed by base coordinates, each with its differential.

use std::sync::Arc;

use num_traits::One;

use super::form::DiffForm;
use crate::error::{Error, Result};
use crate::exactalg::{parse_poly, LaurentSeries, Monomial, MultiPoly, Rational};

#[derive(Debug, PartialEq, Eq)]
pub struct DGContext {
    simplex_dim: usize,
    names: Vec<String>,
    default_precision: Option<i64>,
}

pub type Ctx = Arc<DGContext>;

impl DGContext {
    /// Exact (polynomial / Laurent polynomial) coefficients.
    pub fn new(simplex_dim: usize, base: &[&str]) -> Ctx {
        Self::build(simplex_dim, base, None)
    }

    /// Coefficients are series in the base variables known below
    /// graded degree `precision`.
    pub fn with_precision(simplex_dim: usize, base: &[&str], precision: i64) -> Ctx {
        Self::build(simplex_dim, base, Some(precision))
    }

    fn build(simplex_dim: usize, base: &[&str], default_precision: Option<i64>) -> Ctx {
        let mut names: Vec<String> = (1..=simplex_dim).map(|i| format!("t{i}")).collect();
        names.extend(base.iter().map(|s| s.to_string()));
        Arc::new(DGContext {
            simplex_dim,
            names,
            default_precision,
        })
    }

    pub fn simplex_dim(&self) -> usize {
        self.simplex_dim
    }

    pub fn base_dim(&self) -> usize {
        self.names.len() - self.simplex_dim
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn base_names(&self) -> Vec<&str> {
        self.names[self.simplex_dim..].iter().map(String::as_str).collect()
    }

    pub fn default_precision(&self) -> Option<i64> {
        self.default_precision
    }

    /// Bits of the odd generators `dt1..dtl`.
    pub fn simplex_mask(&self) -> u32 {
        (1u32 << self.simplex_dim) - 1
    }

    pub fn base_mask(&self) -> u32 {
        ((1u32 << self.nvars()) - 1) & !self.simplex_mask()
    }

    pub fn series(&self, poly: MultiPoly) -> LaurentSeries {
        assert_eq!(poly.nvars(), self.nvars());
        LaurentSeries::with_precision(poly, self.simplex_dim, self.default_precision)
    }

    pub fn constant_series(&self, c: Rational) -> LaurentSeries {
        self.series(MultiPoly::constant(self.nvars(), c))
    }

    /// `t_i` for `0 <= i <= l`, with `t0 = 1 - t1 - ... - tl`.
    pub fn t_poly(&self, i: usize) -> MultiPoly {
        let n = self.nvars();
        assert!(i <= self.simplex_dim);
        if i == 0 {
            let mut p = MultiPoly::one(n);
            for j in 0..self.simplex_dim {
                p = &p - &MultiPoly::var(n, j);
            }
            p
        } else {
            MultiPoly::var(n, i - 1)
        }
    }

    pub fn t(self: &Arc<Self>, i: usize) -> DiffForm {
        DiffForm::function(self, self.series(self.t_poly(i)))
    }

    pub fn dt(self: &Arc<Self>, i: usize) -> DiffForm {
        self.t(i).d()
    }

    /// The `j`-th base coordinate as a function.
    pub fn f(self: &Arc<Self>, j: usize) -> DiffForm {
        let n = self.nvars();
        DiffForm::function(self, self.series(MultiPoly::var(n, self.simplex_dim + j)))
    }

    pub fn df(self: &Arc<Self>, j: usize) -> DiffForm {
        DiffForm::odd_generator(self, self.simplex_dim + j)
    }

    pub fn scalar(self: &Arc<Self>, c: Rational) -> DiffForm {
        DiffForm::function(self, self.constant_series(c))
    }

    pub fn zero(self: &Arc<Self>) -> DiffForm {
        DiffForm::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> DiffForm {
        self.scalar(Rational::one())
    }

    /// Parse a function of the even variables. `t0` is accepted and
    /// replaced by `1 - t1 - ... - tl`.
    pub fn parse_function(&self, src: &str) -> Result<MultiPoly> {
        let mut vars: Vec<&str> = vec!["t0"];
        vars.extend(self.names.iter().map(String::as_str));
        let raw = parse_poly(src, &vars)?;
        let n = self.nvars();
        let t0 = self.t_poly(0);
        let mut out = MultiPoly::zero(n);
        for (m, c) in raw.terms() {
            let e0 = m.0[0];
            if e0 < 0 {
                return Err(Error::Parse(format!("negative power of t0 in {src:?}")));
            }
            let rest = MultiPoly::term(Monomial(m.0[1..].to_vec()), c.clone());
            out = &out + &(&rest * &t0.pow(e0 as u32));
        }
        Ok(out)
    }

    pub fn parse_series(&self, src: &str) -> Result<LaurentSeries> {
        Ok(self.series(self.parse_function(src)?))
    }

    pub fn parse_form0(self: &Arc<Self>, src: &str) -> Result<DiffForm> {
        Ok(DiffForm::function(self, self.parse_series(src)?))
    }
}

pub(crate) fn same_context(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
