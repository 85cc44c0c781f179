//! Coefficients for differential forms: Laurent polynomials in a mixed set
//! of variables, optionally truncated as Laurent series.
//!
//! Variables with index `< graded_from` (the simplex coordinates) are
//! plain polynomial variables and never count toward precision. The
//! remaining ("graded") variables are the local coordinates; an inexact
//! element is known modulo terms whose graded degree is `>= precision`.
//! Exact elements (`precision == None`) never lose terms.

use num_traits::{One, Zero};

use super::poly::{Monomial, MultiPoly};
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    poly: MultiPoly,
    precision: Option<i64>,
    graded_from: usize,
}

impl LaurentSeries {
    pub fn exact(poly: MultiPoly, graded_from: usize) -> Self {
        LaurentSeries {
            poly,
            precision: None,
            graded_from,
        }
    }

    pub fn with_precision(poly: MultiPoly, graded_from: usize, precision: Option<i64>) -> Self {
        let mut s = LaurentSeries {
            poly,
            precision,
            graded_from,
        };
        s.truncate();
        s
    }

    pub fn zero(nvars: usize, graded_from: usize) -> Self {
        Self::exact(MultiPoly::zero(nvars), graded_from)
    }

    pub fn one(nvars: usize, graded_from: usize) -> Self {
        Self::exact(MultiPoly::one(nvars), graded_from)
    }

    pub fn constant(nvars: usize, graded_from: usize, c: Rational) -> Self {
        Self::exact(MultiPoly::constant(nvars, c), graded_from)
    }

    pub fn var(nvars: usize, graded_from: usize, i: usize) -> Self {
        Self::exact(MultiPoly::var(nvars, i), graded_from)
    }

    fn truncate(&mut self) {
        if let Some(p) = self.precision {
            let from = self.graded_from;
            self.poly.retain(|m| m.degree_from(from) < p);
        }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn graded_from(&self) -> usize {
        self.graded_from
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowest graded degree among stored terms (`precision` for an inexact
    /// zero, `None` for the exact zero).
    pub fn valuation(&self) -> Option<i64> {
        self.poly
            .min_degree_from(self.graded_from)
            .or(self.precision)
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.nvars(), rhs.nvars(), "variable count mismatch");
        assert_eq!(self.graded_from, rhs.graded_from, "grading mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self::with_precision(&self.poly + &rhs.poly, self.graded_from, min_prec(self.precision, rhs.precision))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self::with_precision(&self.poly - &rhs.poly, self.graded_from, min_prec(self.precision, rhs.precision))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if (self.is_zero() && self.is_exact()) || (rhs.is_zero() && rhs.is_exact()) {
            return Self::zero(self.nvars(), self.graded_from);
        }
        // Unknown terms of a start at degree Ta; multiplied by b they start
        // at Ta + v(b).
        let pa = self.precision.map(|t| t + rhs.valuation().unwrap_or(0));
        let pb = rhs.precision.map(|t| t + self.valuation().unwrap_or(0));
        let precision = min_prec(pa, pb);
        let mut out = MultiPoly::zero(self.nvars());
        let from = self.graded_from;
        for (ma, ca) in self.poly.terms() {
            for (mb, cb) in rhs.poly.terms() {
                if let Some(p) = precision {
                    if ma.degree_from(from) + mb.degree_from(from) >= p {
                        continue;
                    }
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        LaurentSeries {
            poly: out,
            precision,
            graded_from: self.graded_from,
        }
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            poly: -&self.poly,
            precision: self.precision,
            graded_from: self.graded_from,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentSeries {
            poly: self.poly.scale(c),
            precision: self.precision,
            graded_from: self.graded_from,
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let precision = if i >= self.graded_from {
            self.precision.map(|p| p - 1)
        } else {
            self.precision
        };
        Self::with_precision(self.poly.derivative(i), self.graded_from, precision)
    }

    /// Inverse of `c·m·(1 + r)` where `c·m` is the unique term of lowest
    /// graded degree, free of simplex variables, and `r` has positive
    /// graded degree. A monomial inverts exactly; otherwise the geometric
    /// series is taken to absolute precision `default_precision` (or to the
    /// precision implied by an inexact input).
    pub fn inverse(&self, default_precision: i64) -> Result<Self> {
        let not_unit = || Error::NotAUnit(format!("{:?}", self.poly));
        if self.is_zero() {
            return Err(not_unit());
        }
        let from = self.graded_from;
        let v = self.poly.min_degree_from(from).ok_or_else(not_unit)?;
        let lowest: Vec<_> = self
            .poly
            .terms()
            .filter(|(m, _)| m.degree_from(from) == v)
            .collect();
        if lowest.len() != 1 {
            return Err(not_unit());
        }
        let (lead_m, lead_c) = (lowest[0].0.clone(), lowest[0].1.clone());
        if lead_m.0[..from].iter().any(|&e| e != 0) {
            return Err(not_unit());
        }
        let lead_inv = MultiPoly::term(lead_m.inverse(), Rational::one() / &lead_c);
        if self.poly.len() == 1 {
            let precision = self.precision.map(|t| t - 2 * v);
            return Ok(Self::with_precision(lead_inv, from, precision));
        }
        let target = match self.precision {
            Some(t) => t - 2 * v,
            None => default_precision,
        };
        // Relative precision: terms of (1+r)^{-1} with graded degree < target + v.
        let rel = target + v;
        let one = Self::one(self.nvars(), from);
        let r = Self::with_precision(&self.poly * &lead_inv, from, Some(rel)).sub(&one);
        if r.poly.min_degree_from(from).map(|d| d < 1).unwrap_or(false) {
            return Err(not_unit());
        }
        let minus_r = r.neg();
        let mut acc = Self::with_precision(MultiPoly::one(self.nvars()), from, Some(rel));
        let mut power = acc.clone();
        for _ in 0..rel.max(0) {
            power = power.mul(&minus_r);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        let inv = Self::exact(lead_inv, from).mul(&acc);
        Ok(Self::with_precision(inv.poly, from, Some(target)))
    }

    /// Substitute `f_i -> f_i + shift_i` in the graded variables. Negative
    /// powers of shifted variables become series of absolute precision
    /// `precision`. Only exact inputs can be re-centered.
    pub fn translate(&self, shifts: &[Rational], precision: i64) -> Result<Self> {
        let from = self.graded_from;
        if !self.is_exact() {
            return Err(Error::PrecisionExhausted {
                needed: precision,
                available: self.precision.unwrap_or(0),
            });
        }
        assert_eq!(shifts.len(), self.nvars() - from);
        let n = self.nvars();
        let mut factors: Vec<Option<LaurentSeries>> = Vec::with_capacity(n);
        for (k, c) in shifts.iter().enumerate() {
            if c.is_zero() {
                factors.push(None);
            } else {
                let i = from + k;
                let base = Self::var(n, from, i).add(&Self::constant(n, from, c.clone()));
                factors.push(Some(base));
            }
        }
        let mut out = Self::zero(n, from);
        for (m, c) in self.poly.terms() {
            let mut kept = m.clone();
            let mut t = Self::constant(n, from, c.clone());
            for (k, factor) in factors.iter().enumerate() {
                let i = from + k;
                let Some(base) = factor else { continue };
                let e = m.0[i];
                kept.0[i] = 0;
                let piece = if e >= 0 {
                    base.pow(e as u32)
                } else {
                    base.inverse(precision)?.pow((-e) as u32)
                };
                t = t.mul(&piece);
            }
            t = t.mul(&Self::exact(MultiPoly::term(kept, Rational::one()), from));
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars(), self.graded_from);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn coeff(&self, m: &Monomial) -> Result<Rational> {
        if let Some(p) = self.precision {
            let d = m.degree_from(self.graded_from);
            if d >= p {
                return Err(Error::PrecisionExhausted {
                    needed: d + 1,
                    available: p,
                });
            }
        }
        Ok(self.poly.coeff(m))
    }

    /// Canonical text; inexact series end with `+ O(deg p)`.
    pub fn render(&self, names: &[impl AsRef<str>]) -> String {
        let body = self.poly.render(names);
        match self.precision {
            None => body,
            Some(p) if self.poly.is_zero() => format!("O(deg {p})"),
            Some(p) => format!("{body} + O(deg {p})"),
        }
    }

    pub fn is_single_term(&self) -> bool {
        self.poly.len() == 1 && self.is_exact()
    }
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl Ring for LaurentSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars(), self.graded_from)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars(), self.graded_from)
    }
    fn vanishes(&self) -> bool {
        self.poly.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl From<super::series::TruncatedSeries> for LaurentSeries {
    fn from(s: super::series::TruncatedSeries) -> Self {
        LaurentSeries::with_precision(s.poly().clone(), 0, Some(s.precision() as i64))
    }
}
