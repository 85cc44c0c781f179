//! Truncated multivariate power series `k[[f_1..f_n]] / m^T`.

use num_traits::{One, Zero};

use super::poly::{Monomial, MultiPoly};
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A power series known modulo all terms of total degree `>= precision`.
/// Arithmetic results carry the minimum of the operand precisions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: MultiPoly,
    precision: u32,
}

impl TruncatedSeries {
    /// Truncates `poly` below `precision`. Fails on negative exponents.
    pub fn new(poly: MultiPoly, precision: u32) -> Result<Self> {
        if !poly.is_polynomial() {
            return Err(Error::Parse(
                "power series cannot carry negative exponents".into(),
            ));
        }
        Ok(Self::truncating(poly, precision))
    }

    fn truncating(mut poly: MultiPoly, precision: u32) -> Self {
        poly.retain(|m| m.degree() < precision as i64);
        TruncatedSeries { poly, precision }
    }

    pub fn zero(nvars: usize, precision: u32) -> Self {
        TruncatedSeries {
            poly: MultiPoly::zero(nvars),
            precision,
        }
    }

    pub fn one(nvars: usize, precision: u32) -> Self {
        Self::truncating(MultiPoly::one(nvars), precision)
    }

    pub fn constant(nvars: usize, c: Rational, precision: u32) -> Self {
        Self::truncating(MultiPoly::constant(nvars, c), precision)
    }

    pub fn var(nvars: usize, i: usize, precision: u32) -> Self {
        Self::truncating(MultiPoly::var(nvars, i), precision)
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.poly
            .coeff(&Monomial(exps.iter().map(|&e| e as i32).collect()))
    }

    pub fn constant_term(&self) -> Rational {
        self.poly.constant_term()
    }

    /// Lowest total degree of a stored term; `None` if zero to precision.
    pub fn order(&self) -> Option<u32> {
        self.poly.min_degree().map(|d| d as u32)
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        Self::truncating(self.poly.clone(), precision.min(self.precision))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::truncating(&self.poly + &rhs.poly, self.precision.min(rhs.precision))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::truncating(&self.poly - &rhs.poly, self.precision.min(rhs.precision))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let precision = self.precision.min(rhs.precision);
        let mut out = MultiPoly::zero(self.nvars());
        for (ma, ca) in self.poly.terms() {
            for (mb, cb) in rhs.poly.terms() {
                if ma.degree() + mb.degree() < precision as i64 {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        TruncatedSeries {
            poly: out,
            precision,
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            poly: -&self.poly,
            precision: self.precision,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            poly: self.poly.scale(c),
            precision: self.precision,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars(), self.precision);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotAUnit(self.render_default()));
        }
        let cinv = Rational::one() / &c;
        // u = c(1 + r) with r(0) = 0, so 1/u = c⁻¹ Σ (-r)^k.
        let r = self.scale(&cinv).sub(&Self::one(self.nvars(), self.precision));
        let minus_r = r.neg();
        let mut acc = Self::one(self.nvars(), self.precision);
        let mut power = Self::one(self.nvars(), self.precision);
        for _ in 1..self.precision {
            power = power.mul(&minus_r);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&cinv))
    }

    /// Partial derivative; the result is known to one degree less.
    pub fn derivative(&self, i: usize) -> Self {
        Self::truncating(self.poly.derivative(i), self.precision.saturating_sub(1))
    }

    /// Substitute series without constant term for the variables.
    pub fn compose(&self, images: &[TruncatedSeries]) -> Result<Self> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars()
            )));
        }
        if let Some(bad) = images.iter().find(|s| !s.constant_term().is_zero()) {
            return Err(Error::NotInvertibleChange(format!(
                "image {} has a constant term",
                bad.render_default()
            )));
        }
        let target = images.first().map(|s| s.nvars()).unwrap_or(0);
        let precision = images
            .iter()
            .map(|s| s.precision)
            .min()
            .unwrap_or(self.precision)
            .min(self.precision);
        let mut powers: Vec<Vec<TruncatedSeries>> = images
            .iter()
            .map(|s| vec![Self::one(target, precision), s.with_precision(precision)])
            .collect();
        let mut out = Self::zero(target, precision);
        for (m, c) in self.poly.terms() {
            let mut t = Self::constant(target, c.clone(), precision);
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i][powers[i].len() - 1].mul(&powers[i][1]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn render(&self, names: &[impl AsRef<str>]) -> String {
        self.poly.render(names)
    }

    fn render_default(&self) -> String {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("f{i}")).collect();
        self.render(&names)
    }
}

impl Ring for TruncatedSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars(), self.precision)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars(), self.precision)
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;
    use crate::exactalg::rational::{q, qf};

    fn s(expr: &str, vars: &[&str], prec: u32) -> TruncatedSeries {
        TruncatedSeries::new(parse_poly(expr, vars).unwrap(), prec).unwrap()
    }

    #[test]
    fn invert_constant() {
        let u = TruncatedSeries::constant(1, q(2), 4);
        assert_eq!(u.invert().unwrap(), TruncatedSeries::constant(1, qf(1, 2), 4));
    }

    #[test]
    fn invert_geometric_one_var() {
        let u = s("1 + f", &["f"], 4);
        assert_eq!(u.invert().unwrap(), s("1 - f + f^2 - f^3", &["f"], 4));
    }

    #[test]
    fn invert_geometric_two_vars() {
        let u = s("1 + f1 + f2", &["f1", "f2"], 2);
        // Degree-2 terms are discarded at precision 2.
        assert_eq!(u.invert().unwrap(), s("1 - f1 - f2", &["f1", "f2"], 2));
        let u3 = s("1 + f1 + f2", &["f1", "f2"], 3);
        assert_eq!(
            u3.invert().unwrap(),
            s("1 - f1 - f2 + f1^2 + 2*f1*f2 + f2^2", &["f1", "f2"], 3)
        );
    }

    #[test]
    fn non_unit_rejected() {
        assert!(matches!(s("f", &["f"], 3).invert(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn precision_is_min() {
        let a = s("1 + f", &["f"], 5);
        let b = s("1 + f^2", &["f"], 3);
        assert_eq!(a.mul(&b).precision(), 3);
        assert_eq!(a.add(&b).precision(), 3);
        assert_eq!(a.mul(&b), s("1 + f + f^2", &["f"], 3));
    }

    #[test]
    fn compose_with_change_of_variable() {
        let a = s("f^2", &["f"], 6);
        let phi = s("g + g^2", &["g"], 6);
        assert_eq!(a.compose(&[phi]).unwrap(), s("g^2 + 2*g^3 + g^4", &["g"], 6));
    }
}
