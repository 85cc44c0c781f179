//! Sparse multivariate polynomials over the rationals.
//!
//! Exponents are signed so the same type also models Laurent polynomials,
//! i.e. polynomials localized at the coordinate monomials. Constructors
//! that need an honest polynomial check for negative exponents.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, Rational};

/// Exponent vector ordered graded-lexicographically (lower total degree
/// first, ties broken lexicographically).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Total degree counting only variables with index `>= from`.
    pub fn degree_from(&self, from: usize) -> i64 {
        self.0.iter().skip(from).map(|&e| e as i64).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    /// True if `self` divides `other` with a nonnegative quotient.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors in `nvars` variables of total degree exactly `d`,
/// in ascending graded-lex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d as i32);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e as i32);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All exponent vectors of total degree `< bound`, ascending.
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    (0..bound)
        .flat_map(|d| monomials_of_degree(nvars, d))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.is_nonnegative())
    }

    /// `Some((m, c))` if the polynomial is the single term `c·m`.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e != 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                out.add_term(m2, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Largest total degree, `None` for zero.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn min_degree_from(&self, from: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.degree_from(from)).min()
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    pub fn filtered(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterpret in `nvars` variables, sending variable `i` to `positions[i]`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &p) in positions.iter().enumerate() {
                e[p] += m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitute polynomial `images[i]` for variable `i`. Requires
    /// nonnegative exponents.
    pub fn compose(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(p.nvars), p.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            assert!(m.is_nonnegative(), "compose needs a polynomial");
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while cache[i].len() <= e {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                if e > 0 {
                    t = &t * &cache[i][e];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluate at a rational point. Variables with negative exponents must
    /// be nonzero there.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e >= 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                } else {
                    t /= num_traits::pow(x.clone(), (-e) as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Canonical text: terms in ascending graded-lex order, negative
    /// exponents written as divisions (`t1/f^2`).
    pub fn render(&self, names: &[impl AsRef<str>]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let body = render_term(m, &c.abs(), names);
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn render_term(m: &Monomial, c: &Rational, names: &[impl AsRef<str>]) -> String {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        let name = names[i].as_ref();
        let piece = |k: i32| if k == 1 { name.to_string() } else { format!("{name}^{k}") };
        match e.cmp(&0) {
            Ordering::Greater => num.push(piece(e)),
            Ordering::Less => den.push(piece(-e)),
            Ordering::Equal => {}
        }
    }
    let mut s = if num.is_empty() {
        fmt_rational(c)
    } else if c.is_one() {
        num.join("*")
    } else {
        format!("{}*{}", fmt_rational(c), num.join("*"))
    };
    for d in den {
        s.push('/');
        s.push_str(&d);
    }
    s
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    fn x() -> MultiPoly {
        MultiPoly::var(2, 0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(2, 1)
    }

    #[test]
    fn grlex_order_and_render() {
        let p = &(&x().pow(2) + &y()) - &MultiPoly::constant(2, q(3));
        assert_eq!(p.render(&["x", "y"]), "-3 + y + x^2");
        let l = MultiPoly::term(Monomial(vec![-1, 1]), q(-2));
        assert_eq!(l.render(&["f", "t"]), "-2*t/f");
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_below(3, 3).len(), 10);
        let m = monomials_below(2, 3);
        assert!(m.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn derivative_and_compose() {
        let p = &x().pow(3) + &(&x() * &y());
        assert_eq!(p.derivative(0), &x().pow(2).scale(&q(3)) + &y());
        // x -> x + y, y -> y
        let c = p.compose(&[&x() + &y(), y()]);
        let expected = &(&x() + &y()).pow(3) + &(&(&x() + &y()) * &y());
        assert_eq!(c, expected);
        assert_eq!(p.eval(&[q(2), q(5)]), q(18));
    }

    #[test]
    fn laurent_cancellation() {
        let f = MultiPoly::var(1, 0);
        let finv = MultiPoly::term(Monomial(vec![-1]), q(1));
        assert_eq!(&f * &finv, MultiPoly::one(1));
        assert_eq!(finv.derivative(0), MultiPoly::term(Monomial(vec![-2]), q(-1)));
    }
}
