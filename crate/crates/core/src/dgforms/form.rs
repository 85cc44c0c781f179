//! Differential forms: sums of `coefficient · dx_I` with `I` an increasing
//! set of odd generators, stored as a bitmask.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::context::{same_context, Ctx};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentSeries, Rational, Ring};

#[derive(Clone)]
pub struct DiffForm {
    ctx: Ctx,
    terms: BTreeMap<u32, LaurentSeries>,
}

/// Sign of moving the generators of `b` past those of `a` into sorted order
/// (`a` on the left).
pub(crate) fn merge_sign(a: u32, b: u32) -> i32 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (a >> (j + 1)).count_ones();
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of generators of `mask` strictly below bit `i`.
pub(crate) fn below(mask: u32, i: usize) -> u32 {
    (mask & ((1u32 << i) - 1)).count_ones()
}

impl DiffForm {
    pub fn zero(ctx: &Ctx) -> Self {
        DiffForm {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn function(ctx: &Ctx, c: LaurentSeries) -> Self {
        Self::from_terms(ctx, [(0, c)])
    }

    pub(crate) fn odd_generator(ctx: &Ctx, i: usize) -> Self {
        Self::from_terms(ctx, [(1u32 << i, ctx.constant_series(Rational::one()))])
    }

    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (u32, LaurentSeries)>) -> Self {
        let mut out = Self::zero(ctx);
        for (mask, c) in terms {
            out.add_term(mask, c);
        }
        out
    }

    fn add_term(&mut self, mask: u32, c: LaurentSeries) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&mask) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(mask, sum);
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentSeries)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: u32) -> LaurentSeries {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| self.ctx.constant_series(Rational::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Form degree if homogeneous (zero counts as degree 0).
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.count_ones());
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn has_only_even_terms(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    /// `(p, q)` = (base degree, simplex degree) of each term.
    pub fn bidegree_of(&self, mask: u32) -> (u32, u32) {
        (
            (mask & self.ctx.base_mask()).count_ones(),
            (mask & self.ctx.simplex_mask()).count_ones(),
        )
    }

    /// The part of bidegree `(p, q)`.
    pub fn part(&self, p: u32, q: u32) -> Self {
        let ctx = self.ctx.clone();
        Self::from_terms(
            &ctx,
            self.terms
                .iter()
                .filter(|(m, _)| self.bidegree_of(**m) == (p, q))
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn of_degree(&self, k: u32) -> Self {
        Self::from_terms(
            &self.ctx,
            self.terms
                .iter()
                .filter(|(m, _)| m.count_ones() == k)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Degree-0 part as a series.
    pub fn function_part(&self) -> LaurentSeries {
        self.coefficient(0)
    }

    /// Lowest precision among coefficients (`None` if all exact).
    pub fn precision(&self) -> Option<i64> {
        self.terms.values().filter_map(|c| c.precision()).min()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(same_context(&self.ctx, &rhs.ctx), "forms from different contexts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| c.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map_coefficients(|c| c.scale(k))
    }

    /// Multiply by an even function.
    pub fn times_function(&self, g: &LaurentSeries) -> Self {
        self.map_coefficients(|c| c.mul(g))
    }

    fn map_coefficients(&self, f: impl Fn(&LaurentSeries) -> LaurentSeries) -> Self {
        Self::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn wedge(&self, rhs: &Self) -> Result<Self> {
        if !same_context(&self.ctx, &rhs.ctx) {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if ma & mb != 0 {
                    continue;
                }
                let c = ca.mul(cb);
                let c = if merge_sign(*ma, *mb) < 0 { c.neg() } else { c };
                out.add_term(ma | mb, c);
            }
        }
        Ok(out)
    }

    /// Panicking variant of [`wedge`](Self::wedge) for forms known to share a context.
    pub fn w(&self, rhs: &Self) -> Self {
        self.wedge(rhs).expect("forms from different contexts")
    }

    fn d_over(&self, vars: impl Iterator<Item = usize> + Clone) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            for i in vars.clone() {
                if m & (1 << i) != 0 {
                    continue;
                }
                let dc = c.derivative(i);
                if dc.is_zero() {
                    continue;
                }
                let dc = if below(*m, i) % 2 == 1 { dc.neg() } else { dc };
                out.add_term(m | (1 << i), dc);
            }
        }
        out
    }

    /// Total exterior derivative; the new differential enters on the left.
    pub fn d(&self) -> Self {
        self.d_over(0..self.ctx.nvars())
    }

    /// Derivative in the simplex directions.
    pub fn d_simplex(&self) -> Self {
        self.d_over(0..self.ctx.simplex_dim())
    }

    /// Derivative in the base directions. With the simplex factor written
    /// first this carries the `(-1)^q` of the bicomplex automatically.
    pub fn d_base(&self) -> Self {
        self.d_over(self.ctx.simplex_dim()..self.ctx.nvars())
    }

    /// Interior product with `v = Σ v_i ∂/∂f_i` (base directions only).
    pub fn contract(&self, v: &[LaurentSeries]) -> Result<Self> {
        let l = self.ctx.simplex_dim();
        if v.len() != self.ctx.base_dim() {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            for (j, vj) in v.iter().enumerate() {
                let i = l + j;
                if m & (1 << i) == 0 || vj.is_zero() {
                    continue;
                }
                let coeff = c.mul(vj);
                let coeff = if below(*m, i) % 2 == 1 { coeff.neg() } else { coeff };
                out.add_term(m & !(1 << i), coeff);
            }
        }
        Ok(out)
    }

    /// Drop coefficient terms of graded degree `>= precision`.
    pub fn truncated(&self, precision: i64) -> Self {
        self.map_coefficients(|c| {
            let p = c.precision().map_or(precision, |q| q.min(precision));
            LaurentSeries::with_precision(c.poly().clone(), c.graded_from(), Some(p))
        })
    }

    /// Canonical text such as `1/f d f` or `(-2*f + t1) d t1^d f`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return match self.precision() {
                Some(p) => format!("O(deg {p})"),
                None => "0".into(),
            };
        }
        let names = self.ctx.names();
        let mut keys: Vec<(u32, Vec<usize>, u32)> = self
            .terms
            .keys()
            .map(|m| (m.count_ones(), bits(*m), *m))
            .collect();
        keys.sort();
        let mut out = String::new();
        for (k, (_, idx, mask)) in keys.iter().enumerate() {
            let c = &self.terms[mask];
            let mut coeff = c.render(names);
            let multi = c.poly().len() > 1 || !c.is_exact();
            let odd: Vec<String> = idx.iter().map(|&i| format!("d {}", names[i])).collect();
            let odd = odd.join("^");
            let mut piece = if idx.is_empty() {
                coeff
            } else if multi {
                format!("({coeff}) {odd}")
            } else if coeff == "1" {
                odd
            } else if coeff == "-1" {
                format!("-{odd}")
            } else {
                coeff.push(' ');
                coeff + &odd
            };
            if k > 0 {
                if let Some(rest) = piece.strip_prefix('-') {
                    out.push_str(" - ");
                    piece = rest.to_string();
                } else {
                    out.push_str(" + ");
                }
            }
            out.push_str(&piece);
        }
        out
    }
}

pub(crate) fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

impl PartialEq for DiffForm {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl fmt::Debug for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffForm({})", self.render())
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Ring for DiffForm {
    fn zero_like(&self) -> Self {
        Self::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        self.ctx.one()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.w(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}
