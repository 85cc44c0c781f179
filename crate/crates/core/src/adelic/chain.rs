//! Chains of points, their form algebras `Ω(Δ^l) ⊗ Ω_ξ`, and adelic frames.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dgforms::{Ctx, DGContext, DiffForm, FormMatrix};
use crate::error::{Error, Result};
use crate::exactalg::{parse_poly_in, LaurentSeries, Matrix, MultiPoly, Ring};
use crate::simplicial::simplex_context_like;

/// Working precision for inverses of non-monomial frame entries.
pub const DEFAULT_CHAIN_PRECISION: i64 = 12;

/// A chain `(x_0, …, x_l)` of labelled points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub labels: Vec<String>,
    #[serde(default)]
    pub saturated: bool,
    #[serde(default)]
    pub maximal: bool,
}

impl Chain {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::UnknownChain("empty chain".into()));
        }
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::UnknownChain(format!("repeated point {a}")));
            }
        }
        Ok(Chain {
            labels,
            saturated: false,
            maximal: false,
        })
    }

    pub fn parse(src: &str) -> Result<Self> {
        let labels: Vec<&str> = src.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        Self::new(&labels)
    }

    /// `l` for a chain of `l + 1` points.
    pub fn length(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn with_flags(mut self, saturated: bool, maximal: bool) -> Self {
        self.saturated = saturated;
        self.maximal = maximal;
        self
    }
}

/// Forms on `Δ^l` with coefficients in the base ring of a chain: Laurent
/// polynomials in the base coordinates, completed to a series (at
/// `precision`) only where an inverse demands it.
#[derive(Clone, Debug)]
pub struct ChainAlgebra {
    chain: Chain,
    ctx: Ctx,
    base: Ctx,
    precision: i64,
}

impl ChainAlgebra {
    pub fn new<S: AsRef<str>>(chain: Chain, base: &[S], precision: Option<i64>) -> Self {
        let names: Vec<&str> = base.iter().map(AsRef::as_ref).collect();
        let l = chain.length();
        let ctx = DGContext::new(l, &names);
        let base = simplex_context_like(0, &ctx);
        ChainAlgebra {
            chain,
            ctx,
            base,
            precision: precision.unwrap_or(DEFAULT_CHAIN_PRECISION),
        }
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Forms on the base alone, where `∫_Δ` lands.
    pub fn base_ctx(&self) -> &Ctx {
        &self.base
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// A Laurent polynomial in the base coordinates as a function here.
    pub fn function(&self, p: &MultiPoly) -> DiffForm {
        let l = self.ctx.simplex_dim();
        let positions: Vec<usize> = (0..p.nvars()).map(|i| l + i).collect();
        DiffForm::function(&self.ctx, self.ctx.series(p.embed(self.ctx.nvars(), &positions)))
    }

    /// A series in the base coordinates (graded from 0) as a function here.
    pub fn series(&self, s: &LaurentSeries) -> DiffForm {
        let l = self.ctx.simplex_dim();
        let positions: Vec<usize> = (0..s.nvars()).map(|i| l + i).collect();
        let poly = s.poly().embed(self.ctx.nvars(), &positions);
        DiffForm::function(&self.ctx, LaurentSeries::with_precision(poly, l, s.precision()))
    }

    /// The base 1-form `Σ c_j df_j`.
    pub fn one_form(&self, coeffs: &[LaurentSeries]) -> DiffForm {
        coeffs
            .iter()
            .enumerate()
            .fold(self.ctx.zero(), |acc, (j, c)| acc.add(&self.series(c).w(&self.ctx.df(j))))
    }

    pub fn matrix(&self, m: &Matrix<MultiPoly>) -> FormMatrix {
        m.map(|p| self.function(p))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.chain.labels.iter().position(|x| x == label)
    }

    /// `Σ t_i u_{(x_i)}` for a family of forms indexed by point label.
    pub fn covertex_lift(&self, u: &BTreeMap<String, DiffForm>) -> Result<DiffForm> {
        let mut acc = self.ctx.zero();
        for (i, x) in self.chain.labels.iter().enumerate() {
            let ux = u.get(x).ok_or_else(|| Error::MissingPoint(x.clone()))?;
            acc = acc.add(&self.ctx.t(i).w(ux));
        }
        Ok(acc)
    }
}

/// For each point `x`, the matrix `g_x` expressing the local frame `e_(x)`
/// in a fixed reference frame: `e_(x) = g_x · e_ref`.
#[derive(Clone, Debug)]
pub struct AdelicFrame {
    base: Vec<String>,
    rank: usize,
    frames: BTreeMap<String, Matrix<MultiPoly>>,
}

impl AdelicFrame {
    pub fn new<S: AsRef<str>>(base: &[S], rank: usize) -> Self {
        AdelicFrame {
            base: base.iter().map(|s| s.as_ref().to_string()).collect(),
            rank,
            frames: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> impl Iterator<Item = &String> {
        self.frames.keys()
    }

    pub fn get(&self, label: &str) -> Option<&Matrix<MultiPoly>> {
        self.frames.get(label)
    }

    pub fn insert(&mut self, label: &str, g: Matrix<MultiPoly>) -> Result<()> {
        if g.rows() != self.rank || g.cols() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "frame at {label} is {}x{}, expected rank {}",
                g.rows(),
                g.cols(),
                self.rank
            )));
        }
        if g.entries().any(|p| p.nvars() != self.base.len()) {
            return Err(Error::DimensionMismatch(format!("frame at {label} has the wrong variables")));
        }
        self.frames.insert(label.to_string(), g);
        Ok(())
    }

    pub fn with(mut self, label: &str, g: Matrix<MultiPoly>) -> Result<Self> {
        self.insert(label, g)?;
        Ok(self)
    }

    pub fn parse_matrix<S: AsRef<str>>(&self, rows: &[Vec<S>]) -> Result<Matrix<MultiPoly>> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly_in(s.as_ref(), &self.base)).collect())
            .collect::<Result<Vec<Vec<MultiPoly>>>>()?;
        if parsed.is_empty() || parsed.iter().any(|r| r.len() != parsed.len()) {
            return Err(Error::Parse("frame matrix must be square and nonempty".into()));
        }
        Ok(Matrix::from_rows(parsed))
    }

    pub fn with_parsed<S: AsRef<str>>(self, label: &str, rows: &[Vec<S>]) -> Result<Self> {
        let g = self.parse_matrix(rows)?;
        self.with(label, g)
    }

    /// Rank-1 convenience: `g_x` given as a single expression.
    pub fn with_scalar(self, label: &str, g: &str) -> Result<Self> {
        self.with_parsed(label, &[vec![g]])
    }

    /// Frames of `E ⊗ F`: Kronecker products of the transition matrices.
    pub fn tensor(&self, other: &AdelicFrame) -> Result<AdelicFrame> {
        if self.base != other.base {
            return Err(Error::ContextMismatch);
        }
        let (r, s) = (self.rank, other.rank);
        let mut out = AdelicFrame::new(&self.base, r * s);
        for (label, g) in &self.frames {
            let h = other.get(label).ok_or_else(|| Error::MissingPoint(label.clone()))?;
            let m = Matrix::from_fn(r * s, r * s, |i, j| g.get(i / s, j / s).times(h.get(i % s, j % s)));
            out.insert(label, m)?;
        }
        Ok(out)
    }

    /// Block frames `(g' h ; 0 g'')` of an extension. `off` supplies the
    /// upper-right block per point (zero when absent).
    pub fn extension(
        sub: &AdelicFrame,
        quotient: &AdelicFrame,
        off: &BTreeMap<String, Matrix<MultiPoly>>,
    ) -> Result<AdelicFrame> {
        if sub.base != quotient.base {
            return Err(Error::ContextMismatch);
        }
        let (r1, r2) = (sub.rank, quotient.rank);
        let n = sub.base.len();
        let zero = MultiPoly::zero(n);
        let mut out = AdelicFrame::new(&sub.base, r1 + r2);
        for (label, g1) in &sub.frames {
            let g2 = quotient.get(label).ok_or_else(|| Error::MissingPoint(label.clone()))?;
            let h = match off.get(label) {
                Some(h) if h.rows() == r1 && h.cols() == r2 => h.clone(),
                Some(_) => return Err(Error::DimensionMismatch(format!("off-diagonal block at {label}"))),
                None => Matrix::filled(r1, r2, zero.clone()),
            };
            let lower = Matrix::filled(r2, r1, zero.clone());
            out.insert(label, Matrix::blocks(g1, &h, &lower, g2))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{pullback_along, DeltaMorphism};

    #[test]
    fn chain_parsing() {
        let c = Chain::parse("generic, z").unwrap();
        assert_eq!(c.length(), 1);
        assert!(Chain::parse("x,x").is_err());
        assert!(Chain::parse("").is_err());
    }

    #[test]
    fn covertex_lift_examples() {
        let alg = ChainAlgebra::new(Chain::parse("x,y").unwrap(), &["f"], None);
        let ctx = alg.ctx().clone();
        let c = ctx.parse_form0("5*f").unwrap();
        let u: BTreeMap<String, DiffForm> = [("x".to_string(), c.clone()), ("y".to_string(), c.clone())].into();
        assert_eq!(alg.covertex_lift(&u).unwrap(), c);
        let (a, b) = (ctx.parse_form0("f^2").unwrap(), ctx.parse_form0("3").unwrap());
        let u: BTreeMap<String, DiffForm> = [("x".to_string(), a.clone()), ("y".to_string(), b.clone())].into();
        let lift = alg.covertex_lift(&u).unwrap();
        assert_eq!(lift, ctx.t(0).w(&a).add(&ctx.t(1).w(&b)));
        let base = alg.base_ctx();
        for (i, expect) in [(0, "f^2"), (1, "3")] {
            let v = pullback_along(&DeltaMorphism::vertex(1, i), &lift, base).unwrap();
            assert_eq!(v, base.parse_form0(expect).unwrap());
        }
        let partial: BTreeMap<String, DiffForm> = [("x".to_string(), a)].into();
        assert!(matches!(alg.covertex_lift(&partial), Err(Error::MissingPoint(_))));
    }

    #[test]
    fn frame_shapes() {
        let f = AdelicFrame::new(&["f"], 1).with_scalar("x", "f").unwrap();
        assert!(f.clone().with_parsed("y", &[vec!["1", "0"], vec!["0", "1"]]).is_err());
        let t = f.tensor(&f).unwrap();
        assert_eq!(t.get("x").unwrap().get(0, 0), &MultiPoly::var(1, 0).pow(2));
    }
}
