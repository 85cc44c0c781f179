//! Polynomial forms on standard simplices: cosimplicial pullback and
//! integration over the simplex.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::delta::DeltaMorphism;
use crate::dgforms::{bits, Ctx, DGContext, DiffForm};
use crate::error::{Error, Result};
use crate::exactalg::{factorial_q, LaurentSeries, Monomial, MultiPoly, Rational};

/// `Ω·(Δ^n)` with base coordinates carried along unchanged.
#[derive(Clone, Debug)]
pub struct SimplexForms {
    n: usize,
    ctx: Ctx,
}

impl SimplexForms {
    pub fn new(n: usize) -> Self {
        SimplexForms {
            n,
            ctx: DGContext::new(n, &[]),
        }
    }

    pub fn over(ctx: &Ctx) -> Self {
        SimplexForms {
            n: ctx.simplex_dim(),
            ctx: ctx.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// `σ^*` for `σ : [m] -> [n]`, landing in `Ω·(Δ^m)` with the same base.
    pub fn pullback(&self, sigma: &DeltaMorphism, alpha: &DiffForm, target: &Ctx) -> Result<DiffForm> {
        pullback_along(sigma, alpha, target)
    }
}

/// Context for `Δ^m` with the base coordinates of `like`.
pub fn simplex_context_like(m: usize, like: &Ctx) -> Ctx {
    let base = like.base_names();
    match like.default_precision() {
        Some(p) => DGContext::with_precision(m, &base, p),
        None => DGContext::new(m, &base),
    }
}

/// Pull back along a substitution of the simplex coordinates. `images[j]`
/// is the image of `t_{j+1}`, a polynomial in the simplex coordinates of
/// `target`; base coordinates map to themselves.
pub fn pullback_simplex(alpha: &DiffForm, target: &Ctx, images: &[MultiPoly]) -> Result<DiffForm> {
    let src = alpha.ctx();
    let (ls, lt) = (src.simplex_dim(), target.simplex_dim());
    if images.len() != ls || src.base_names() != target.base_names() {
        return Err(Error::DimensionMismatch(format!(
            "cannot pull back from Δ^{ls} to Δ^{lt} with {} images",
            images.len()
        )));
    }
    let nt = target.nvars();
    let nb = src.base_dim();
    let d_images: Vec<DiffForm> = images
        .iter()
        .map(|p| DiffForm::function(target, LaurentSeries::exact(p.clone(), lt)).d())
        .collect();
    let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(nt), p.clone()]).collect();
    let mut out = DiffForm::zero(target);
    for (mask, c) in alpha.terms() {
        let mut coeff = MultiPoly::zero(nt);
        for (m, k) in c.poly().terms() {
            let mut e = vec![0i32; nt];
            e[lt..lt + nb].copy_from_slice(&m.0[ls..ls + nb]);
            let mut t = MultiPoly::term(Monomial(e), k.clone());
            for j in 0..ls {
                let p = m.0[j];
                if p < 0 {
                    return Err(Error::DimensionMismatch("negative power of a simplex coordinate".into()));
                }
                let p = p as usize;
                while powers[j].len() <= p {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                if p > 0 {
                    t = &t * &powers[j][p];
                }
            }
            coeff = &coeff + &t;
        }
        let mut form = DiffForm::function(
            target,
            LaurentSeries::with_precision(coeff, lt, c.precision()),
        );
        for i in bits(mask) {
            let g = if i < ls { d_images[i].clone() } else { target.df(i - ls) };
            form = form.w(&g);
        }
        out = out.add(&form);
    }
    Ok(out)
}

/// Images of `t_1..t_n` under `σ_* : Δ^m -> Δ^n`, `t_j ↦ Σ_{σ(i)=j} t_i`.
pub fn cosimplicial_images(sigma: &DeltaMorphism, target: &Ctx) -> Vec<MultiPoly> {
    let n = sigma.target();
    let mut images = vec![MultiPoly::zero(target.nvars()); n];
    for i in 0..=sigma.source() {
        let j = sigma.apply(i);
        if j >= 1 {
            images[j - 1] = &images[j - 1] + &target.t_poly(i);
        }
    }
    images
}

/// `σ^* α` for `σ : [m] -> [n]`.
pub fn pullback_along(sigma: &DeltaMorphism, alpha: &DiffForm, target: &Ctx) -> Result<DiffForm> {
    if alpha.ctx().simplex_dim() != sigma.target() || target.simplex_dim() != sigma.source() {
        return Err(Error::DimensionMismatch(format!(
            "morphism [{}] -> [{}] against forms on Δ^{} and Δ^{}",
            sigma.source(),
            sigma.target(),
            target.simplex_dim(),
            alpha.ctx().simplex_dim()
        )));
    }
    pullback_simplex(alpha, target, &cosimplicial_images(sigma, target))
}

/// `∫_{Δ^l} t^a dt_1…dt_l = ∏ a_i! / (l + Σ a_i)!`.
pub fn dirichlet(exponents: &[i32]) -> Rational {
    let l = exponents.len() as u64;
    let mut num = Rational::one();
    let mut total = 0u64;
    for &a in exponents {
        num *= factorial_q(a as u64);
        total += a as u64;
    }
    num / factorial_q(l + total)
}

/// Integrate the simplex factor: `∫_Δ c·dt_1…dt_l ∧ β = (∫_Δ c) β`. Terms
/// without the full `dt_1…dt_l` contribute nothing. The result lives on
/// `base` (a context with no simplex coordinates and the same base).
pub fn fiber_integral(alpha: &DiffForm, base: &Ctx) -> Result<DiffForm> {
    let src = alpha.ctx();
    let l = src.simplex_dim();
    if base.simplex_dim() != 0 || base.base_names() != src.base_names() {
        return Err(Error::DimensionMismatch("fiber integral target must be the base".into()));
    }
    let top = src.simplex_mask();
    let mut out = DiffForm::zero(base);
    for (mask, c) in alpha.terms() {
        if mask & top != top {
            continue;
        }
        let mut coeff: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, k) in c.poly().terms() {
            let w = dirichlet(&m.0[..l]);
            let entry = coeff.entry(Monomial(m.0[l..].to_vec())).or_insert_with(Rational::zero);
            *entry += k * w;
        }
        let poly = MultiPoly::from_terms(base.nvars(), coeff);
        let series = LaurentSeries::with_precision(poly, 0, c.precision());
        out = out.add(&DiffForm::from_terms(base, [(mask >> l, series)]));
    }
    Ok(out)
}

/// `∫_{Δ^l} α` for a form without base coordinates.
pub fn integrate_over_simplex(alpha: &DiffForm) -> Rational {
    let ctx = alpha.ctx();
    let top = alpha.coefficient(ctx.simplex_mask());
    let l = ctx.simplex_dim();
    top.poly()
        .terms()
        .filter(|(m, _)| m.0[l..].iter().all(|&e| e == 0))
        .map(|(m, k)| k * dirichlet(&m.0[..l]))
        .sum()
}
