//! Generalized fractions `[g df_1∧…∧df_n / a_1, …, a_n]` and their residues.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::poly::monomials_below;
use crate::exactalg::{Matrix, Monomial, QMatrix, Rational, SparseRow, TruncatedSeries};

/// Largest power `N` tried in the membership search `f_i^N ∈ (a)`.
pub const DEFAULT_MEMBERSHIP_CAP: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedFraction {
    pub numerator: TruncatedSeries,
    pub denominators: Vec<TruncatedSeries>,
}

impl GeneralizedFraction {
    pub fn new(numerator: TruncatedSeries, denominators: Vec<TruncatedSeries>) -> Result<Self> {
        let n = numerator.nvars();
        if denominators.len() != n || denominators.iter().any(|a| a.nvars() != n) {
            return Err(Error::DimensionMismatch(format!(
                "{} denominators over {n} coordinates",
                denominators.len()
            )));
        }
        if n == 0 {
            return Err(Error::DimensionMismatch("no coordinates".into()));
        }
        if let Some(a) = denominators.iter().find(|a| !a.constant_term().is_zero()) {
            return Err(Error::NotAUnit(format!(
                "denominator with constant term {}",
                a.constant_term()
            )));
        }
        Ok(GeneralizedFraction { numerator, denominators })
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    /// Exchange two denominators; the sign moves to the numerator.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut denominators = self.denominators.clone();
        denominators.swap(i, j);
        let numerator = if i == j { self.numerator.clone() } else { self.numerator.neg() };
        GeneralizedFraction { numerator, denominators }
    }

    pub fn render(&self, names: &[impl AsRef<str>]) -> String {
        let top: Vec<String> = names.iter().map(|v| format!("d {}", v.as_ref())).collect();
        let dens: Vec<String> = self.denominators.iter().map(|a| a.render(names)).collect();
        format!("[ {} {} / {} ]", self.numerator.render(names), top.join("^"), dens.join(", "))
    }

    pub fn render_default(&self) -> String {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("f{i}")).collect();
        self.render(&names)
    }

    /// `(i_1..i_n, c_1⋯c_n)` when each `a_j = c_j f_j^{i_j}`.
    pub fn monomial_denominators(&self) -> Option<(Vec<u32>, Rational)> {
        let mut exps = Vec::with_capacity(self.nvars());
        let mut scale = Rational::from_integer(1.into());
        for (j, a) in self.denominators.iter().enumerate() {
            let (m, c) = a.poly().as_monomial()?;
            if m.0.iter().enumerate().any(|(k, &e)| (k == j) != (e > 0)) {
                return None;
            }
            exps.push(m.0[j] as u32);
            scale *= c;
        }
        Some((exps, scale))
    }
}

/// Residue of a fraction whose denominators are `c_j f_j^{i_j}`: the
/// coefficient of `f^{i−1}` in the numerator, divided by `Π c_j`.
pub fn residue_monomial(gf: &GeneralizedFraction) -> Result<Rational> {
    let (exps, scale) = gf
        .monomial_denominators()
        .ok_or_else(|| Error::DegreeMismatch("denominators are not coordinate powers".into()))?;
    for (a, &i) in gf.denominators.iter().zip(&exps) {
        if a.precision() <= i {
            return Err(Error::PrecisionExhausted {
                needed: i as i64 + 1,
                available: a.precision() as i64,
            });
        }
    }
    let needed: u32 = exps.iter().map(|i| i - 1).sum::<u32>() + 1;
    if gf.numerator.precision() < needed {
        return Err(Error::PrecisionExhausted {
            needed: needed as i64,
            available: gf.numerator.precision() as i64,
        });
    }
    let at: Vec<u32> = exps.iter().map(|i| i - 1).collect();
    Ok(gf.numerator.coeff(&at) / scale)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueOptions {
    pub cap: u32,
    /// Recompute with `N + 1` and demand the same value.
    pub recheck: bool,
}

impl Default for ResidueOptions {
    fn default() -> Self {
        ResidueOptions {
            cap: DEFAULT_MEMBERSHIP_CAP,
            recheck: cfg!(debug_assertions),
        }
    }
}

/// Truncation degree at which a solution of `f^N ≡ M a mod m^W` both
/// implies `f^N ∈ (a)` and fixes the residue.
pub fn membership_precision(n: usize, power: u32) -> u32 {
    2 * n as u32 * (power - 1) + 2
}

pub fn residue_general(gf: &GeneralizedFraction) -> Result<Rational> {
    residue_general_with(gf, &ResidueOptions::default())
}

/// Transformation law: find `N` and `M` with `f_i^N = Σ_j M_ij a_j`, then
/// take the residue of `g det(M)` over `f_1^N, …, f_n^N`.
pub fn residue_general_with(gf: &GeneralizedFraction, opts: &ResidueOptions) -> Result<Rational> {
    if gf.monomial_denominators().is_some() {
        if let Ok(r) = residue_monomial(gf) {
            return Ok(r);
        }
    }
    for power in 1..=opts.cap {
        let Some(r) = residue_at(gf, power)? else { continue };
        if opts.recheck {
            match residue_at(gf, power + 1) {
                Ok(Some(r2)) if r2 == r => {}
                Ok(other) => {
                    return Err(Error::IdentityFailed {
                        what: format!("residue at N = {} against N = {}", power, power + 1),
                        residual: format!("{r} vs {other:?}"),
                    })
                }
                Err(Error::PrecisionExhausted { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        return Ok(r);
    }
    Err(Error::MembershipNotFound { cap: opts.cap })
}

/// The residue computed through `f^N`, or `None` when `f^N ∉ (a)`.
pub fn residue_at(gf: &GeneralizedFraction, power: u32) -> Result<Option<Rational>> {
    let n = gf.nvars();
    let w = membership_precision(n, power);
    let available = gf.denominators.iter().map(|a| a.precision()).min().unwrap_or(0);
    if available < w {
        return Err(Error::PrecisionExhausted {
            needed: w as i64,
            available: available as i64,
        });
    }
    let needed = n as u32 * (power - 1) + 1;
    if gf.numerator.precision() < needed {
        return Err(Error::PrecisionExhausted {
            needed: needed as i64,
            available: gf.numerator.precision() as i64,
        });
    }
    let Some(m) = membership_matrix(&gf.denominators, power, w)? else {
        return Ok(None);
    };
    let det = m.map(|e| e.with_precision(needed)).det();
    let h = gf.numerator.with_precision(needed).mul(&det);
    Ok(Some(h.coeff(&vec![power - 1; n])))
}

/// `M` with `f_i^N ≡ Σ_j M_ij a_j` modulo terms of degree `>= w`.
pub fn membership_matrix(
    a: &[TruncatedSeries],
    power: u32,
    w: u32,
) -> Result<Option<Matrix<TruncatedSeries>>> {
    let n = a.len();
    let a: Vec<TruncatedSeries> = a.iter().map(|s| s.with_precision(w)).collect();
    let rows = monomials_below(n, w);
    let row_of: BTreeMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    let mut entries: Vec<SparseRow> = vec![Vec::new(); rows.len()];
    for (j, aj) in a.iter().enumerate() {
        let ord = aj.order().unwrap_or(w);
        for m in monomials_below(n, w.saturating_sub(ord)) {
            let col = columns.len();
            for (mono, c) in aj.poly().terms() {
                let prod = mono.mul(&m);
                if let Some(&r) = row_of.get(&prod) {
                    entries[r].push((col, c.clone()));
                }
            }
            columns.push((j, m));
        }
    }
    let system = QMatrix::from_sparse_rows(entries, columns.len());
    let zero = TruncatedSeries::zero(n, w);
    let mut out = Matrix::filled(n, n, zero.clone());
    for i in 0..n {
        let target = TruncatedSeries::var(n, i, w).pow(power);
        let mut rhs = vec![Rational::zero(); rows.len()];
        for (mono, c) in target.poly().terms() {
            rhs[row_of[mono]] = c.clone();
        }
        let Some(x) = system.solve(&rhs)? else {
            return Ok(None);
        };
        for ((j, m), c) in columns.iter().zip(x) {
            if !c.is_zero() {
                let term = TruncatedSeries::new(crate::exactalg::MultiPoly::term(m.clone(), c), w)?;
                let e = out.get(i, *j).add(&term);
                out.set(i, *j, e);
            }
        }
    }
    Ok(Some(out))
}
