//! Bott local invariants at isolated zeros, the simple-zero closed form,
//! the residue-equals-length identity and coordinate independence.

use num_traits::Zero;
use serde::Serialize;

use super::fraction::{residue_general, GeneralizedFraction, DEFAULT_MEMBERSHIP_CAP};
use crate::dgforms::InvariantPolynomial;
use crate::error::{Error, Result};
use crate::exactalg::{
    artinian_length, fmt_rational, parse_poly, sign_pow, Matrix, Rational, TruncatedSeries,
    DEFAULT_LENGTH_CAP,
};

/// `max(2·n·cap, requested)`.
pub fn working_precision(n: usize, requested: Option<u32>) -> u32 {
    (2 * n as u32 * DEFAULT_MEMBERSHIP_CAP).max(requested.unwrap_or(0))
}

/// An isolated zero `z` of `v = Σ a_i ∂/∂f_i` together with a lift of `Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalZeroData {
    pub label: String,
    pub coords: Vec<String>,
    pub a: Vec<TruncatedSeries>,
    pub lambda: Matrix<TruncatedSeries>,
    /// `dim k[[f]]/(a)`.
    pub length: usize,
}

impl LocalZeroData {
    pub fn new(
        label: &str,
        coords: Vec<String>,
        a: Vec<TruncatedSeries>,
        lambda: Matrix<TruncatedSeries>,
    ) -> Result<Self> {
        let n = coords.len();
        if a.len() != n || a.iter().any(|s| s.nvars() != n) {
            return Err(Error::DimensionMismatch(format!("{} field components for {n} coordinates", a.len())));
        }
        if !lambda.is_square() || lambda.rows() == 0 || lambda.entries().any(|s| s.nvars() != n) {
            return Err(Error::DimensionMismatch("lambda must be a nonempty square matrix".into()));
        }
        let length = artinian_length(&a, DEFAULT_LENGTH_CAP)?;
        Ok(LocalZeroData {
            label: label.to_string(),
            coords,
            a,
            lambda,
            length,
        })
    }

    pub fn parse<S: AsRef<str>>(
        label: &str,
        coords: &[S],
        a: &[S],
        lambda: &[Vec<S>],
        precision: u32,
    ) -> Result<Self> {
        let names: Vec<&str> = coords.iter().map(AsRef::as_ref).collect();
        let series = |src: &str| -> Result<TruncatedSeries> {
            TruncatedSeries::new(parse_poly(src, &names)?, precision)
        };
        let a = a.iter().map(|s| series(s.as_ref())).collect::<Result<Vec<_>>>()?;
        let rows = lambda
            .iter()
            .map(|r| r.iter().map(|s| series(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::Parse("lambda must be square".into()));
        }
        let coords = names.iter().map(|s| s.to_string()).collect();
        Self::new(label, coords, a, Matrix::from_rows(rows))
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn r(&self) -> usize {
        self.lambda.rows()
    }

    /// `Λ` evaluated at `z`.
    pub fn lambda_at_zero(&self) -> Matrix<Rational> {
        self.lambda.map(|s| s.constant_term())
    }

    /// `(∂a_i/∂f_j)(z)`.
    pub fn jacobian_at_zero(&self) -> Matrix<Rational> {
        let n = self.n();
        Matrix::from_fn(n, n, |i, j| {
            let mut e = vec![0; n];
            e[j] = 1;
            self.a[i].coeff(&e)
        })
    }
}

fn degree_check(p: &InvariantPolynomial, n: usize) -> Result<()> {
    if p.degree() as usize != n {
        return Err(Error::DegreeMismatch(format!(
            "polynomial of degree {} at a zero in dimension {n}",
            p.degree()
        )));
    }
    Ok(())
}

/// The fraction `[P' df / a]` with `P' = P(Λ-lift)`.
pub fn invariant_fraction(p: &InvariantPolynomial, zd: &LocalZeroData) -> Result<GeneralizedFraction> {
    degree_check(p, zd.n())?;
    GeneralizedFraction::new(p.eval_ring(&zd.lambda), zd.a.clone())
}

/// `P(v, E, z) = (−1)^{binom(n+1,2)} Res[P' df_1∧…∧df_n / a_1, …, a_n]`.
pub fn local_invariant(p: &InvariantPolynomial, zd: &LocalZeroData) -> Result<Rational> {
    let n = zd.n() as u64;
    let gf = invariant_fraction(p, zd)?;
    Ok(sign_pow(n * (n + 1) / 2) * residue_general(&gf)?)
}

/// Bott's formula `(−1)^{binom(n,2)} P(Λ(z)) / det(ad v)` with
/// `ad v = −(∂a_i/∂f_j)^t`.
pub fn simple_zero_invariant(p: &InvariantPolynomial, zd: &LocalZeroData) -> Result<Rational> {
    degree_check(p, zd.n())?;
    if zd.length != 1 {
        return Err(Error::NotSimple(zd.length));
    }
    let n = zd.n() as u64;
    let ad = zd.jacobian_at_zero().transpose().neg();
    let det = ad.det();
    if det.is_zero() {
        return Err(Error::NotSimple(zd.length));
    }
    Ok(sign_pow(n * (n.saturating_sub(1)) / 2) * p.eval_ring(&zd.lambda_at_zero()) / det)
}

/// `(Res[da_1∧…∧da_n / a_1, …, a_n], dim k[[f]]/(a))`.
pub fn gauss_bonnet_local(a: &[TruncatedSeries]) -> Result<(Rational, usize)> {
    let n = a.len();
    if n == 0 || a.iter().any(|s| s.nvars() != n) {
        return Err(Error::DimensionMismatch(format!("{n} series must live in {n} variables")));
    }
    let jac = Matrix::from_fn(n, n, |i, j| a[i].derivative(j));
    let gf = GeneralizedFraction::new(jac.det(), a.to_vec())?;
    let res = residue_general(&gf)?;
    let len = artinian_length(a, DEFAULT_LENGTH_CAP)?;
    Ok((res, len))
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordinateChange {
    pub before: String,
    pub after: String,
    pub holds: bool,
}

/// Rewrite the zero in coordinates `g` with `f_i = φ_i(g)`: `a ∘ φ = J b`
/// for `J = (∂f_i/∂g_j)`, and `Λ` is pulled back.
pub fn change_coordinates(zd: &LocalZeroData, phi: &[TruncatedSeries]) -> Result<LocalZeroData> {
    let n = zd.n();
    if phi.len() != n || phi.iter().any(|s| s.nvars() != n) {
        return Err(Error::NotInvertibleChange(format!("{} images for {n} coordinates", phi.len())));
    }
    if phi.iter().any(|s| !s.constant_term().is_zero()) {
        return Err(Error::NotInvertibleChange("the change must fix the origin".into()));
    }
    let jac = Matrix::from_fn(n, n, |i, j| phi[i].derivative(j));
    let det = jac.det();
    if det.constant_term().is_zero() {
        return Err(Error::NotInvertibleChange("Jacobian is singular at the origin".into()));
    }
    let inv_det = det.invert()?;
    let jinv = jac.adjugate().map(|e| e.mul(&inv_det));
    let composed = zd.a.iter().map(|s| s.compose(phi)).collect::<Result<Vec<_>>>()?;
    let column = Matrix::from_fn(n, 1, |i, _| composed[i].clone());
    let b = jinv.mul(&column);
    let lambda = zd.lambda.try_map(|s| s.compose(phi))?;
    let coords = (1..=n).map(|i| format!("g{i}")).collect();
    LocalZeroData::new(&zd.label, coords, (0..n).map(|i| b.get(i, 0).clone()).collect(), lambda)
}

/// The local invariant before and after a formal change of coordinates.
pub fn coordinate_change_check(
    p: &InvariantPolynomial,
    zd: &LocalZeroData,
    phi: &[TruncatedSeries],
) -> Result<CoordinateChange> {
    let before = local_invariant(p, zd)?;
    let after = local_invariant(p, &change_coordinates(zd, phi)?)?;
    Ok(CoordinateChange {
        before: fmt_rational(&before),
        after: fmt_rational(&after),
        holds: before == after,
    })
}
