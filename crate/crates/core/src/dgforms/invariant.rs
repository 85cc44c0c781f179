//! Matrices of forms, curvature, invariant polynomials and transgression.

use num_traits::One;

use super::form::DiffForm;
use crate::error::{Error, Result};
use crate::exactalg::{
    eval_in, factorial_q, parse_polynomial, q, subsets, Matrix, Monomial, MultiPoly, Rational,
    Ring, UniPoly,
};

pub type FormMatrix = Matrix<DiffForm>;

/// `dθ − θ·θ`.
pub fn matrix_curvature(theta: &FormMatrix) -> Result<FormMatrix> {
    if let Some(bad) = theta.entries().find(|e| !e.is_zero() && e.degree() != Some(1)) {
        return Err(Error::DegreeError(format!(
            "connection entry {} is not a 1-form",
            bad.render()
        )));
    }
    Ok(theta.map(DiffForm::d).sub(&theta.mul(theta)))
}

/// Entrywise exterior derivative.
pub fn matrix_d(m: &FormMatrix) -> FormMatrix {
    m.map(DiffForm::d)
}

/// A polynomial in the elementary invariants `c1 = tr, …, cr = det`,
/// homogeneous of weighted degree `degree` (`c_i` has weight `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPolynomial {
    poly: MultiPoly,
    degree: u32,
}

impl InvariantPolynomial {
    pub fn new(poly: MultiPoly) -> Result<Self> {
        if !poly.is_polynomial() {
            return Err(Error::Parse("invariant polynomial with negative powers".into()));
        }
        let weight = |m: &Monomial| -> u32 {
            m.0.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e as u32).sum()
        };
        let degrees: Vec<u32> = poly.terms().map(|(m, _)| weight(m)).collect();
        let degree = degrees.first().copied().unwrap_or(0);
        if degrees.iter().any(|&d| d != degree) {
            return Err(Error::DegreeError(format!(
                "{} is not homogeneous",
                poly.render(&names(poly.nvars()))
            )));
        }
        Ok(InvariantPolynomial { poly, degree })
    }

    /// `c_i` alone.
    pub fn elementary(i: usize) -> Self {
        Self::new(MultiPoly::var(i, i - 1)).expect("homogeneous")
    }

    /// Parse an expression in `c1, c2, …`.
    pub fn parse(src: &str) -> Result<Self> {
        let max = src
            .split(|c: char| !c.is_alphanumeric())
            .filter_map(|w| w.strip_prefix('c').and_then(|n| n.parse::<usize>().ok()))
            .max()
            .unwrap_or(1)
            .max(1);
        let vars = names(max);
        let v: Vec<&str> = vars.iter().map(String::as_str).collect();
        Self::new(parse_polynomial(src, &v)?)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn render(&self) -> String {
        self.poly.render(&names(self.poly.nvars()))
    }

    fn eval_on_invariants<R: Ring>(&self, invariants: &[R], sample: &R) -> R {
        let vals: Vec<R> = (0..self.poly.nvars())
            .map(|i| invariants.get(i).cloned().unwrap_or_else(|| sample.zero_like()))
            .collect();
        eval_in(&self.poly, &vals, sample)
    }

    /// Evaluate on a matrix with commuting entries.
    pub fn eval_ring<R: Ring>(&self, m: &Matrix<R>) -> R {
        let sample = m.get(0, 0).clone();
        self.eval_on_invariants(&m.elementary_invariants(), &sample)
    }

    /// The same polynomial written in power sums `p_k = tr M^k`,
    /// `k = 1..degree`.
    pub fn in_power_sums(&self) -> MultiPoly {
        let m = (self.degree as usize).max(self.poly.nvars()).max(1);
        // Newton: k e_k = Σ_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
        let mut e: Vec<MultiPoly> = vec![MultiPoly::one(m)];
        for k in 1..=m {
            let mut acc = MultiPoly::zero(m);
            for i in 1..=k {
                let term = &e[k - i] * &MultiPoly::var(m, i - 1);
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            e.push(acc.scale(&(Rational::one() / q(k as i64))));
        }
        self.poly.compose(&e[1..=self.poly.nvars()])
    }
}

fn names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("c{i}")).collect()
}

fn check_even(m: &FormMatrix) -> Result<()> {
    if m.entries().all(DiffForm::has_only_even_terms) {
        Ok(())
    } else {
        Err(Error::OddEntries)
    }
}

/// `P(M)` via the elementary invariants `P_i(M)`, the coefficients of
/// `det(1 + τM)`.
pub fn invariant_eval(p: &InvariantPolynomial, m: &FormMatrix) -> Result<DiffForm> {
    check_even(m)?;
    Ok(p.eval_ring(m))
}

/// Symmetric multilinear form with `P̃(M, …, M) = P(M)`, by
/// inclusion–exclusion over subsets of the arguments.
pub fn polarize(p: &InvariantPolynomial, args: &[FormMatrix]) -> Result<DiffForm> {
    let m = p.degree() as usize;
    if args.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "{} arguments for a polynomial of degree {m}",
            args.len()
        )));
    }
    for a in args {
        check_even(a)?;
    }
    let sample = args[0].get(0, 0).clone();
    let mut acc = sample.zero_like();
    for k in 1..=m {
        for s in subsets(m, k) {
            let mut sum = args[s[0]].clone();
            for &i in &s[1..] {
                sum = sum.add(&args[i]);
            }
            let v = p.eval_ring(&sum);
            acc = if (m - k) % 2 == 0 { acc.add(&v) } else { acc.sub(&v) };
        }
    }
    Ok(acc.scale(&(Rational::one() / factorial_q(m as u64))))
}

/// `TP(θ) = m ∫₀¹ P̃(θ, Θ_s, …, Θ_s) ds` with `Θ_s = s·dθ − s²·θθ`, so that
/// `d TP(θ) = P(Θ)`. The polarization is expanded through power sums:
/// `m P̃(θ, F, …, F) = Σ_k k (∂Q/∂p_k)(F) tr(θ F^{k−1})`.
pub fn transgression(p: &InvariantPolynomial, theta: &FormMatrix) -> Result<DiffForm> {
    let curvature = matrix_curvature(theta)?;
    let sample = theta.get(0, 0).clone();
    let m = p.degree() as usize;
    if m == 0 {
        return Ok(sample.zero_like());
    }
    let max_s = 2 * m;
    let lift = |x: &DiffForm| UniPoly::constant(x.clone(), max_s);
    let dtheta = matrix_d(theta);
    let theta2 = theta.mul(theta);
    let f_s: Matrix<UniPoly<DiffForm>> = dtheta.zip_map(&theta2, |a, b| {
        let mut u = UniPoly::constant(sample.zero_like(), max_s);
        u.coeffs = vec![sample.zero_like(), a.clone(), b.neg()];
        u
    });
    let theta_s = theta.map(lift);
    let qpoly = p.in_power_sums();
    let s_sample = UniPoly::constant(sample.clone(), max_s);

    let mut f_pow: Vec<Matrix<UniPoly<DiffForm>>> =
        vec![Matrix::identity_like(theta.rows(), &s_sample)];
    for k in 1..=qpoly.nvars() {
        let next = f_pow[k - 1].mul(&f_s);
        f_pow.push(next);
    }
    let power_sums: Vec<UniPoly<DiffForm>> = (1..=qpoly.nvars()).map(|k| f_pow[k].trace()).collect();

    let mut integrand = s_sample.zero_like();
    for k in 1..=qpoly.nvars() {
        let dq = qpoly.derivative(k - 1);
        if dq.is_zero() {
            continue;
        }
        let scalar = eval_in(&dq, &power_sums, &s_sample);
        let tr = theta_s.mul(&f_pow[k - 1]).trace();
        integrand = integrand.plus(&scalar.times(&tr).scaled(&q(k as i64)));
    }
    let mut out = sample.zero_like();
    for (j, c) in integrand.coeffs.iter().enumerate() {
        out = out.add(&c.scale(&(Rational::one() / q(j as i64 + 1))));
    }
    if cfg!(debug_assertions) && out.precision().is_none() {
        debug_assert_eq!(out.d(), p.eval_ring(&curvature), "transgression identity");
    }
    Ok(out)
}

/// `tr exp Θ = Σ_k tr Θ^k / k!`, stopping once the powers vanish.
pub fn chern_character(theta: &FormMatrix) -> Result<DiffForm> {
    check_even(theta)?;
    let sample = theta.get(0, 0).clone();
    let mut power = Matrix::identity_like(theta.rows(), &sample);
    let mut acc = power.trace();
    let limit = sample.ctx().nvars() + 1;
    for k in 1..=limit {
        power = power.mul(theta);
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power.trace().scale(&(Rational::one() / factorial_q(k as u64))));
    }
    Ok(acc)
}

/// `Σ_i P_i(M) τ^i`, the total invariant `det(1 + τM)` as a polynomial in `τ`.
pub fn total_invariant(m: &FormMatrix) -> Result<Vec<DiffForm>> {
    check_even(m)?;
    let sample = m.get(0, 0).clone();
    let mut out = vec![sample.one_like()];
    out.extend(m.elementary_invariants());
    Ok(out)
}
