//! Sum of local invariants over the zeros of a scenario.

use serde::Serialize;

use super::model::Scenario;
use crate::dgforms::InvariantPolynomial;
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, sign_pow, Rational};
use crate::residues::{invariant_fraction, local_invariant, simple_zero_invariant};

#[derive(Clone, Debug, Serialize)]
pub struct ZeroContribution {
    pub label: String,
    pub length: usize,
    pub fraction: String,
    pub invariant: String,
    /// Bott's closed form, at simple zeros only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<String>,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BottReport {
    pub scenario: String,
    pub poly: String,
    pub zeros: Vec<ZeroContribution>,
    /// `Σ_z P(v, E, z)` with the sign of the local invariant as defined.
    pub local_sum: String,
    /// `(−1)^{binom(n,2)}` times the local sum.
    pub chern_number: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub passed: bool,
    #[serde(skip)]
    pub value: Rational,
}

/// Sign relating the sum of local invariants to `∫_X P(E)`.
pub fn orientation_sign(n: usize) -> Rational {
    let n = n as u64;
    sign_pow(n * n.saturating_sub(1) / 2)
}

pub fn bott_sum(scn: &Scenario, p: &InvariantPolynomial) -> Result<BottReport> {
    if p.degree() as usize != scn.n {
        return Err(Error::DegreeMismatch(format!(
            "{} has degree {}, the scenario has dimension {}",
            p.render(),
            p.degree(),
            scn.n
        )));
    }
    let mut zeros = Vec::with_capacity(scn.zeros.len());
    let mut sum = Rational::from_integer(0.into());
    for z in &scn.zeros {
        let gf = invariant_fraction(p, z)?;
        let inv = local_invariant(p, z)?;
        let simple = if z.length == 1 { Some(simple_zero_invariant(p, z)?) } else { None };
        let agrees = simple.as_ref().map_or(true, |s| *s == inv);
        zeros.push(ZeroContribution {
            label: z.label.clone(),
            length: z.length,
            fraction: gf.render(&z.coords),
            invariant: fmt_rational(&inv),
            simple: simple.as_ref().map(fmt_rational),
            agrees,
        });
        sum += inv;
    }
    let value = orientation_sign(scn.n) * &sum;
    let passed = zeros.iter().all(|z| z.agrees) && scn.expected.as_ref().map_or(true, |e| *e == value);
    Ok(BottReport {
        scenario: scn.name.clone(),
        poly: p.render(),
        zeros,
        local_sum: fmt_rational(&sum),
        chern_number: fmt_rational(&value),
        expected: scn.expected.as_ref().map(fmt_rational),
        passed,
        value,
    })
}
