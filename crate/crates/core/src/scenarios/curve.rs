//! `∫_X c_1 = Σ_ξ Res_ξ c_1(E; ∇)_ξ` on the projective line, summed over
//! the chains `(generic point, z)`.

use serde::Serialize;

use super::model::{CurvePoint, CurveSpec};
use crate::adelic::{chern_form_component, mixed_connection, AdelicFrame, Chain, ChainAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, parse_poly, parse_rational, Matrix, Monomial, MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Finite(Rational),
    Infinity,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainResidue {
    pub point: String,
    /// `c_1` on the chain in the local coordinate `u` at the point.
    pub component: String,
    pub residue: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveReport {
    pub chains: Vec<ChainResidue>,
    pub total: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub passed: bool,
    #[serde(skip)]
    pub value: Rational,
}

struct Parsed {
    label: String,
    place: Option<Place>,
    num: MultiPoly,
    den: MultiPoly,
}

fn place_of(p: &CurvePoint) -> Result<Option<Place>> {
    match p.at.as_deref() {
        None => Ok(None),
        Some("inf") | Some("infinity") => Ok(Some(Place::Infinity)),
        Some(s) => Ok(Some(Place::Finite(parse_rational(s)?))),
    }
}

/// Clears negative powers of the coordinate from `num / den`.
fn as_polynomials(mut num: MultiPoly, mut den: MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    if den.is_zero() || num.is_zero() {
        return Err(Error::NonInvertibleFrame("zero frame".into()));
    }
    let low = |p: &MultiPoly| p.terms().map(|(m, _)| m.0[0]).min().unwrap_or(0);
    let shift = (-low(&num)).max(-low(&den)).max(0);
    if shift > 0 {
        let m = Monomial(vec![shift]);
        num = num.mul_monomial(&m);
        den = den.mul_monomial(&m);
    }
    Ok((num, den))
}

/// The polynomial in `x` rewritten in the local coordinate `u` at the place.
fn localize(p: &MultiPoly, place: &Place) -> MultiPoly {
    match place {
        Place::Finite(c) => {
            let shift = &MultiPoly::var(1, 0) + &MultiPoly::constant(1, c.clone());
            p.compose(&[shift])
        }
        Place::Infinity => MultiPoly::from_terms(1, p.terms().map(|(m, c)| (Monomial(vec![-m.0[0]]), c.clone()))),
    }
}

fn order_at(p: &MultiPoly, place: &Place) -> i64 {
    match place {
        Place::Finite(_) => localize(p, place).min_degree().unwrap_or(0),
        Place::Infinity => -p.max_degree().unwrap_or(0),
    }
}

/// `c_1` of the rank-1 chain `(generic, z)` with frames `(g_η, g_z)`, in `u`.
fn chain_c1(generic: &str, point: &str, g_eta: MultiPoly, g_z: MultiPoly, precision: Option<i64>) -> Result<crate::dgforms::DiffForm> {
    let alg = ChainAlgebra::new(Chain::new(&[generic, point])?, &["u"], precision);
    let frame = AdelicFrame::new(&["u"], 1)
        .with(generic, Matrix::from_rows(vec![vec![g_eta]]))?
        .with(point, Matrix::from_rows(vec![vec![g_z]]))?;
    let conn = mixed_connection(&frame, &alg)?;
    chern_form_component(1, &conn, &alg)
}

pub fn curve_adelic_integral(spec: &CurveSpec, precision: Option<i64>) -> Result<CurveReport> {
    let vars = [spec.coordinate.as_str()];
    let mut points = Vec::with_capacity(spec.points.len());
    for p in &spec.points {
        let num = parse_poly(&p.frame, &vars)?;
        let den = match &p.over {
            Some(s) => parse_poly(s, &vars)?,
            None => MultiPoly::one(1),
        };
        let (num, den) = as_polynomials(num, den)?;
        points.push(Parsed { label: p.label.clone(), place: place_of(p)?, num, den });
    }
    let generic: Vec<&Parsed> = points.iter().filter(|p| p.place.is_none()).collect();
    let [eta] = generic.as_slice() else {
        return Err(Error::Parse("a curve needs exactly one generic point".into()));
    };
    let closed: Vec<&Parsed> = points.iter().filter(|p| p.place.is_some()).collect();

    // Every zero and pole of the generic frame must sit at a listed point.
    for part in [&eta.num, &eta.den] {
        let deg = part.max_degree().unwrap_or(0);
        let covered: i64 = closed
            .iter()
            .filter_map(|p| match &p.place {
                Some(pl @ Place::Finite(_)) => Some(order_at(part, pl)),
                _ => None,
            })
            .sum();
        if covered != deg {
            return Err(Error::MissingPoint(format!(
                "the generic frame has a zero or pole at a point missing from the curve data ({covered} of {deg})"
            )));
        }
    }
    let at_inf = order_at(&eta.num, &Place::Infinity) - order_at(&eta.den, &Place::Infinity);
    if at_inf != 0 && !closed.iter().any(|p| p.place == Some(Place::Infinity)) {
        return Err(Error::PoleAtInfinityUnhandled(format!(
            "generic frame has order {at_inf} at infinity"
        )));
    }

    let mut chains = Vec::with_capacity(closed.len());
    let mut total = Rational::from_integer(0.into());
    for z in closed {
        let place = z.place.as_ref().expect("closed point");
        // c_1 is additive in the frame, so numerator and denominator are
        // handled as separate line bundles.
        let top = chain_c1(&eta.label, &z.label, localize(&eta.num, place), localize(&z.num, place), precision)?;
        let bottom = chain_c1(&eta.label, &z.label, localize(&eta.den, place), localize(&z.den, place), precision)?;
        let c1 = top.sub(&bottom);
        let du = c1.ctx().df(0);
        let mask = du.terms().next().map(|(m, _)| m).expect("du is a basis form");
        let residue = c1.coefficient(mask).coeff(&Monomial(vec![-1]))?;
        chains.push(ChainResidue {
            point: z.label.clone(),
            component: c1.render(),
            residue: fmt_rational(&residue),
        });
        total += residue;
    }
    let expected = spec.expected.as_deref().map(parse_rational).transpose()?;
    Ok(CurveReport {
        chains,
        total: fmt_rational(&total),
        expected: expected.as_ref().map(fmt_rational),
        passed: expected.as_ref().map_or(true, |e| *e == total),
        value: total,
    })
}
