#![allow(dead_code)]

use proptest::prelude::*;

use acw_core::exactalg::{qf, Monomial, MultiPoly, Rational, TruncatedSeries};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| qf(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-6i64..=-1, 1i64..=6], 1i64..=3).prop_map(|(n, d)| qf(n, d))
}

/// Polynomial in `nvars` variables, each exponent `<= max_exp`.
pub fn poly(nvars: usize, max_exp: i32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), small_rational()), 0..=max_terms)
        .prop_map(move |terms| MultiPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (Monomial(e), c))))
}

/// Polynomial with every term of total degree in `lo..=hi`.
pub fn poly_in_degrees(nvars: usize, lo: i64, hi: i64, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    poly(nvars, hi as i32, max_terms).prop_map(move |p| p.filtered(|m| (lo..=hi).contains(&m.degree())))
}

pub fn series(p: MultiPoly, precision: u32) -> TruncatedSeries {
    TruncatedSeries::new(p, precision).expect("polynomial series")
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
