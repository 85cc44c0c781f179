//! Exact rational arithmetic, polynomials, truncated series and linear algebra.

pub mod laurent;
pub mod length;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;

pub use laurent::LaurentSeries;
pub use length::{artinian_length, DEFAULT_LENGTH_CAP};
pub use matrix::{Echelon, QMatrix, SparseRow};
pub use parse::{parse_poly, parse_poly_in, parse_polynomial};
pub use poly::{Monomial, MultiPoly};
pub use rational::{binomial, factorial, factorial_q, fmt_rational, parse_rational, q, qf, sign_pow, Rational};
pub use ring::{eval_in, permutations, subsets, Matrix, Ring, UniPoly};
pub use series::TruncatedSeries;
