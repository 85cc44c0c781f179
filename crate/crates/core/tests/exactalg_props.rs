mod common;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use acw_core::exactalg::{artinian_length, q, MultiPoly, QMatrix, Rational, TruncatedSeries, DEFAULT_LENGTH_CAP};
use common::{nonzero_rational, poly, poly_in_degrees, series, small_rational};

proptest! {
    #![proptest_config(common::config(64))]

    #[test]
    fn rationals_stay_normalized(a in small_rational(), b in nonzero_rational(), c in small_rational()) {
        for x in [&a + &b, &a * &b, &a / &b, &(&a - &c) / &b] {
            prop_assert!(x.denom().is_positive());
            prop_assert!(x.numer().gcd(x.denom()).is_one());
        }
    }

    #[test]
    fn polynomial_ring_axioms(a in poly(2, 3, 4), b in poly(2, 3, 4), c in poly(2, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let diff = &a - &a;
        prop_assert!(diff.is_zero());
        prop_assert!((&a * &b).terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn series_precision_is_the_minimum(a in poly(2, 4, 5), b in poly(2, 4, 5), pa in 1u32..8, pb in 1u32..8) {
        let (x, y) = (series(a, pa), series(b, pb));
        for s in [x.add(&y), x.mul(&y), x.sub(&y)] {
            prop_assert_eq!(s.precision(), pa.min(pb));
            prop_assert!(s.poly().terms().all(|(m, _)| m.degree() < i64::from(pa.min(pb))));
        }
    }

    #[test]
    fn unit_times_inverse_is_one(c in nonzero_rational(), rest in poly_in_degrees(2, 1, 4, 5), prec in 1u32..9) {
        let u = series(&MultiPoly::constant(2, c) + &rest, prec);
        let inv = u.invert().unwrap();
        prop_assert_eq!(u.mul(&inv), TruncatedSeries::one(2, prec));
    }

    #[test]
    fn solve_reproduces_the_right_hand_side(
        rows in prop::collection::vec(prop::collection::vec(small_rational(), 4), 1..5),
        x in prop::collection::vec(small_rational(), 4),
        junk in prop::collection::vec(small_rational(), 4),
    ) {
        let a = QMatrix::from_dense(&rows).unwrap();
        let b = a.mul_vec(&x).unwrap();
        let sol = a.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&sol).unwrap(), b);
        match a.solve(&junk[..rows.len()]).unwrap() {
            Some(y) => prop_assert_eq!(a.mul_vec(&y).unwrap(), junk[..rows.len()].to_vec()),
            None => prop_assert!(a.rank() < rows.len()),
        }
        for k in a.kernel() {
            prop_assert!(a.mul_vec(&k).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(a.rank() + a.kernel().len(), 4);
    }

    /// `(a1, a2) -> M·(a1, a2)` with `det M(0) != 0` keeps the ideal, so the
    /// colength must not move.
    #[test]
    fn length_survives_invertible_recombination(
        e1 in 1i32..=3, e2 in 1i32..=3,
        h1 in poly_in_degrees(2, 4, 5, 2), h2 in poly_in_degrees(2, 4, 5, 2),
        m in prop::collection::vec(small_rational(), 4),
        m_higher in poly_in_degrees(2, 1, 2, 2),
    ) {
        let det = &m[0] * &m[3] - &m[1] * &m[2];
        prop_assume!(!det.is_zero());
        let prec = 24;
        let f1 = MultiPoly::var(2, 0).pow(e1 as u32);
        let f2 = MultiPoly::var(2, 1).pow(e2 as u32);
        let a1 = series(&f1 + &h1, prec);
        let a2 = series(&f2 + &h2, prec);
        let base = artinian_length(&[a1.clone(), a2.clone()], DEFAULT_LENGTH_CAP).unwrap();
        prop_assert!(base >= (e1.min(e2)) as usize);
        let entry = |c: &Rational, extra: bool| {
            let p = MultiPoly::constant(2, c.clone());
            series(if extra { &p + &m_higher } else { p }, prec)
        };
        let b1 = entry(&m[0], true).mul(&a1).add(&entry(&m[1], false).mul(&a2));
        let b2 = entry(&m[2], false).mul(&a1).add(&entry(&m[3], false).mul(&a2));
        prop_assert_eq!(artinian_length(&[b1, b2], DEFAULT_LENGTH_CAP).unwrap(), base);
    }
}

#[test]
fn zero_polynomial_scales_to_nothing() {
    let p = MultiPoly::var(2, 0);
    assert!(p.scale(&q(0)).is_zero());
    assert_eq!(p.scale(&Rational::one()), p);
}
