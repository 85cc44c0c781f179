mod common;

use proptest::prelude::*;

use acw_core::dgforms::InvariantPolynomial;
use acw_core::exactalg::{q, MultiPoly, Rational};
use acw_core::scenarios::{
    bott_sum, curve_adelic_integral, degenerate_line_scenario, perturb_lifts, projective_space_scenario, Bundle,
    CurvePoint, CurveSpec,
};
use common::{nonzero_rational, poly};

/// `n + 1` distinct small integer weights in random order.
fn weights(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(-9i64..=9, n + 1)
        .prop_map(|s| s.into_iter().map(q).collect::<Vec<_>>())
        .prop_shuffle()
}

fn poly_of(name: &str) -> InvariantPolynomial {
    InvariantPolynomial::parse(name).unwrap()
}

proptest! {
    #![proptest_config(common::config(16))]

    #[test]
    fn euler_number_ignores_the_weights(n in 1usize..=2, w in prop::collection::vec(-9i64..=9, 3), s in nonzero_rational(), t in -5i64..=5) {
        let w: Vec<Rational> = w[..=n].iter().map(|&x| q(x)).collect();
        prop_assume!((0..=n).all(|i| !w[..i].contains(&w[i])));
        let scn = projective_space_scenario(n, &w, Bundle::Tangent).unwrap();
        let top = poly_of(&format!("c{n}"));
        let base = bott_sum(&scn, &top).unwrap();
        prop_assert_eq!(&base.value, &q(n as i64 + 1));
        let moved: Vec<Rational> = w.iter().map(|x| &s * x + q(t)).collect();
        let scn = projective_space_scenario(n, &moved, Bundle::Tangent).unwrap();
        prop_assert_eq!(bott_sum(&scn, &top).unwrap().value, base.value);
    }

    #[test]
    fn top_power_of_c1_scales_as_a_power(n in 1usize..=3, d in -3i64..=3, w in weights(3)) {
        let scn = projective_space_scenario(n, &w[..=n], Bundle::Line(d)).unwrap();
        let p = poly_of(&if n == 1 { "c1".to_string() } else { format!("c1^{n}") });
        let r = bott_sum(&scn, &p).unwrap();
        prop_assert!(r.passed);
        prop_assert_eq!(r.value, q(d).pow(n as i32));
    }

    #[test]
    fn perturbing_lifts_keeps_the_sum(w in weights(2), shift in poly(2, 2, 3), d in -2i64..=2) {
        for bundle in [Bundle::Tangent, Bundle::Line(d)] {
            let scn = projective_space_scenario(2, &w, bundle).unwrap();
            let moved = perturb_lifts(&scn, &[shift.clone()]);
            for p in ["c1^2", "c2"] {
                let p = poly_of(p);
                prop_assert_eq!(bott_sum(&scn, &p).unwrap().value, bott_sum(&moved, &p).unwrap().value);
            }
        }
    }

    #[test]
    fn degenerate_zero_perturbed(d in -3i64..=3, shift in poly(1, 3, 3)) {
        let scn = degenerate_line_scenario(d).unwrap();
        let moved = perturb_lifts(&scn, &[shift]);
        prop_assert_eq!(bott_sum(&moved, &poly_of("c1")).unwrap().value, q(d));
    }
}

/// `x − c` to the power `e`, split into numerator and denominator.
fn factor(c: i64, e: i64) -> (MultiPoly, MultiPoly) {
    let lin = &MultiPoly::var(1, 0) + &MultiPoly::constant(1, q(-c));
    if e >= 0 {
        (lin.pow(e as u32), MultiPoly::one(1))
    } else {
        (MultiPoly::one(1), lin.pow((-e) as u32))
    }
}

fn render(p: &MultiPoly) -> String {
    p.render(&["x"])
}

fn curve(places: &[(i64, i64)], units: &[(i64, i64)], at_inf: i64, twist: Option<(usize, i64)>) -> CurveSpec {
    let (mut num, mut den) = (MultiPoly::one(1), MultiPoly::one(1));
    for &(c, e) in places {
        let (a, b) = factor(c, e);
        num = &num * &a;
        den = &den * &b;
    }
    let mut points = vec![CurvePoint { label: "generic".into(), at: None, frame: render(&num), over: Some(render(&den)) }];
    for (i, (&(c, _), &(k, b))) in places.iter().zip(units).enumerate() {
        // A unit at `c`: a nonzero constant times `x − b` with `b ≠ c`.
        let mut unit = if b == c {
            MultiPoly::constant(1, q(k))
        } else {
            (&MultiPoly::var(1, 0) + &MultiPoly::constant(1, q(-b))).scale(&q(k))
        };
        if let Some((j, t)) = twist {
            if i == j {
                let (a, bb) = factor(c, t);
                unit = &unit * &a;
                points.push(CurvePoint { label: format!("p{i}"), at: Some(c.to_string()), frame: render(&unit), over: Some(render(&bb)) });
                continue;
            }
        }
        points.push(CurvePoint { label: format!("p{i}"), at: Some(c.to_string()), frame: render(&unit), over: None });
    }
    points.push(CurvePoint {
        label: "inf".into(),
        at: Some("inf".into()),
        frame: render(&num.scale(&q(at_inf))),
        over: Some(render(&den)),
    });
    CurveSpec { coordinate: "x".into(), points, expected: None }
}

proptest! {
    #![proptest_config(common::config(16))]

    /// `∫ c_1` is the degree of the divisor of the transition functions,
    /// whatever units are chosen as local frames.
    #[test]
    fn curve_integral_is_the_degree(
        places in prop::collection::btree_map(-4i64..=4, -2i64..=2, 1..=3),
        units in prop::collection::vec((prop::sample::select(vec![-3i64, -1, 1, 2, 5]), -4i64..=4), 3),
        at_inf in prop::sample::select(vec![-2i64, 1, 3]),
        twist in 0usize..3, t in -2i64..=2,
    ) {
        let places: Vec<(i64, i64)> = places.into_iter().collect();
        let degree: i64 = places.iter().map(|p| p.1).sum();
        let plain = curve_adelic_integral(&curve(&places, &units, at_inf, None), None).unwrap();
        prop_assert_eq!(plain.value, q(degree));
        let j = twist % places.len();
        let twisted = curve_adelic_integral(&curve(&places, &units, at_inf, Some((j, t))), None).unwrap();
        prop_assert_eq!(twisted.value, q(degree - t));
    }
}
