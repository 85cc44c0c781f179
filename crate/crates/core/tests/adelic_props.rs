mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use acw_core::adelic::{
    chern_form_component, curvature_11, independence_check, localization_check, mixed_connection, projector,
    whitney_check, AdelicFrame, Chain, ChainAlgebra, ChartPoint, LocalizationData,
};
use acw_core::dgforms::{DiffForm, InvariantPolynomial};
use acw_core::exactalg::{Matrix, Monomial, MultiPoly};
use common::{nonzero_rational, poly};

const LABELS: [&str; 3] = ["p0", "p1", "p2"];

/// An invertible Laurent monomial `c·x^a·y^b`.
fn unit(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    (nonzero_rational(), prop::collection::vec(-2i32..=2, nvars)).prop_map(|(c, e)| MultiPoly::term(Monomial(e), c))
}

/// Upper triangular with unit diagonal entries, so the determinant is a unit.
fn frame_matrix(rank: usize, nvars: usize) -> impl Strategy<Value = Matrix<MultiPoly>> {
    (prop::collection::vec(unit(nvars), rank), prop::collection::vec(poly(nvars, 2, 2), rank * rank)).prop_map(
        move |(diag, off)| {
            Matrix::from_fn(rank, rank, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => diag[i].clone(),
                std::cmp::Ordering::Less => off[i * rank + j].clone(),
                std::cmp::Ordering::Greater => MultiPoly::zero(nvars),
            })
        },
    )
}

fn frame(rank: usize, nvars: usize) -> impl Strategy<Value = Vec<Matrix<MultiPoly>>> {
    prop::collection::vec(frame_matrix(rank, nvars), LABELS.len())
}

/// Frames from the leading `rank × rank` blocks of `ms`.
fn build(base: &[&str], rank: usize, ms: &[Matrix<MultiPoly>]) -> AdelicFrame {
    ms.iter().zip(LABELS).fold(AdelicFrame::new(base, rank), |f, (m, l)| {
        f.with(l, Matrix::from_fn(rank, rank, |i, j| m.get(i, j).clone())).unwrap()
    })
}

fn algebra(points: usize, base: &[&str]) -> ChainAlgebra {
    ChainAlgebra::new(Chain::new(&LABELS[..points]).unwrap(), base, None)
}

const XY: [&str; 2] = ["x", "y"];

proptest! {
    #![proptest_config(common::config(24))]

    #[test]
    fn whitney_product_on_block_frames(
        points in 1usize..=3,
        (r1, r2) in (1usize..=2, 1usize..=2),
        seed in (frame(2, 2), frame(2, 2), prop::collection::vec(prop::collection::vec(poly(2, 2, 2), 4), 3)),
    ) {
        let (g1, g2, offs) = seed;
        let sub = build(&XY, r1, &g1);
        let quotient = build(&XY, r2, &g2);
        let off: BTreeMap<String, Matrix<MultiPoly>> = LABELS.iter().zip(&offs)
            .map(|(l, h)| (l.to_string(), Matrix::from_fn(r1, r2, |i, j| h[i * 2 + j].clone())))
            .collect();
        let alg = algebra(points, &XY);
        let report = whitney_check(&sub, &quotient, &off, &alg).unwrap();
        prop_assert!(report.holds, "{:?}", report);
    }

    #[test]
    fn mixed_part_of_the_curvature(points in 1usize..=3, rank in 1usize..=2, g in frame(2, 2)) {
        let alg = algebra(points, &XY);
        let conn = mixed_connection(&build(&XY, rank, &g), &alg).unwrap();
        let th11 = curvature_11(&conn, &alg);
        prop_assert_eq!(conn.curvature_11_part(), conn.d_simplex_theta());
        prop_assert_eq!(&th11, &conn.d_simplex_theta());
        prop_assert!(th11.map(DiffForm::d_simplex).is_zero());
    }

    #[test]
    fn first_chern_component_is_additive(points in 1usize..=3, g in frame(1, 2), h in frame(1, 2)) {
        let alg = algebra(points, &XY);
        let (a, b) = (build(&XY, 1, &g), build(&XY, 1, &h));
        let c1 = |f: &AdelicFrame| chern_form_component(1, &mixed_connection(f, &alg).unwrap(), &alg).unwrap();
        prop_assert_eq!(c1(&a.tensor(&b).unwrap()), c1(&a).add(&c1(&b)));
    }

    #[test]
    fn other_frames_change_c1_by_a_coboundary(points in 1usize..=2, rank in 1usize..=2, g in frame(2, 2), h in frame(2, 2)) {
        let alg = algebra(points, &XY);
        let r = independence_check(&build(&XY, rank, &g), &build(&XY, rank, &h), &alg).unwrap();
        prop_assert!(r.holds, "{} vs {}", r.difference.render(), r.coboundary.render());
    }

    /// `v = c f^k ∂/∂f` on chains of the affine line that avoid `f = 0`.
    #[test]
    fn localization_on_line_chains(
        points in 1usize..=3,
        c in nonzero_rational(),
        k in 0i32..=3,
        closed in prop::collection::vec(prop_oneof![Just(None), nonzero_rational().prop_map(Some)], 3),
        g in frame(1, 1),
        lambda in poly(1, 2, 2),
    ) {
        let a = vec![MultiPoly::term(Monomial(vec![k]), c)];
        let mut projectors = BTreeMap::new();
        for (label, at) in LABELS.iter().zip(&closed) {
            let x = match at {
                Some(v) => ChartPoint::closed(label, vec![v.clone()]),
                None => ChartPoint::generic(label),
            };
            projectors.insert(label.to_string(), projector(&a, &x, 8).unwrap());
        }
        let data = LocalizationData {
            a,
            lambda: Matrix::from_rows(vec![vec![lambda]]),
            frame: build(&["f"], 1, &g),
            projectors,
            poly: InvariantPolynomial::elementary(1),
        };
        let alg = algebra(points, &["f"]);
        let r = localization_check(&data, &alg).unwrap();
        prop_assert!(r.holds);
    }
}
