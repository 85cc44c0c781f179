mod common;

use proptest::prelude::*;

use acw_core::dgforms::{
    invariant_eval, matrix_curvature, polarize, transgression, Ctx, DGContext, DiffForm, FormMatrix,
    InvariantPolynomial,
};
use acw_core::exactalg::{factorial_q, Matrix, MultiPoly, Rational};
use common::{nonzero_rational, poly, small_rational};

type Raw = Vec<(u32, MultiPoly)>;

fn raw_form(nvars: usize, max_terms: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((0u32..(1 << nvars), poly(nvars, 2, 2)), 0..=max_terms)
}

fn build(ctx: &Ctx, raw: &Raw) -> DiffForm {
    DiffForm::from_terms(ctx, raw.iter().map(|(m, p)| (*m, ctx.series(p.clone()))))
}

fn homogeneous(ctx: &Ctx, raw: &Raw, k: u32) -> DiffForm {
    build(ctx, raw).of_degree(k)
}

/// `Σ g·dh` with polynomial `g, h`.
fn exact_type(ctx: &Ctx, pairs: &[(MultiPoly, MultiPoly)]) -> DiffForm {
    pairs.iter().fold(ctx.zero(), |acc, (g, h)| {
        let g = DiffForm::function(ctx, ctx.series(g.clone()));
        let h = DiffForm::function(ctx, ctx.series(h.clone()));
        acc.add(&g.w(&h.d()))
    })
}

fn matrix_of(r: usize, entries: Vec<DiffForm>) -> FormMatrix {
    Matrix::from_fn(r, r, |i, j| entries[i * r + j].clone())
}

fn sign(k: u32) -> Rational {
    Rational::from_integer(if k % 2 == 0 { 1.into() } else { (-1).into() })
}

const SEVEN: [&str; 7] = ["x1", "x2", "x3", "x4", "x5", "x6", "x7"];

fn ctx3() -> Ctx {
    DGContext::new(1, &["x", "y"])
}

proptest! {
    #![proptest_config(common::config(48))]

    #[test]
    fn d_squares_to_zero(raw in raw_form(3, 5)) {
        let ctx = ctx3();
        let a = build(&ctx, &raw);
        prop_assert!(a.d().d().is_zero());
        prop_assert!(a.d_simplex().d_simplex().is_zero());
        prop_assert!(a.d_base().d_base().is_zero());
        prop_assert!(a.d_simplex().d_base().add(&a.d_base().d_simplex()).is_zero());
        prop_assert_eq!(a.d_simplex().add(&a.d_base()), a.d());
    }

    #[test]
    fn graded_commutativity_and_leibniz(
        ra in raw_form(3, 4), rb in raw_form(3, 4), rc in raw_form(3, 3),
        ka in 0u32..=3, kb in 0u32..=3,
    ) {
        let ctx = ctx3();
        let a = homogeneous(&ctx, &ra, ka);
        let b = homogeneous(&ctx, &rb, kb);
        let c = build(&ctx, &rc);
        prop_assert_eq!(a.w(&b), b.w(&a).scale(&sign(ka * kb)));
        prop_assert_eq!(a.w(&b).d(), a.d().w(&b).add(&a.w(&b.d()).scale(&sign(ka))));
        prop_assert_eq!(a.w(&b).w(&c), a.w(&b.w(&c)));
        if ka % 2 == 1 {
            prop_assert!(a.w(&a).is_zero());
        }
    }

}

proptest! {
    #![proptest_config(common::config(24))]

    #[test]
    fn chern_forms_are_closed(
        r in 1usize..=3,
        pairs in prop::collection::vec(prop::collection::vec((poly(7, 1, 2), poly(7, 2, 2)), 1..=2), 9),
    ) {
        let ctx = DGContext::new(0, &SEVEN);
        let theta = matrix_of(r, pairs.iter().map(|p| exact_type(&ctx, p)).collect());
        let curvature = matrix_curvature(&theta).unwrap();
        for i in 1..=r {
            let c = invariant_eval(&InvariantPolynomial::elementary(i), &curvature).unwrap();
            prop_assert!(c.d().is_zero(), "P_{} not closed", i);
        }
    }

    #[test]
    fn conjugation_invariance(
        r in 1usize..=3,
        funcs in prop::collection::vec(poly(2, 2, 2), 9),
        twos in prop::collection::vec(poly(2, 1, 2), 9),
        g in prop::collection::vec(small_rational(), 9),
    ) {
        let ctx = DGContext::new(0, &["x", "y"]);
        let g = Matrix::from_fn(r, r, |i, j| g[i * r + j].clone());
        let det = g.det();
        prop_assume!(det != Rational::from_integer(0.into()));
        let ginv = g.adjugate().scale(&(Rational::from_integer(1.into()) / det));
        let vol = ctx.df(0).w(&ctx.df(1));
        let m = matrix_of(r, (0..r * r).map(|k| {
            let f = DiffForm::function(&ctx, ctx.series(funcs[k].clone()));
            f.add(&vol.times_function(&ctx.series(twos[k].clone())))
        }).collect());
        let lift = |a: &Matrix<Rational>| a.map(|c| ctx.scalar(c.clone()));
        let conj = lift(&g).mul(&m).mul(&lift(&ginv));
        for i in 1..=r {
            let p = InvariantPolynomial::elementary(i);
            prop_assert_eq!(invariant_eval(&p, &conj).unwrap(), invariant_eval(&p, &m).unwrap());
        }
        let sq = InvariantPolynomial::parse("c1^2 - 2*c2").unwrap();
        if r >= 2 {
            prop_assert_eq!(invariant_eval(&sq, &conj).unwrap(), invariant_eval(&sq, &m).unwrap());
        }
    }

    /// Odd coefficients `α_i` times odd-entry matrices `M_i`.
    #[test]
    fn polarization_identities(
        alphas in prop::collection::vec(raw_form(6, 3), 3),
        ms in prop::collection::vec(prop::collection::vec(raw_form(6, 2), 4), 3),
        which in 0usize..3,
        c in nonzero_rational(),
    ) {
        let ctx = DGContext::new(0, &SEVEN[..6]);
        let alpha: Vec<DiffForm> = alphas.iter().map(|a| homogeneous(&ctx, a, 1)).collect();
        let m: Vec<FormMatrix> = ms.iter()
            .map(|es| matrix_of(2, es.iter().map(|e| homogeneous(&ctx, e, 1)).collect()))
            .collect();
        let times = |a: &DiffForm, mat: &FormMatrix| mat.map(|e| a.w(e));
        for p in [InvariantPolynomial::parse("c1^3").unwrap(), InvariantPolynomial::parse("c1*c2").unwrap()] {
            let args: Vec<FormMatrix> = (0..3).map(|i| times(&alpha[i], &m[i])).collect();
            let value = polarize(&p, &args).unwrap();

            let mut same_alpha = args.clone();
            let (i, j) = (which, (which + 1) % 3);
            same_alpha[j] = times(&alpha[i], &m[j]);
            prop_assert!(polarize(&p, &same_alpha).unwrap().is_zero());
            let mut same_m = args.clone();
            same_m[j] = times(&alpha[j], &m[i]);
            prop_assert!(polarize(&p, &same_m).unwrap().is_zero());

            let sum = args[1..].iter().fold(args[0].clone(), |acc, a| acc.add(a));
            let full = invariant_eval(&p, &sum).unwrap();
            prop_assert_eq!(full, value.scale(&factorial_q(3)));

            let swapped = vec![args[2].clone(), args[0].clone(), args[1].clone()];
            prop_assert_eq!(polarize(&p, &swapped).unwrap(), value.clone());
            let mut scaled = args.clone();
            scaled[which] = args[which].scale(&c);
            prop_assert_eq!(polarize(&p, &scaled).unwrap(), value.scale(&c));
        }
    }

    #[test]
    fn transgression_identity(
        r in 1usize..=2,
        m in 1usize..=3,
        raw in prop::collection::vec(raw_form(6, 3), 4),
    ) {
        let ctx = DGContext::new(0, &SEVEN[..6]);
        let theta = matrix_of(r, raw.iter().map(|e| homogeneous(&ctx, e, 1)).collect());
        let curvature = matrix_curvature(&theta).unwrap();
        let polys: Vec<String> = match (r, m) {
            (1, k) => vec![format!("c1^{k}")],
            (_, 1) => vec!["c1".into()],
            (_, 2) => vec!["c1^2".into(), "c2".into(), "c1^2 - 3*c2".into()],
            _ => vec!["c1^3".into(), "c1*c2".into()],
        };
        for src in polys {
            let p = InvariantPolynomial::parse(&src).unwrap();
            let t = transgression(&p, &theta).unwrap();
            prop_assert_eq!(t.d(), invariant_eval(&p, &curvature).unwrap(), "{}", src);
        }
    }
}

#[test]
fn sampled_degrees_are_not_vacuous() {
    let ctx = DGContext::new(0, &SEVEN[..6]);
    let args: Vec<FormMatrix> = (0..3)
        .map(|i| {
            let e = ctx.df(2 * i).w(&ctx.df(2 * i + 1));
            Matrix::from_fn(2, 2, |a, b| if a == b { e.clone() } else { ctx.zero() })
        })
        .collect();
    let p = InvariantPolynomial::parse("c1^3").unwrap();
    assert!(!polarize(&p, &args).unwrap().is_zero());
    let x = |i: usize| DiffForm::function(&ctx, ctx.series(MultiPoly::var(6, i)));
    let theta = Matrix::from_fn(1, 1, |_, _| {
        x(0).w(&ctx.df(1)).add(&x(2).w(&ctx.df(3))).add(&x(4).w(&ctx.df(5)))
    });
    let t = transgression(&p, &theta).unwrap();
    assert_eq!(t.degree(), Some(5));
    assert!(!t.d().is_zero());
}
