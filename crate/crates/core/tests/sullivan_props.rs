mod common;

use proptest::prelude::*;

use acw_core::exactalg::{q, Rational};
use acw_core::simplicial::{aw_product, coboundary, Cochain, FiniteSimplicialSet};
use acw_core::sullivan::{cochain_view, cohomology, product_defect, SullivanComplex};
use common::small_rational;

fn shipped() -> Vec<FiniteSimplicialSet> {
    vec![
        FiniteSimplicialSet::standard(1),
        FiniteSimplicialSet::standard(2),
        FiniteSimplicialSet::boundary(2),
        FiniteSimplicialSet::points(2),
    ]
}

fn coords(dim: usize, pool: &[Rational], offset: usize) -> Vec<Rational> {
    (0..dim).map(|i| pool[(offset + i) % pool.len()].clone()).collect()
}

proptest! {
    #![proptest_config(common::config(24))]

    #[test]
    fn integration_is_a_chain_map(which in 0usize..4, deg in 0usize..2, pool in prop::collection::vec(small_rational(), 1..12)) {
        let sets = shipped();
        let s = &sets[which];
        prop_assume!(deg < s.dim());
        let a = SullivanComplex::new(s, 2).unwrap();
        let u = a.element_from_coords(deg, &coords(a.dim(deg), &pool, 0));
        prop_assert!(a.is_compatible(&u).unwrap());
        prop_assert_eq!(a.integrate(&a.d(&u)), coboundary(s, &a.integrate(&u)));
    }

    #[test]
    fn product_is_graded_commutative(
        which in 0usize..4, p in 0usize..2, r in 0usize..2,
        pool in prop::collection::vec(small_rational(), 1..12), shift in 0usize..12,
    ) {
        let sets = shipped();
        let s = &sets[which];
        let a = SullivanComplex::new(s, 2).unwrap();
        prop_assume!(p <= s.dim() && r <= s.dim());
        let u = a.element_from_coords(p, &coords(a.dim(p), &pool, 0));
        let v = a.element_from_coords(r, &coords(a.dim(r), &pool, shift));
        let uv = a.product(&u, &v);
        let vu = a.product(&v, &u);
        let sign = if p * r % 2 == 0 { q(1) } else { q(-1) };
        for (x, y) in uv.forms.iter().zip(&vu.forms) {
            prop_assert_eq!(x.clone(), y.scale(&sign));
        }
        prop_assert!(a.is_compatible(&uv).unwrap());
    }
}

/// On cocycles, `ρ(u·v) − ρ(u)·ρ(v)` must be a coboundary.
#[test]
fn product_defect_is_a_coboundary_on_cocycles() {
    for s in shipped() {
        let a = SullivanComplex::new(&s, 3).unwrap();
        let hc = cohomology(&cochain_view(&s)).unwrap();
        let sa = cohomology(&a.view()).unwrap();
        for p in 0..=s.dim() {
            for r in 0..=s.dim() - p {
                for y in &sa.reps[p] {
                    for z in &sa.reps[r] {
                        let u = a.element_from_coords(p, y);
                        let v = a.element_from_coords(r, z);
                        let defect = product_defect(&a, &u, &v).unwrap();
                        assert!(hc.is_coboundary(p + r, &defect.values), "{} degrees {p},{r}", s.name());
                    }
                }
            }
        }
    }
}

#[test]
fn cup_product_on_cochains_does_not_commute() {
    let s = FiniteSimplicialSet::standard(2);
    // Edges of Δ² in the order (01, 02, 12).
    let edge = |k: usize| {
        let mut values = vec![q(0); s.count(1)];
        values[k] = q(1);
        Cochain { degree: 1, values }
    };
    let first = (0..3).find(|&k| s.vertices_of(1, k) == vec![0, 1]).unwrap();
    let last = (0..3).find(|&k| s.vertices_of(1, k) == vec![1, 2]).unwrap();
    let (a, b) = (edge(first), edge(last));
    let ab = aw_product(&s, &a, &b).unwrap();
    let ba = aw_product(&s, &b, &a).unwrap();
    assert_eq!(ab.values, vec![q(1)]);
    assert_eq!(ba.values, vec![q(0)]);
    assert_ne!(ab.values[0], -ba.values[0].clone());
}
