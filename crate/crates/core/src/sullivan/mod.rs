//! Thom–Sullivan forms on finite simplicial sets and the comparison with
//! normalized cochains.

pub mod cohomology;
pub mod complex;
pub mod verify;

pub use cohomology::{cohomology, CochainComplexView, Cohomology};
pub use complex::{cochain_view, SullivanComplex, SullivanElement, WeightedForms, MAX_WEIGHT};
pub use verify::{
    default_weight_cap, integrate_map, product_defect, sullivan_basis, verify_de_rham, DeRhamReport,
    ProductCheck,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, qf};
    use crate::simplicial::{coboundary, FiniteSimplicialSet};

    #[test]
    fn basis_dimensions() {
        let p = FiniteSimplicialSet::standard(0);
        assert_eq!(sullivan_basis(&p, 0, 0).unwrap().len(), 1);
        let e = FiniteSimplicialSet::standard(1);
        assert_eq!(sullivan_basis(&e, 0, 1).unwrap().len(), 2);
        let c = FiniteSimplicialSet::boundary(2);
        // PL functions of weight <= 1 on a triangle: one value per vertex.
        assert_eq!(sullivan_basis(&c, 0, 1).unwrap().len(), 3);
        assert_eq!(sullivan_basis(&c, 1, 1).unwrap().len(), 3);
        assert!(matches!(sullivan_basis(&c, 9, 1), Err(crate::Error::CapExceeded(_))));
    }

    #[test]
    fn basis_elements_are_compatible() {
        let c = FiniteSimplicialSet::boundary(2);
        let a = SullivanComplex::new(&c, 3).unwrap();
        for deg in 0..=1 {
            for u in a.basis(deg) {
                assert!(a.is_compatible(&u).unwrap());
                let du = a.d(&u);
                if deg == 0 {
                    assert_eq!(a.integrate(&du), coboundary(&c, &a.integrate(&u)));
                }
            }
        }
    }

    #[test]
    fn integration_examples() {
        let s1 = FiniteSimplicialSet::standard(1);
        let a = SullivanComplex::new(&s1, 2).unwrap();
        let ctx = crate::dgforms::DGContext::new(1, &[]);
        let dt = SullivanElement { degree: 1, weight: 1, forms: vec![ctx.dt(1)] };
        assert_eq!(a.integrate(&dt).values, vec![q(1)]);
        let unit = SullivanElement { degree: 0, weight: 0, forms: vec![ctx.one()] };
        assert_eq!(a.integrate(&unit).values, vec![q(1), q(1)]);
        let s2 = FiniteSimplicialSet::standard(2);
        let b = SullivanComplex::new(&s2, 2).unwrap();
        let c2 = crate::dgforms::DGContext::new(2, &[]);
        let top = SullivanElement { degree: 2, weight: 2, forms: vec![c2.dt(1).w(&c2.dt(2))] };
        assert_eq!(b.integrate(&top).values, vec![qf(1, 2)]);
    }

    #[test]
    fn de_rham_examples() {
        for n in 0..=2 {
            let r = verify_de_rham(&FiniteSimplicialSet::standard(n), None).unwrap();
            let mut expect = vec![0; n + 1];
            expect[0] = 1;
            assert_eq!(r.sullivan_ranks, expect);
            assert!(r.passed(), "{r:?}");
        }
        let r = verify_de_rham(&FiniteSimplicialSet::boundary(2), None).unwrap();
        assert_eq!(r.sullivan_ranks, vec![1, 1]);
        assert_eq!(r.cochain_ranks, vec![1, 1]);
        assert!(r.passed());
        assert_eq!(r.per_weight_total().iter().map(|&x| x as usize).collect::<Vec<_>>(), r.cochain_ranks);
        let r = verify_de_rham(&FiniteSimplicialSet::points(2), None).unwrap();
        assert_eq!(r.sullivan_ranks, vec![2]);
        assert!(r.passed());
    }

    #[test]
    fn circle_class_appears_at_weight_one() {
        let r = verify_de_rham(&FiniteSimplicialSet::boundary(2), Some(3)).unwrap();
        assert_eq!(r.filtered_ranks[0], vec![1, 0]);
        assert_eq!(r.filtered_ranks[1], vec![1, 1]);
        assert_eq!(r.per_weight[1], vec![0, 1]);
    }
}
