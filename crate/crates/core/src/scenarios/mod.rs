//! Shipped verification scenarios: projective spaces with torus vector
//! fields, the Bott sum over their zeros, chain-level Chern forms and the
//! curve-level adelic integral.

pub mod bott;
pub mod chart;
pub mod curve;
pub mod model;
pub mod projective;

pub use bott::{bott_sum, orientation_sign, BottReport, ZeroContribution};
pub use chart::{chern_report, ChernReport};
pub use curve::{curve_adelic_integral, ChainResidue, CurveReport, Place};
pub use model::{ChartSpec, CurvePoint, CurveSpec, ExtensionSpec, FrameSpec, Scenario, ScenarioFile, ZeroSpec};
pub use projective::{degenerate_line_scenario, perturb_lifts, projective_space_scenario, Bundle};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgforms::InvariantPolynomial;
    use crate::exactalg::{q, qf, Rational};
    use crate::Error;

    fn poly(s: &str) -> InvariantPolynomial {
        InvariantPolynomial::parse(s).unwrap()
    }

    fn weights(w: &[i64]) -> Vec<Rational> {
        w.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn degenerate_line_sums_to_degree() {
        for d in 1..=3 {
            let scn = degenerate_line_scenario(d).unwrap();
            let r = bott_sum(&scn, &poly("c1")).unwrap();
            assert_eq!(r.value, q(d));
            assert!(r.passed);
        }
        let r = bott_sum(&degenerate_line_scenario(1).unwrap(), &poly("c1")).unwrap();
        assert_eq!(r.zeros[0].fraction, "[ -f d f / f^2 ]");
        assert_eq!(r.zeros[0].invariant, "1");
    }

    #[test]
    fn projective_line() {
        let scn = projective_space_scenario(1, &weights(&[0, 1]), Bundle::Line(1)).unwrap();
        let r = bott_sum(&scn, &poly("c1")).unwrap();
        let inv: Vec<&str> = r.zeros.iter().map(|z| z.invariant.as_str()).collect();
        assert_eq!(inv, vec!["1", "0"]);
        assert!(r.passed);
        for d in 1..=3 {
            let scn = projective_space_scenario(1, &weights(&[2, -5]), Bundle::Line(d)).unwrap();
            assert_eq!(bott_sum(&scn, &poly("c1")).unwrap().value, q(d));
        }
        let scn = projective_space_scenario(1, &weights(&[0, 1]), Bundle::Tangent).unwrap();
        assert_eq!(scn.zeros.len(), 2);
        assert!(scn.zeros.iter().all(|z| z.length == 1));
        assert_eq!(bott_sum(&scn, &poly("c1")).unwrap().value, q(2));
    }

    #[test]
    fn projective_plane() {
        for d in 1..=3 {
            let scn = projective_space_scenario(2, &weights(&[0, 1, 3]), Bundle::Line(d)).unwrap();
            let r = bott_sum(&scn, &poly("c1^2")).unwrap();
            assert_eq!(r.value, q(d * d));
            assert_eq!(r.local_sum, format!("-{}", d * d));
        }
        let w = weights(&[0, 1, 3]);
        let scn = projective_space_scenario(2, &w, Bundle::Tangent).unwrap();
        assert_eq!(bott_sum(&scn, &poly("c2")).unwrap().value, q(3));
        let scaled: Vec<Rational> = w.iter().map(|x| x * qf(-7, 2)).collect();
        let scn2 = projective_space_scenario(2, &scaled, Bundle::Tangent).unwrap();
        assert_eq!(bott_sum(&scn2, &poly("c2")).unwrap().value, q(3));
        assert_eq!(bott_sum(&scn, &poly("c1^2")).unwrap().value, q(9));
    }

    #[test]
    fn scenario_errors() {
        assert_eq!(
            projective_space_scenario(2, &weights(&[0, 1, 1]), Bundle::Tangent).unwrap_err(),
            Error::RepeatedWeights
        );
        let scn = projective_space_scenario(2, &weights(&[0, 1, 2]), Bundle::Tangent).unwrap();
        assert!(matches!(bott_sum(&scn, &poly("c1")), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn lift_perturbation_is_invisible() {
        use crate::exactalg::parse_poly;
        let scn = degenerate_line_scenario(2).unwrap();
        let p = [parse_poly("3 + f", &["f"]).unwrap()];
        let moved = perturb_lifts(&scn, &p);
        assert_ne!(moved.zeros[0].lambda, scn.zeros[0].lambda);
        assert_eq!(bott_sum(&moved, &poly("c1")).unwrap().value, q(2));
    }

    #[test]
    fn json_round_trip() {
        let scn = projective_space_scenario(2, &weights(&[0, 1, 3]), Bundle::Line(2)).unwrap();
        let back = Scenario::from_json(&scn.to_json(), None).unwrap();
        assert_eq!(back.zeros, scn.zeros);
        assert_eq!(back.expected, Some(q(4)));
        let scn = degenerate_line_scenario(1).unwrap();
        let back = Scenario::from_json(&scn.to_json(), None).unwrap();
        assert_eq!(back.zeros, scn.zeros);
        assert_eq!(back.curve, scn.curve);
    }

    #[test]
    fn chart_components() {
        let scn = degenerate_line_scenario(1).unwrap();
        let chart = scn.chart.as_ref().unwrap();
        let r = chern_report(chart, "generic,0", None).unwrap();
        assert_eq!(r.components, vec!["1/f d f"]);
        assert!(r.passed);
        let flat = chern_report(chart, "generic,inf", None).unwrap();
        assert_eq!(flat.components, vec!["0"]);
        assert!(matches!(chern_report(chart, "generic,7", None), Err(Error::UnknownChain(_))));
    }

    #[test]
    fn curve_integrals() {
        for d in [0, 1, 3] {
            let scn = degenerate_line_scenario(d).unwrap();
            let r = curve_adelic_integral(scn.curve.as_ref().unwrap(), None).unwrap();
            assert_eq!(r.value, q(d), "{r:?}");
        }
        let point = |label: &str, at: Option<&str>, frame: &str, over: Option<&str>| CurvePoint {
            label: label.into(),
            at: at.map(Into::into),
            frame: frame.into(),
            over: over.map(Into::into),
        };
        // O(3) with the section (f − 1)^2 (f + 2) and varied frames off the zeros.
        let spec = CurveSpec {
            coordinate: "f".into(),
            points: vec![
                point("generic", None, "(f - 1)^2*(f + 2)", None),
                point("one", Some("1"), "1 + f", None),
                point("minus_two", Some("-2"), "3", None),
                point("inf", Some("inf"), "f^3 + f^2", None),
            ],
            expected: Some("3".into()),
        };
        let r = curve_adelic_integral(&spec, None).unwrap();
        assert_eq!(r.value, q(3), "{r:?}");
        let residues: Vec<&str> = r.chains.iter().map(|c| c.residue.as_str()).collect();
        assert_eq!(residues, vec!["2", "1", "0"]);

        let mut missing = spec.clone();
        missing.points.retain(|p| p.label != "inf");
        assert!(matches!(curve_adelic_integral(&missing, None), Err(Error::PoleAtInfinityUnhandled(_))));
        let mut missing = spec;
        missing.points.retain(|p| p.label != "one");
        assert!(matches!(curve_adelic_integral(&missing, None), Err(Error::MissingPoint(_))));
    }
}
