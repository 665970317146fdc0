use std::sync::OnceLock;

use kforge_core::gauss::q;
use kforge_core::hopf::DeformedHopf;
use kforge_core::twist::{build_twist, TwistSpec};
use kforge_core::{DiffOp, Gauss};
use proptest::prelude::*;

fn structures() -> &'static [(TwistSpec, DeformedHopf)] {
    static HOPF: OnceLock<Vec<(TwistSpec, DeformedHopf)>> = OnceLock::new();
    HOPF.get_or_init(|| {
        [
            TwistSpec::jordanian(q(-1, 1), 3, 3).unwrap(),
            TwistSpec::jordanian(q(2, 1), 3, 3).unwrap(),
            TwistSpec::abelian(q(0, 1), 3, 3).unwrap(),
            TwistSpec::abelian(q(1, 2), 3, 3).unwrap(),
        ]
        .into_iter()
        .map(|s| (s, DeformedHopf::new(&build_twist(&s).unwrap()).unwrap()))
        .collect()
    })
}

/// A random combination of `igl(3)` generators.
fn element(spec: &TwistSpec, coeffs: &[i128]) -> DiffOp {
    let basis = spec.generators().igl_basis();
    let mut out = DiffOp::zero(spec.dim, spec.order);
    for ((_, x), &c) in basis.iter().zip(coeffs) {
        out = out.add(&x.scale(&Gauss::int(c))).unwrap();
    }
    out
}

fn coeffs() -> impl Strategy<Value = Vec<i128>> {
    prop::collection::vec(-2i128..=2, 12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn coproduct_is_a_homomorphism(idx in 0usize..4, cx in coeffs(), cy in coeffs()) {
        let (spec, h) = &structures()[idx];
        let (x, y) = (element(spec, &cx), element(spec, &cy));
        let lhs = h.coproduct(&x.commutator(&y).unwrap()).unwrap();
        let rhs = h.coproduct(&x).unwrap().commutator(&h.coproduct(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_is_preserved(idx in 0usize..4, cx in coeffs()) {
        let (spec, h) = &structures()[idx];
        let x = element(spec, &cx);
        let d = h.coproduct(&x).unwrap();
        prop_assert_eq!(d.counit_left(), x.clone());
        prop_assert_eq!(d.counit_right(), x);
    }

    #[test]
    fn antipode_reverses_brackets(idx in 0usize..4, cx in coeffs(), cy in coeffs()) {
        let (spec, h) = &structures()[idx];
        let (x, y) = (element(spec, &cx), element(spec, &cy));
        let lhs = h.antipode(&x.commutator(&y).unwrap()).unwrap();
        let rhs = h.antipode(&y).unwrap().commutator(&h.antipode(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_axiom_on_combinations(idx in 0usize..4, cx in coeffs()) {
        let (spec, h) = &structures()[idx];
        let x = element(spec, &cx);
        prop_assert!(h.antipode_axiom(&x).unwrap().is_zero());
    }
}
