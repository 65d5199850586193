mod common;

use common::*;
use proptest::prelude::*;
use satura_core::classify::is_subintegral;
use satura_core::saturation::{in_saturation, tensor_square};
use satura_core::{AffineAlgebra, AlgebraMorphism, Polynomial};

fn tensor_cases() -> Vec<AlgebraMorphism> {
    vec![node_to_normalization(), cusp(), node_to_punctured()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn delta_obeys_the_product_rule(
        which in 0usize..3,
        b1 in raw_poly(3, 3, 4),
        b2 in raw_poly(3, 3, 4),
    ) {
        let m = tensor_cases().swap_remove(which);
        let t = tensor_square(&m).unwrap();
        let r = m.target().ring();
        let (b1, b2) = (element(r, &b1), element(r, &b2));
        let lhs = t.delta(&(&b1 * &b2)).unwrap();
        let rhs = &(&t.first_copy(&b1).unwrap() * &t.delta(&b2).unwrap())
            + &(&t.second_copy(&b2).unwrap() * &t.delta(&b1).unwrap());
        prop_assert!(t.relations().normal_form(&(&lhs - &rhs)).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn saturation_is_a_module_over_the_source(which in 0usize..4, a in raw_poly(2, 2, 3)) {
        let (m, b) = match which {
            0 => (node_to_punctured(), "z"),
            1 => (node_to_punctured(), "s"),
            2 => (node_to_punctured(), "x*z + 2*s"),
            _ => (cusp(), "t"),
        };
        let b = m.target().parse_element(b).unwrap();
        prop_assert!(in_saturation(&b, &m).unwrap());
        let a = m.apply(&element(m.source().ring(), &a)).unwrap();
        prop_assert!(in_saturation(&(&a * &b), &m).unwrap());
    }

    #[test]
    fn radical_membership_of_delta_is_swap_invariant(which in 0usize..3, b in raw_poly(3, 2, 3)) {
        let m = tensor_cases().swap_remove(which);
        let t = tensor_square(&m).unwrap();
        let d = t.delta(&element(m.target().ring(), &b)).unwrap();
        let j = t.relations();
        prop_assert_eq!(
            j.radical_contains(&d).unwrap(),
            j.radical_contains(&t.swap(&d).unwrap()).unwrap()
        );
    }

    #[test]
    fn saturation_grows_along_the_chain(b in raw_poly(3, 2, 3)) {
        let outer = node_to_punctured();
        let inner = normalization_to_punctured();
        let b = element(outer.target().ring(), &b);
        if in_saturation(&b, &outer).unwrap() {
            prop_assert!(in_saturation(&b, &inner).unwrap());
        }
    }
}

fn subintegral_corpus() -> Vec<AlgebraMorphism> {
    let cusp_line = AffineAlgebra::parse("Ac1", &["u", "v", "w"], &["v^2 - u^3"]).unwrap();
    let plane = AffineAlgebra::parse("P", &["t", "w"], &[]).unwrap();
    let n = nodal();
    vec![
        cusp(),
        AlgebraMorphism::parse(&cusp_line, &plane, &["t^2", "t^3", "w"]).unwrap(),
        AlgebraMorphism::identity(&n.a),
        node_to_normalization(),
    ]
}

#[test]
fn subintegral_elements_lie_in_the_saturation() {
    let mut seen = 0;
    for m in subintegral_corpus() {
        if !is_subintegral(&m).unwrap() {
            continue;
        }
        seen += 1;
        let r = m.target().ring();
        let samples: Vec<Polynomial> = r
            .gens()
            .into_iter()
            .chain([element(r, &[(1, 1, vec![1, 1]), (-2, 3, vec![0, 2])])])
            .collect();
        for b in samples {
            assert!(
                in_saturation(&b, &m).unwrap(),
                "{b} over {}",
                m.source().label()
            );
        }
    }
    assert_eq!(seen, 3);
}
