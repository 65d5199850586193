mod common;

use common::*;
use proptest::prelude::*;
use satura_core::{AffineAlgebra, AlgebraMorphism};

fn corpus_extensions() -> Vec<AlgebraMorphism> {
    vec![node_to_normalization(), node_to_punctured(), cusp()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn image_elements_are_integral_of_degree_one(which in 0usize..3, raw in raw_poly(2, 3, 3)) {
        let m = corpus_extensions().swap_remove(which);
        let a = element(m.source().ring(), &raw);
        let b = m.apply(&a).unwrap();
        prop_assert!(m.is_integral_element(&b).unwrap());
        prop_assert_eq!(m.generic_degree(&b).unwrap(), 1);
        let pre = m.preimage(&b).unwrap().expect("image element has a preimage");
        let back = m.apply(&pre).unwrap();
        prop_assert!(m.target().relations().contains(&(&back - &b)).unwrap());
    }
}

#[test]
fn composition_of_extensions() {
    let first = node_to_normalization();
    let second = normalization_to_punctured();
    let composite = first.then(&second).unwrap();
    assert!(first.is_extension() && second.is_extension());
    assert!(composite.is_extension());
    let direct = node_to_punctured();
    assert_eq!(composite.images(), direct.images());
    assert!(composite.kernel().same_ideal(&direct.kernel()).unwrap());
    assert!(composite
        .kernel()
        .same_ideal(first.source().relations())
        .unwrap());
    // associativity with an identity on either side
    let id_a = AlgebraMorphism::identity(first.source());
    let id_b = AlgebraMorphism::identity(second.target());
    assert_eq!(id_a.then(&composite).unwrap().images(), composite.images());
    assert_eq!(composite.then(&id_b).unwrap().images(), composite.images());
}

#[test]
fn flags_survive_re_presentation_of_the_target() {
    let n = nodal();
    let a1_redundant =
        AffineAlgebra::parse("A'w", &["x", "z", "w"], &["z^2 - (x+1)", "w - x*z"]).unwrap();
    let b_redundant = AffineAlgebra::parse(
        "Bw",
        &["x", "z", "s", "w"],
        &["z^2 - (x+1)", "s*(z-1) - 1", "w - z*s"],
    )
    .unwrap();
    let pairs = [
        (
            node_to_normalization(),
            AlgebraMorphism::parse(&n.a, &a1_redundant, &["x", "w"]).unwrap(),
        ),
        (
            node_to_punctured(),
            AlgebraMorphism::parse(&n.a, &b_redundant, &["x", "x*z"]).unwrap(),
        ),
    ];
    for (plain, redundant) in &pairs {
        assert_eq!(
            plain.is_integral().unwrap(),
            redundant.is_integral().unwrap()
        );
        assert_eq!(
            plain.is_birational().unwrap(),
            redundant.is_birational().unwrap()
        );
    }
    assert!(pairs[0].1.is_integral().unwrap());
    assert!(!pairs[1].1.is_integral().unwrap());
    assert!(pairs[1].1.is_birational().unwrap());
}

#[test]
fn degree_exists_exactly_for_integral_or_algebraic_elements() {
    // u ↦ t^2: t has degree 2 and is integral
    let src = AffineAlgebra::parse("U", &["u"], &[]).unwrap();
    let line = AffineAlgebra::parse("L", &["t"], &[]).unwrap();
    let m = AlgebraMorphism::parse(&src, &line, &["t^2"]).unwrap();
    let t = line.parse_element("t").unwrap();
    assert!(m.is_integral_element(&t).unwrap());
    assert_eq!(m.generic_degree(&t).unwrap(), 2);
    assert!(!m.is_birational().unwrap());

    // s on the punctured normalization: algebraic of degree one, not integral
    let punct = node_to_punctured();
    let s = punct.target().parse_element("s").unwrap();
    assert!(!punct.is_integral_element(&s).unwrap());
    assert_eq!(punct.generic_degree(&s).unwrap(), 1);
}
