mod common;

use common::*;
use proptest::prelude::*;
use satura_core::ideal::{kernel_of_morphism, subalgebra_member};
use satura_core::{AffineAlgebra, Ideal, MonomialOrder, Polynomial, Rational};

/// Largest power tried by the brute-force radical oracle.
const POWER_ORACLE: u32 = 6;

#[derive(Clone, Debug)]
enum Instance {
    /// `I = (f^k + r·h, h)`, so `f^k ∈ I`.
    PowerInside {
        f: Vec<RawTerm>,
        k: u32,
        r: Vec<RawTerm>,
        h: Vec<RawTerm>,
    },
    /// Generators vanish at `point` while `f(point) ≠ 0`, so `f ∉ √I`.
    MissesZero {
        point: (i64, i64),
        f: Vec<RawTerm>,
        shift: i64,
        cofactors: Vec<(Vec<RawTerm>, Vec<RawTerm>)>,
    },
    /// Unstructured; only the oracle's positive answers are conclusive.
    Random {
        f: Vec<RawTerm>,
        gens: Vec<Vec<RawTerm>>,
    },
}

fn instance() -> impl Strategy<Value = Instance> {
    prop_oneof![
        2 => (raw_poly(2, 2, 3), 1u32..=3, raw_poly(2, 1, 2), raw_poly(2, 2, 2))
            .prop_map(|(f, k, r, h)| Instance::PowerInside { f, k, r, h }),
        2 => (
            (-2i64..=2, -2i64..=2),
            raw_poly(2, 2, 3),
            prop_oneof![-3i64..=-1, 1i64..=3],
            proptest::collection::vec((raw_poly(2, 1, 2), raw_poly(2, 1, 2)), 1..=2),
        )
            .prop_map(|(point, f, shift, cofactors)| Instance::MissesZero { point, f, shift, cofactors }),
        1 => (raw_poly(2, 2, 3), proptest::collection::vec(raw_poly(2, 2, 3), 1..=2))
            .prop_map(|(f, gens)| Instance::Random { f, gens }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn radical_membership_matches_power_oracle(inst in instance()) {
        let r = xy();
        let (ideal, f, expected) = match &inst {
            Instance::PowerInside { f, k, r: c, h } => {
                let f = build(&r, f);
                let h = build(&r, h);
                let g = &f.pow(*k) + &(&build(&r, c) * &h);
                (Ideal::new(&r, vec![g, h]).unwrap(), f, Some(true))
            }
            Instance::MissesZero { point, f, shift, cofactors } => {
                let (a, b) = (q(point.0), q(point.1));
                let lx = &r.gen(0) - &Polynomial::constant(&r, a.clone());
                let ly = &r.gen(1) - &Polynomial::constant(&r, b.clone());
                let gens = cofactors
                    .iter()
                    .map(|(c1, c2)| &(&build(&r, c1) * &lx) + &(&build(&r, c2) * &ly))
                    .collect();
                let f = build(&r, f);
                let value = f.evaluate(&[a, b]).unwrap();
                let f = &(&f - &Polynomial::constant(&r, value)) + &Polynomial::constant(&r, q(*shift));
                (Ideal::new(&r, gens).unwrap(), f, Some(false))
            }
            Instance::Random { f, gens } => {
                let gens = gens.iter().map(|g| build(&r, g)).collect();
                (Ideal::new(&r, gens).unwrap(), build(&r, f), None)
            }
        };
        let radical = ideal.radical_contains(&f).unwrap();
        let power = ideal.nilpotency_index(&f, POWER_ORACLE).unwrap();
        if power.is_some() {
            prop_assert!(radical, "f^{:?} ∈ I but radical membership failed", power);
        }
        if let Instance::PowerInside { k, .. } = inst {
            prop_assert!(power.is_some_and(|p| p <= k));
        }
        if let Some(expected) = expected {
            prop_assert_eq!(radical, expected);
        }
        if !radical {
            prop_assert!(power.is_none());
        }
    }

    #[test]
    fn ideal_membership_implies_radical_membership(
        gens in proptest::collection::vec(raw_poly(2, 2, 3), 1..=2),
        cofactors in proptest::collection::vec(raw_poly(2, 1, 2), 2),
    ) {
        let r = xy();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let f = gens
            .iter()
            .zip(&cofactors)
            .fold(Polynomial::zero(&r), |acc, (g, c)| &acc + &(g * &build(&r, c)));
        let ideal = Ideal::new(&r, gens).unwrap();
        prop_assert!(ideal.contains(&f).unwrap());
        prop_assert!(ideal.radical_contains(&f).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn elimination_is_monotone(
        gens in proptest::collection::vec(raw_poly(3, 2, 3), 1..=2),
        extra in raw_poly(3, 2, 3),
    ) {
        let r = xyz(MonomialOrder::Grevlex);
        let small: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let mut large = small.clone();
        large.push(build(&r, &extra));
        let small = Ideal::new(&r, small).unwrap();
        let large = Ideal::new(&r, large).unwrap();
        let e_small = small.eliminate(&["x"]).unwrap();
        let e_large = large.eliminate(&["x"]).unwrap();
        for g in e_small.generators() {
            prop_assert!(e_large.contains(&g.to_ring(e_large.ring()).unwrap()).unwrap());
            prop_assert!(g.support().iter().all(|&i| e_small.ring().variables()[i] != "x"));
            prop_assert!(small.contains(&g.to_ring(&r).unwrap()).unwrap());
        }
    }
}

fn targets() -> Vec<std::sync::Arc<AffineAlgebra>> {
    vec![
        AffineAlgebra::parse("P", &["x", "y"], &[]).unwrap(),
        AffineAlgebra::parse("N", &["x", "y"], &["y^2 - (x+1)"]).unwrap(),
        AffineAlgebra::parse("H", &["x", "y"], &["x*y - 1"]).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kernels_vanish_and_preimages_verify(
        which in 0usize..3,
        images in proptest::collection::vec(raw_poly(2, 2, 2), 2),
        p in raw_poly(2, 2, 3),
        other in raw_poly(2, 2, 3),
    ) {
        let target = targets().swap_remove(which);
        let tr = target.ring();
        let src = ring(&["u", "v"], MonomialOrder::Grevlex);
        let images: Vec<Polynomial> = images.iter().map(|i| build(tr, i)).collect();
        let rel = target.relations();

        let kernel = kernel_of_morphism(&src, &images, rel).unwrap();
        for g in kernel.generators() {
            prop_assert!(rel.contains(&g.substitute(tr, &images).unwrap()).unwrap());
        }

        let p = element(&src, &p);
        let b = p.substitute(tr, &images).unwrap();
        let pre = subalgebra_member(&b, &src, &images, rel).unwrap();
        prop_assert!(pre.is_some());
        for b in [b, build(tr, &other)] {
            if let Some(pre) = subalgebra_member(&b, &src, &images, rel).unwrap() {
                let back = pre.substitute(tr, &images).unwrap();
                prop_assert!(rel.contains(&(&back - &b)).unwrap());
            }
        }
        // the kernel is an ideal of relations: p and p + k agree on images
        if let Some(k) = kernel.generators().first() {
            let shifted = (&p + k).substitute(tr, &images).unwrap();
            prop_assert!(rel.contains(&(&shifted - &p.substitute(tr, &images).unwrap())).unwrap());
        }
    }
}

#[test]
fn rational_constants_are_units() {
    let r = xy();
    let i = Ideal::new(&r, vec![r.gen(0)]).unwrap();
    assert!(!i
        .radical_contains(&Polynomial::constant(&r, Rational::new(1.into(), 2.into())))
        .unwrap());
}
