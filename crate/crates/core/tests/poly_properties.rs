mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use satura_core::{Monomial, Polynomial};

fn canonical(f: &Polynomial) -> bool {
    let order = f.ring().order();
    f.terms().iter().all(|t| t.coeff != q(0))
        && f.terms()
            .windows(2)
            .all(|w| order.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(
        order in order_strategy(),
        a in raw_poly(3, 3, 4),
        b in raw_poly(3, 3, 4),
        c in raw_poly(3, 3, 4),
    ) {
        let r = xyz(order);
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert!(canonical(&f) && canonical(&(&f + &g)) && canonical(&(&f * &g)));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&(&f - &g) + &g, f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in raw_poly(3, 3, 4),
        b in raw_poly(3, 3, 4),
        point in proptest::collection::vec(-4i64..=4, 3),
    ) {
        let r = xyz(Default::default());
        let (f, g) = (build(&r, &a), build(&r, &b));
        let pt: Vec<_> = point.into_iter().map(q).collect();
        let (fv, gv) = (f.evaluate(&pt).unwrap(), g.evaluate(&pt).unwrap());
        prop_assert_eq!((&f * &g).evaluate(&pt).unwrap(), &fv * &gv);
        prop_assert_eq!((&f + &g).evaluate(&pt).unwrap(), fv + gv);
    }

    #[test]
    fn order_laws(
        order in order_strategy(),
        a in proptest::collection::vec(0u32..4, 3),
        b in proptest::collection::vec(0u32..4, 3),
        c in proptest::collection::vec(0u32..4, 3),
    ) {
        let (a, b, c) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        let ab = order.compare(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), order.compare(&b, &a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
        if ab != Ordering::Less && order.cmp(&b, &c) != Ordering::Less {
            prop_assert_ne!(order.cmp(&a, &c), Ordering::Less);
        }
        if a.divides(&b) {
            prop_assert_ne!(ab, Ordering::Greater);
        }
        prop_assert_ne!(order.cmp(&Monomial::one(3), &a), Ordering::Greater);
    }

    #[test]
    fn display_round_trips(order in order_strategy(), a in raw_poly(3, 3, 5)) {
        let r = xyz(order);
        let f = build(&r, &a);
        prop_assert_eq!(p(&r, &f.to_string()), f);
    }
}
