#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use satura_core::poly::parse::parse_polynomial;
use satura_core::{
    AffineAlgebra, AlgebraMorphism, Monomial, MonomialOrder, PolyRing, Polynomial, Rational,
};

pub fn ring(vars: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
    PolyRing::new(vars.iter().copied(), order).unwrap()
}

pub fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Raw term data: (numerator, denominator, exponents).
pub type RawTerm = (i64, i64, Vec<u32>);

pub fn raw_term(vars: usize, max_deg: u32, coeff: i64) -> impl Strategy<Value = RawTerm> {
    (
        -coeff..=coeff,
        prop_oneof![4 => Just(1i64), 1 => 1i64..=3],
        proptest::collection::vec(0..=max_deg, vars),
    )
        .prop_filter_map("degree bound", move |(n, d, e)| {
            (e.iter().sum::<u32>() <= max_deg).then_some((n, d, e))
        })
}

pub fn raw_poly(
    vars: usize,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Vec<RawTerm>> {
    proptest::collection::vec(raw_term(vars, max_deg, 5), 0..=max_terms)
}

pub fn build(r: &Arc<PolyRing>, raw: &[RawTerm]) -> Polynomial {
    Polynomial::from_terms(
        r,
        raw.iter().map(|(n, d, e)| {
            (
                Rational::new((*n).into(), (*d).into()),
                Monomial::new(e.clone()),
            )
        }),
    )
    .unwrap()
}

pub fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Block { split: 1 }),
        Just(MonomialOrder::Block { split: 2 }),
    ]
}

pub fn xyz(order: MonomialOrder) -> Arc<PolyRing> {
    ring(&["x", "y", "z"], order)
}

pub fn xy() -> Arc<PolyRing> {
    ring(&["x", "y"], MonomialOrder::Grevlex)
}

/// Nodal curve `A`, its normalization `A'` and the punctured normalization `B`.
pub struct Nodal {
    pub a: Arc<AffineAlgebra>,
    pub a1: Arc<AffineAlgebra>,
    pub b: Arc<AffineAlgebra>,
}

pub fn nodal() -> Nodal {
    Nodal {
        a: AffineAlgebra::parse("A", &["x", "y"], &["y^2 - x^2*(x+1)"]).unwrap(),
        a1: AffineAlgebra::parse("A'", &["x", "z"], &["z^2 - (x+1)"]).unwrap(),
        b: AffineAlgebra::parse("B", &["x", "z", "s"], &["z^2 - (x+1)", "s*(z-1) - 1"]).unwrap(),
    }
}

pub fn node_to_normalization() -> AlgebraMorphism {
    let n = nodal();
    AlgebraMorphism::parse(&n.a, &n.a1, &["x", "x*z"]).unwrap()
}

pub fn node_to_punctured() -> AlgebraMorphism {
    let n = nodal();
    AlgebraMorphism::parse(&n.a, &n.b, &["x", "x*z"]).unwrap()
}

pub fn normalization_to_punctured() -> AlgebraMorphism {
    let n = nodal();
    AlgebraMorphism::parse(&n.a1, &n.b, &["x", "z"]).unwrap()
}

/// Cusp `v^2 = u^3` mapped to the line by `t^2, t^3`.
pub fn cusp() -> AlgebraMorphism {
    let a = AffineAlgebra::parse("Ac", &["u", "v"], &["v^2 - u^3"]).unwrap();
    let b = AffineAlgebra::parse("L", &["t"], &[]).unwrap();
    AlgebraMorphism::parse(&a, &b, &["t^2", "t^3"]).unwrap()
}

/// Random element of `ring` built from raw terms over its first variables.
pub fn element(r: &Arc<PolyRing>, raw: &[RawTerm]) -> Polynomial {
    let n = r.var_count();
    Polynomial::from_terms(
        r,
        raw.iter().map(|(c, d, e)| {
            let mut exps = vec![0; n];
            for (slot, &x) in exps.iter_mut().zip(e) {
                *slot = x;
            }
            (Rational::new((*c).into(), (*d).into()), Monomial::new(exps))
        }),
    )
    .unwrap()
}
