//! Normal forms and Gröbner bases (Buchberger with Gebauer–Möller pair
//! elimination).

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

/// Which critical pair Buchberger processes next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PairStrategy {
    /// Smallest lcm in the monomial order first.
    #[default]
    Normal,
    /// Smallest sugar degree first. Suited to degree orders.
    Sugar,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GbConfig {
    pub strategy: PairStrategy,
}

/// A Gröbner basis of an ideal with respect to the order of `ring`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps elements the caller knows to form a Gröbner basis.
    pub fn from_elements_unchecked(ring: &Arc<PolyRing>, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elements,
            reduced: false,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements
            .iter()
            .any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce_full(f, &self.elements))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| {
                let s = s_polynomial(&g[i], &g[j]).expect("basis elements are nonzero");
                reduce_full(&s, g).is_zero()
            })
        })
    }

    /// The reduced basis: monic, inter-reduced, sorted by ascending leading
    /// monomial. Unique for the ideal and the order.
    pub fn reduce(&self) -> GroebnerBasis {
        if self.reduced {
            return self.clone();
        }
        let order = self.ring.order();
        let mut gs: Vec<Polynomial> = self
            .elements
            .iter()
            .filter(|g| !g.is_zero())
            .map(Polynomial::monic)
            .collect();
        gs.sort_by(|a, b| order.cmp(lm(a), lm(b)));
        // minimal basis: drop elements whose leading monomial is divisible by
        // an earlier (smaller or equal) one
        let mut minimal: Vec<Polynomial> = Vec::with_capacity(gs.len());
        for g in gs {
            if !minimal.iter().any(|m| lm(m).divides(lm(&g))) {
                minimal.push(g);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            out.push(reduce_full(&minimal[i], &others).monic());
        }
        out.sort_by(|a, b| order.cmp(lm(a), lm(b)));
        GroebnerBasis {
            ring: self.ring.clone(),
            elements: out,
            reduced: true,
        }
    }
}

fn lm(p: &Polynomial) -> &Monomial {
    p.leading_monomial().expect("nonzero polynomial")
}

/// Full reduction of `f` by `basis`; each step uses the lowest-index element
/// whose leading monomial divides the current term.
fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let basis: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.ring());
    while let Some(lt) = p.leading_term() {
        let hit = basis
            .iter()
            .find_map(|g| lt.monomial.checked_div(lm(g)).map(|q| (*g, q)));
        match hit {
            Some((g, q)) => {
                let c = -(&lt.coeff / g.leading_coeff().unwrap());
                p = p.add_scaled(&c, &q, g);
            }
            None => {
                let t = p.pop_leading().unwrap();
                rem.push_trailing(t);
            }
        }
    }
    rem
}

/// Normal form of `f` modulo `basis`.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

/// `S(f, g) = (lcm/lt(f))·f − (lcm/lt(g))·g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
        return Err(Error::ZeroPolynomial);
    };
    let l = tf.monomial.lcm(&tg.monomial);
    let qf = l.checked_div(&tf.monomial).unwrap();
    let qg = l.checked_div(&tg.monomial).unwrap();
    let left = f.mul_monomial(&qf).scale(&tf.coeff.recip());
    Ok(left.add_scaled(&-tg.coeff.recip(), &qg, g))
}

/// Buchberger's algorithm under `order`. Generators are moved into a copy of
/// `ring` carrying `order` when it differs from the ring's own order.
pub fn buchberger(
    ring: &Arc<PolyRing>,
    generators: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    let ring = if ring.order() == order {
        ring.clone()
    } else {
        ring.with_order(order)?
    };
    let gens = generators
        .iter()
        .map(|g| g.to_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    Ok(buchberger_with(&ring, &gens, GbConfig::default()))
}

/// Reduced Gröbner basis of `generators` under the ring's own order.
pub fn groebner_basis(ring: &Arc<PolyRing>, generators: &[Polynomial]) -> Result<GroebnerBasis> {
    if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(buchberger_with(ring, generators, GbConfig::default()).reduce())
}

/// Buchberger's algorithm in `ring`'s order; generators must already live
/// in `ring`. The result is a (not necessarily reduced) Gröbner basis.
pub fn buchberger_with(
    ring: &Arc<PolyRing>,
    generators: &[Polynomial],
    config: GbConfig,
) -> GroebnerBasis {
    let mut state = State {
        order: ring.order(),
        strategy: config.strategy,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut gens = interreduce(generators);
    gens.sort_by(|a, b| state.order.cmp(lm(a), lm(b)));
    for g in &gens {
        debug_assert!(same_ring(g.ring(), ring));
        if g.is_constant() {
            return unit_basis(ring);
        }
        let deg = g.total_degree().unwrap();
        state.insert(g.primitive(), deg);
    }
    while let Some(pair) = state.next_pair() {
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j]).unwrap();
        // reducers sorted by ascending leading monomial keep coefficients small
        let mut active: Vec<Polynomial> = state
            .polys
            .iter()
            .zip(&state.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.clone())
            .collect();
        active.sort_by(|a, b| state.order.cmp(lm(a), lm(b)));
        let h = reduce_full(&s, &active);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(ring);
        }
        state.insert(h.primitive(), pair.sugar);
    }
    let elements = state
        .polys
        .into_iter()
        .zip(state.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    GroebnerBasis {
        ring: ring.clone(),
        elements,
        reduced: false,
    }
}

/// Replaces each generator by its remainder modulo the earlier ones until the
/// list stops changing.
fn interreduce(generators: &[Polynomial]) -> Vec<Polynomial> {
    let mut current: Vec<Polynomial> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::primitive)
        .collect();
    loop {
        let mut next: Vec<Polynomial> = Vec::with_capacity(current.len());
        for (i, g) in current.iter().enumerate() {
            let r = reduce_full(g, &current[..i]);
            if !r.is_zero() {
                next.push(r.primitive());
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

fn unit_basis(ring: &Arc<PolyRing>) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        elements: alloc::vec![Polynomial::constant(ring, Rational::from_integer(1.into()))],
        reduced: true,
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    order: MonomialOrder,
    strategy: PairStrategy,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn pair_key_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        let primary = match self.strategy {
            PairStrategy::Normal => Ordering::Equal,
            PairStrategy::Sugar => a.sugar.cmp(&b.sugar),
        };
        primary
            .then_with(|| self.order.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| self.pair_key_cmp(&self.pairs[a], &self.pairs[b]))?;
        Some(self.pairs.swap_remove(best))
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let s = |k: usize| self.sugar[k] + lcm.degree() - lm(&self.polys[k]).degree();
        s(i).max(s(j))
    }

    /// Gebauer–Möller update for the new element `h`.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let hi = self.polys.len();
        let lm_h = lm(&h).clone();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(false);

        let candidates: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, lm_h.lcm(lm(&self.polys[g]))))
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in candidates.iter().enumerate() {
            let coprime = lm_h.is_coprime(lm(&self.polys[*g]));
            let dominated = candidates[k + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        // product criterion
        kept.retain(|(g, _)| !lm_h.is_coprime(lm(&self.polys[*g])));
        // chain criterion against old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !lm_h.divides(&p.lcm)
                || lm_h.lcm(lm(&polys[p.i])) == p.lcm
                || lm_h.lcm(lm(&polys[p.j])) == p.lcm
        });
        for (g, l) in kept {
            let sugar = self.pair_sugar(g, hi, &l);
            self.pairs.push(Pair {
                i: g,
                j: hi,
                lcm: l,
                sugar,
            });
        }
        for g in 0..hi {
            if self.active[g] && lm_h.divides(lm(&self.polys[g])) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }
}
