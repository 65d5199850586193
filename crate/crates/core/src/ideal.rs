//! Ideals and the decision procedures built on their Gröbner bases.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::poly::{same_ring, MonomialOrder, PolyRing, Polynomial};

/// Name of the auxiliary Rabinowitsch variable. User names cannot start with
/// `#`.
pub const RABINOWITSCH_VAR: &str = "#t";

/// Prefix of the tag variables standing for source generators in graph
/// ideals.
pub const TAG_PREFIX: &str = "#u.";

/// An ideal of a polynomial ring, with its reduced Gröbner basis computed on
/// first use.
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: OnceBox<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(Box::new(b.clone()));
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb,
        }
    }
}

impl core::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceBox::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            gb: OnceBox::new(),
        }
    }

    /// An ideal whose generators are known to be a reduced Gröbner basis.
    fn from_basis(basis: GroebnerBasis) -> Ideal {
        debug_assert!(basis.is_reduced());
        let ideal = Ideal {
            ring: basis.ring().clone(),
            generators: basis.elements().to_vec(),
            gb: OnceBox::new(),
        };
        let _ = ideal.gb.set(Box::new(basis));
        ideal
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis under the ring's order. Concurrent first calls
    /// may both compute it; uniqueness of reduced bases makes the race benign.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            let basis = groebner_basis(&self.ring, &self.generators)
                .expect("generators share the ideal's ring");
            assert!(
                self.generators.iter().all(|g| basis.contains(g).unwrap()),
                "Gröbner basis does not contain the generators"
            );
            Box::new(basis)
        })
    }

    pub fn is_proper(&self) -> bool {
        !self.groebner().is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner().normal_form(f)
    }

    /// `f ∈ I`.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `J ⊆ I`, checked on the generators of `J`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by mutual containment.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// `f ∈ √I`, decided as `1 ∈ I + (1 − t·f)` with a fresh variable `t`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if self.contains(f)? {
            return Ok(true);
        }
        let mut names: Vec<String> = self.ring.variables().to_vec();
        names.push(RABINOWITSCH_VAR.to_string());
        let order = match self.ring.order() {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::Grevlex,
        };
        let ext = PolyRing::new(names, order)?;
        let map: Vec<usize> = (0..self.ring.var_count()).collect();
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.rename(&ext, &map))
            .collect();
        let t = ext.gen(self.ring.var_count());
        gens.push(&Polynomial::one(&ext) - &(&t * &f.rename(&ext, &map)));
        Ok(groebner_basis(&ext, &gens)?.is_unit())
    }

    /// Smallest `k ≤ max_power` with `f^k ∈ I`, if any.
    pub fn nilpotency_index(&self, f: &Polynomial, max_power: u32) -> Result<Option<u32>> {
        let mut power = Polynomial::one(&self.ring);
        for k in 1..=max_power {
            power = self.normal_form(&(&power * f))?;
            if power.is_zero() {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// `I ∩ QQ[remaining variables]`, returned in the subring (ordered as in
    /// the original ring, grevlex).
    pub fn eliminate(&self, drop: &[&str]) -> Result<Ideal> {
        let mut drop_idx = Vec::with_capacity(drop.len());
        for name in drop {
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if !drop_idx.contains(&i) {
                drop_idx.push(i);
            }
        }
        drop_idx.sort_unstable();
        let keep: Vec<usize> = (0..self.ring.var_count())
            .filter(|i| !drop_idx.contains(i))
            .collect();
        let names = self.ring.variables();
        let sub = PolyRing::new(
            keep.iter().map(|&i| names[i].clone()),
            MonomialOrder::Grevlex,
        )?;
        if drop_idx.is_empty() {
            let map: Vec<usize> = (0..names.len()).collect();
            let gens = self
                .generators
                .iter()
                .map(|g| g.rename(&sub, &map))
                .collect();
            return Ideal::new(&sub, gens);
        }
        let block_names = drop_idx.iter().chain(&keep).map(|&i| names[i].clone());
        let block = PolyRing::new(
            block_names,
            MonomialOrder::Block {
                split: drop_idx.len(),
            },
        )?;
        let mut to_block = alloc::vec![0usize; names.len()];
        for (pos, &i) in drop_idx.iter().chain(&keep).enumerate() {
            to_block[i] = pos;
        }
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.rename(&block, &to_block))
            .collect();
        let basis = groebner_basis(&block, &gens)?;
        Ok(restrict_to_tail(&basis, drop_idx.len(), &sub))
    }
}

/// Keeps the basis elements free of the first `split` variables and moves
/// them into `sub` (whose variables are the remaining ones, in order). With a
/// block order whose tail block is grevlex, the survivors are the reduced
/// grevlex basis of the elimination ideal.
fn restrict_to_tail(basis: &GroebnerBasis, split: usize, sub: &Arc<PolyRing>) -> Ideal {
    let n = basis.ring().var_count();
    let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(split)).collect();
    let kept: Vec<Polynomial> = basis
        .elements()
        .iter()
        .filter(|g| g.support().iter().all(|&i| i >= split))
        .map(|g| g.rename(sub, &map))
        .collect();
    if sub.order() == MonomialOrder::Grevlex {
        Ideal::from_basis(GroebnerBasis::from_elements_unchecked(sub, kept).reduce())
    } else {
        Ideal::new(sub, kept).expect("same ring")
    }
}

/// The graph ideal `I_target + (u_i − f_i)` of a ring map
/// `QQ[u] -> QQ[y]/I_target`, `u_i ↦ f_i`, with its Gröbner basis under a
/// block order eliminating the target variables.
pub struct GraphIdeal {
    source: Arc<PolyRing>,
    target: Arc<PolyRing>,
    ring: Arc<PolyRing>,
    basis: GroebnerBasis,
}

impl GraphIdeal {
    pub fn new(
        source: &Arc<PolyRing>,
        images: &[Polynomial],
        target_relations: &Ideal,
    ) -> Result<GraphIdeal> {
        let target = target_relations.ring();
        if images.len() != source.var_count() {
            return Err(Error::ArityMismatch {
                expected: source.var_count(),
                found: images.len(),
            });
        }
        if images.iter().any(|f| !same_ring(f.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        let m = target.var_count();
        let names = target.variables().iter().cloned().chain(
            source
                .variables()
                .iter()
                .map(|v| format!("{TAG_PREFIX}{v}")),
        );
        let ring = PolyRing::new(names, MonomialOrder::Block { split: m })?;
        let embed: Vec<usize> = (0..m).collect();
        let mut gens: Vec<Polynomial> = target_relations
            .generators()
            .iter()
            .map(|g| g.rename(&ring, &embed))
            .collect();
        for (i, f) in images.iter().enumerate() {
            gens.push(&ring.gen(m + i) - &f.rename(&ring, &embed));
        }
        let basis = groebner_basis(&ring, &gens)?;
        Ok(GraphIdeal {
            source: source.clone(),
            target: target.clone(),
            ring,
            basis,
        })
    }

    /// Kernel of the map, as an ideal of the source ring.
    pub fn kernel(&self) -> Ideal {
        let m = self.target.var_count();
        let sub = PolyRing::new(
            self.source.variables().iter().cloned(),
            MonomialOrder::Grevlex,
        )
        .expect("source names are valid");
        let ideal = restrict_to_tail(&self.basis, m, &sub);
        if same_ring(&sub, &self.source) {
            return ideal;
        }
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.to_ring(&self.source).expect("same variables"))
            .collect();
        Ideal::new(&self.source, gens).expect("same ring")
    }

    /// A preimage `p` with `p(images) ≡ b` modulo the target relations, if
    /// `b` lies in the image subalgebra.
    pub fn preimage(&self, b: &Polynomial) -> Result<Option<Polynomial>> {
        if !same_ring(b.ring(), &self.target) {
            return Err(Error::RingMismatch);
        }
        let m = self.target.var_count();
        let embed: Vec<usize> = (0..m).collect();
        let nf = self.basis.normal_form(&b.rename(&self.ring, &embed))?;
        if nf.support().iter().any(|&i| i < m) {
            return Ok(None);
        }
        let map: Vec<usize> = (0..self.ring.var_count())
            .map(|i| i.saturating_sub(m))
            .collect();
        Ok(Some(nf.rename(&self.source, &map)))
    }
}

/// Kernel of `QQ[source] -> target`, `u_i ↦ images[i]`:
/// `(I_target + (u_i − f_i)) ∩ QQ[u]`.
pub fn kernel_of_morphism(
    source: &Arc<PolyRing>,
    images: &[Polynomial],
    target_relations: &Ideal,
) -> Result<Ideal> {
    Ok(GraphIdeal::new(source, images, target_relations)?.kernel())
}

/// Preimage of `b` under `QQ[source] -> target`, if `b` is in the image.
pub fn subalgebra_member(
    b: &Polynomial,
    source: &Arc<PolyRing>,
    images: &[Polynomial],
    target_relations: &Ideal,
) -> Result<Option<Polynomial>> {
    GraphIdeal::new(source, images, target_relations)?.preimage(b)
}
