//! Finitely presented algebras `QQ[u]/I` and the morphisms between them.
//!
//! A morphism `A -> B` is the pullback of a morphism of varieties
//! `Y -> X`; it is an extension exactly when `Y -> X` is dominant.
//!
//! Relation ideals are trusted to be radical, and prime wherever a generic
//! point is used (generic degree, birationality). Neither is verified.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::{OnceBool, OnceBox};

use crate::error::{Error, Result};
use crate::ideal::{GraphIdeal, Ideal};
use crate::poly::parse::parse_polynomial;
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::saturation::TensorSquare;

/// Name of the variable standing for the element under study in integrality
/// and degree computations.
const ELEMENT_VAR: &str = "#T";

/// Coordinate ring `QQ[u1..un]/I` of an affine variety.
#[derive(Debug)]
pub struct AffineAlgebra {
    label: String,
    relations: Ideal,
}

impl AffineAlgebra {
    /// Fails with [`Error::ImproperIdeal`] when the relations generate the
    /// unit ideal.
    pub fn new(
        label: impl Into<String>,
        ring: &Arc<PolyRing>,
        relations: Vec<Polynomial>,
    ) -> Result<Arc<AffineAlgebra>> {
        let label = label.into();
        let relations = Ideal::new(ring, relations)?;
        if !relations.is_proper() {
            return Err(Error::ImproperIdeal(label));
        }
        Ok(Arc::new(AffineAlgebra { label, relations }))
    }

    /// Builds an algebra from variable names and relation texts, in grevlex.
    pub fn parse(label: &str, vars: &[&str], relations: &[&str]) -> Result<Arc<AffineAlgebra>> {
        let ring = PolyRing::new(vars.iter().copied(), MonomialOrder::Grevlex)?;
        let rels = relations
            .iter()
            .map(|r| parse_polynomial(&ring, r))
            .collect::<Result<Vec<_>>>()?;
        AffineAlgebra::new(label, &ring, rels)
    }

    pub fn free(label: impl Into<String>, ring: &Arc<PolyRing>) -> Arc<AffineAlgebra> {
        Arc::new(AffineAlgebra {
            label: label.into(),
            relations: Ideal::zero(ring),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.relations.ring()
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn variables(&self) -> &[String] {
        self.ring().variables()
    }

    /// Canonical representative of `f` in the quotient.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.relations.normal_form(f)
    }

    pub fn parse_element(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(self.ring(), text)
    }

    /// Same ambient ring and same relation ideal.
    pub fn same_presentation(&self, other: &AffineAlgebra) -> bool {
        core::ptr::eq(self, other)
            || (same_ring(self.ring(), other.ring())
                && self.relations.same_ideal(&other.relations).unwrap_or(false))
    }
}

/// A morphism `source -> target` given by the images of the source
/// variables, i.e. the pullback along a morphism of varieties.
pub struct AlgebraMorphism {
    source: Arc<AffineAlgebra>,
    target: Arc<AffineAlgebra>,
    images: Vec<Polynomial>,
    graph: OnceBox<GraphIdeal>,
    extension: OnceBool,
    tensor: OnceBox<TensorSquare>,
}

impl core::fmt::Debug for AlgebraMorphism {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("AlgebraMorphism")
            .field("source", &self.source.label)
            .field("target", &self.target.label)
            .field("images", &self.images)
            .finish()
    }
}

impl AlgebraMorphism {
    /// Checks arity and that every source relation maps into the target
    /// relations.
    pub fn new(
        source: &Arc<AffineAlgebra>,
        target: &Arc<AffineAlgebra>,
        images: Vec<Polynomial>,
    ) -> Result<AlgebraMorphism> {
        let n = source.ring().var_count();
        if images.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: images.len(),
            });
        }
        if images.iter().any(|f| !same_ring(f.ring(), target.ring())) {
            return Err(Error::RingMismatch);
        }
        for r in source.relations().generators() {
            let pushed = r.substitute(target.ring(), &images)?;
            if !target.relations().contains(&pushed)? {
                return Err(Error::NotWellDefined {
                    relation: r.to_string(),
                });
            }
        }
        Ok(AlgebraMorphism {
            source: source.clone(),
            target: target.clone(),
            images,
            graph: OnceBox::new(),
            extension: OnceBool::new(),
            tensor: OnceBox::new(),
        })
    }

    pub fn parse(
        source: &Arc<AffineAlgebra>,
        target: &Arc<AffineAlgebra>,
        images: &[&str],
    ) -> Result<AlgebraMorphism> {
        let images = images
            .iter()
            .map(|s| target.parse_element(s))
            .collect::<Result<Vec<_>>>()?;
        AlgebraMorphism::new(source, target, images)
    }

    pub fn identity(algebra: &Arc<AffineAlgebra>) -> AlgebraMorphism {
        AlgebraMorphism::new(algebra, algebra, algebra.ring().gens())
            .expect("identity is well defined")
    }

    pub fn source(&self) -> &Arc<AffineAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AffineAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// `next ∘ self` for `self: A -> C` and `next: C -> B`.
    pub fn then(&self, next: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if !self.target.same_presentation(&next.source) {
            return Err(Error::CompositionMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|f| {
                let f = f.to_ring(next.source.ring())?;
                f.substitute(next.target.ring(), &next.images)
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraMorphism::new(&self.source, &next.target, images)
    }

    /// Image of a source element in the target.
    pub fn apply(&self, a: &Polynomial) -> Result<Polynomial> {
        let a = a.to_ring(self.source.ring())?;
        a.substitute(self.target.ring(), &self.images)
    }

    pub(crate) fn graph(&self) -> &GraphIdeal {
        self.graph.get_or_init(|| {
            Box::new(
                GraphIdeal::new(self.source.ring(), &self.images, self.target.relations())
                    .expect("images were validated"),
            )
        })
    }

    /// Kernel of `QQ[source vars] -> target`.
    pub fn kernel(&self) -> Ideal {
        self.graph().kernel()
    }

    /// Dominance: the kernel equals the source relations.
    pub fn is_extension(&self) -> bool {
        self.extension.get_or_init(|| {
            self.source
                .relations()
                .contains_ideal(&self.kernel())
                .expect("kernel lives in the source ring")
        })
    }

    pub(crate) fn require_extension(&self) -> Result<()> {
        if self.is_extension() {
            Ok(())
        } else {
            Err(Error::NotAnExtension)
        }
    }

    /// A source element mapping to `b`, if `b` lies in the image.
    pub fn preimage(&self, b: &Polynomial) -> Result<Option<Polynomial>> {
        self.graph().preimage(b)
    }

    pub(crate) fn tensor_square_cached(&self) -> Result<&TensorSquare> {
        self.require_extension()?;
        if let Some(t) = self.tensor.get() {
            return Ok(t);
        }
        let t = TensorSquare::build(self)?;
        Ok(self.tensor.get_or_init(|| Box::new(t)))
    }

    fn check_target_element(&self, b: &Polynomial) -> Result<()> {
        if same_ring(b.ring(), self.target.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Kernel of `QQ[#T, u] -> target`, `#T ↦ b`, `u ↦ images`, as an ideal
    /// of a lex ring with `#T` greatest.
    pub(crate) fn element_relations(&self, b: &Polynomial) -> Result<Ideal> {
        self.check_target_element(b)?;
        let names = core::iter::once(ELEMENT_VAR.to_string())
            .chain(self.source.variables().iter().cloned());
        let ring = PolyRing::new(names, MonomialOrder::Lex)?;
        let mut images = Vec::with_capacity(self.images.len() + 1);
        images.push(b.clone());
        images.extend(self.images.iter().cloned());
        Ok(GraphIdeal::new(&ring, &images, self.target.relations())?.kernel())
    }

    /// True when `b` satisfies a monic polynomial over the image of the
    /// source, certified by a pure power of `#T` among the leading monomials
    /// of the lex basis of its relations.
    pub fn is_integral_element(&self, b: &Polynomial) -> Result<bool> {
        self.require_extension()?;
        let rel = self.element_relations(b)?;
        Ok(rel.groebner().elements().iter().any(|g| {
            let e = g.leading_monomial().unwrap().exponents();
            e[0] > 0 && e[1..].iter().all(|&x| x == 0)
        }))
    }

    /// First target generator that is not integral, if any.
    pub fn first_non_integral_generator(&self) -> Result<Option<usize>> {
        self.require_extension()?;
        for (i, y) in self.target.ring().gens().iter().enumerate() {
            if !self.is_integral_element(y)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Integral, hence finite: morphisms here are always of finite type.
    pub fn is_integral(&self) -> Result<bool> {
        Ok(self.first_non_integral_generator()?.is_none())
    }

    pub fn is_finite(&self) -> Result<bool> {
        self.is_integral()
    }

    /// Degree of `b` over the fraction field of the source.
    ///
    /// Reads the lex basis of the relations of `b` at the generic point: the
    /// smallest `#T`-degree among elements whose leading `#T`-coefficient is
    /// not in the source relations. Needs prime relations (trusted).
    pub fn generic_degree(&self, b: &Polynomial) -> Result<u32> {
        self.require_extension()?;
        let rel = self.element_relations(b)?;
        let source_ring = self.source.ring();
        let n = source_ring.var_count();
        let mut best: Option<u32> = None;
        for g in rel.groebner().elements() {
            let d = g.degree_in(0);
            if d == 0 || best.is_some_and(|b| b <= d) {
                continue;
            }
            let lc = Polynomial::from_terms(
                source_ring,
                g.terms()
                    .iter()
                    .filter(|t| t.monomial.exponents()[0] == d)
                    .map(|t| {
                        let e = t.monomial.exponents()[1..=n].to_vec();
                        (t.coeff.clone(), Monomial::new(e))
                    }),
            )?;
            if !self.source.relations().contains(&lc)? {
                best = Some(d);
            }
        }
        best.ok_or(Error::Transcendental)
    }

    /// Every target generator has generic degree one.
    pub fn is_birational(&self) -> Result<bool> {
        self.require_extension()?;
        for y in self.target.ring().gens() {
            match self.generic_degree(&y) {
                Ok(1) => {}
                Ok(_) | Err(Error::Transcendental) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn nodal() -> (Arc<AffineAlgebra>, Arc<AffineAlgebra>, Arc<AffineAlgebra>) {
        let a = AffineAlgebra::parse("A", &["x", "y"], &["y^2 - x^2*(x+1)"]).unwrap();
        let a1 = AffineAlgebra::parse("A'", &["x", "z"], &["z^2 - (x+1)"]).unwrap();
        let b =
            AffineAlgebra::parse("B", &["x", "z", "s"], &["z^2 - (x+1)", "s*(z-1) - 1"]).unwrap();
        (a, a1, b)
    }

    #[test]
    fn make_algebra() {
        let (a, _, _) = nodal();
        assert_eq!(a.variables(), &["x", "y"]);
        assert!(matches!(
            AffineAlgebra::parse("bad", &["x"], &["x", "x-1"]),
            Err(Error::ImproperIdeal(_))
        ));
        let free = AffineAlgebra::parse("F", &["t"], &[]).unwrap();
        assert!(free.relations().generators().is_empty());
    }

    #[test]
    fn make_morphism() {
        let (a, a1, _) = nodal();
        assert!(AlgebraMorphism::parse(&a, &a1, &["x", "x*z"]).is_ok());
        match AlgebraMorphism::parse(&a, &a1, &["x", "z"]) {
            Err(Error::NotWellDefined { relation }) => assert_eq!(relation, "-x^3 - x^2 + y^2"),
            other => panic!("unexpected {other:?}"),
        }
        let id = AlgebraMorphism::identity(&a);
        assert!(id.is_extension());
        assert!(matches!(
            AlgebraMorphism::parse(&a, &a1, &["x"]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn extension_detection() {
        let (a, a1, _) = nodal();
        assert!(AlgebraMorphism::parse(&a, &a1, &["x", "x*z"])
            .unwrap()
            .is_extension());
        let uv = AffineAlgebra::parse("P2", &["u", "v"], &[]).unwrap();
        let line = AffineAlgebra::parse("L", &["x"], &[]).unwrap();
        let flat = AlgebraMorphism::parse(&uv, &line, &["x", "0"]).unwrap();
        assert!(!flat.is_extension());
        assert_eq!(flat.is_integral(), Err(Error::NotAnExtension));
    }

    #[test]
    fn integrality() {
        let (a, a1, b) = nodal();
        let norm = AlgebraMorphism::parse(&a, &a1, &["x", "x*z"]).unwrap();
        assert!(norm
            .is_integral_element(&a1.parse_element("z").unwrap())
            .unwrap());
        assert!(norm.is_integral().unwrap());
        let punct = AlgebraMorphism::parse(&a, &b, &["x", "x*z"]).unwrap();
        assert!(!punct
            .is_integral_element(&b.parse_element("s").unwrap())
            .unwrap());
        assert!(!punct.is_integral().unwrap());
        assert_eq!(punct.first_non_integral_generator().unwrap(), Some(2));
        let img = punct
            .apply(&a.parse_element("x*y^2 - 3*y + 1").unwrap())
            .unwrap();
        assert!(punct.is_integral_element(&img).unwrap());
        assert!(AlgebraMorphism::identity(&a).is_integral().unwrap());
    }

    #[test]
    fn generic_degrees() {
        let (a, a1, _) = nodal();
        let norm = AlgebraMorphism::parse(&a, &a1, &["x", "x*z"]).unwrap();
        assert_eq!(
            norm.generic_degree(&a1.parse_element("z").unwrap())
                .unwrap(),
            1
        );
        assert!(norm.is_birational().unwrap());

        let u = AffineAlgebra::parse("U", &["u"], &[]).unwrap();
        let t = AffineAlgebra::parse("T", &["t"], &[]).unwrap();
        let square = AlgebraMorphism::parse(&u, &t, &["t^2"]).unwrap();
        assert_eq!(
            square
                .generic_degree(&t.parse_element("t").unwrap())
                .unwrap(),
            2
        );
        assert!(!square.is_birational().unwrap());

        let cusp = AffineAlgebra::parse("C", &["u", "v"], &["v^2 - u^3"]).unwrap();
        let cusp_norm = AlgebraMorphism::parse(&cusp, &t, &["t^2", "t^3"]).unwrap();
        assert_eq!(
            cusp_norm
                .generic_degree(&t.parse_element("t").unwrap())
                .unwrap(),
            1
        );
        assert!(AlgebraMorphism::identity(&a).is_birational().unwrap());

        let point = AffineAlgebra::parse("pt", &[], &[]).unwrap();
        let to_line = AlgebraMorphism::parse(&point, &t, &[]).unwrap();
        assert_eq!(
            to_line.generic_degree(&t.parse_element("t").unwrap()),
            Err(Error::Transcendental)
        );
    }

    #[test]
    fn composition() {
        let (a, a1, b) = nodal();
        let f = AlgebraMorphism::parse(&a, &a1, &["x", "x*z"]).unwrap();
        let g = AlgebraMorphism::parse(&a1, &b, &["x", "z"]).unwrap();
        let h = f.then(&g).unwrap();
        assert_eq!(h.images()[1], b.parse_element("x*z").unwrap());
        assert!(h.is_extension());
        assert_eq!(g.then(&f).unwrap_err(), Error::CompositionMismatch);
    }
}
