//! Composite verdicts on a morphism and the theorem-consistency classifier.
//!
//! For an integral extension the seminormalization of `A` in `B` equals the
//! saturation, so subintegrality and seminormality reduce to saturation
//! membership. Nothing here is approximated: non-integral morphisms are
//! refused where only the integral route is exact, and positive seminormality
//! verdicts are bounded unless they collapse for structural reasons.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{AffineAlgebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::saturation::{first_unsaturated_generator, in_saturation, saturation_scan, ScanElement};

/// Whether `A` equals its seminormalization in `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeminormalStatus {
    /// Not seminormal: the element lies in the seminormalization but not in
    /// `A`.
    No(Polynomial),
    /// Nothing outside `A` found among elements of degree ≤ the bound.
    YesUpTo(u32),
    /// Every target generator comes from `A`.
    Yes,
}

impl SeminormalStatus {
    pub fn is_no(&self) -> bool {
        matches!(self, SeminormalStatus::No(_))
    }
}

/// Subintegral = integral, bijective and equiresidual; decided as integral
/// and radicial. Non-integral morphisms are refused.
pub fn is_subintegral(m: &AlgebraMorphism) -> Result<bool> {
    m.require_extension()?;
    if !m.is_integral()? {
        return Err(Error::NotIntegral);
    }
    Ok(first_unsaturated_generator(m)?.is_none())
}

fn all_generators_in_image(m: &AlgebraMorphism) -> Result<bool> {
    for y in m.target().ring().gens() {
        if m.preimage(&y)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Isomorphism: an extension whose target generators all have preimages.
pub fn is_isomorphism(m: &AlgebraMorphism) -> Result<bool> {
    Ok(m.is_extension() && all_generators_in_image(m)?)
}

/// Seminormality of `A` in `B`, exact only in the negative and collapsed
/// cases.
///
/// For an integral `m` every scanned saturation element outside `A` is a
/// certificate. Otherwise the saturation may be larger than the
/// seminormalization, so a candidate `b` only counts when it is integral and
/// saturated in the subextension `A -> A[b]`.
pub fn seminormality_status(m: &AlgebraMorphism, degree_bound: u32) -> Result<SeminormalStatus> {
    m.require_extension()?;
    if all_generators_in_image(m)? {
        return Ok(SeminormalStatus::Yes);
    }
    let scan = saturation_scan(m, degree_bound)?;
    let integral = m.is_integral()?;
    for found in scan.outside_image() {
        if integral || subintegral_over_source(m, found)? {
            return Ok(SeminormalStatus::No(found.element.clone()));
        }
    }
    Ok(SeminormalStatus::YesUpTo(degree_bound))
}

/// `b` integral over `A` and `A -> A[b]` radicial; then `b` lies in the
/// seminormalization of `A` in `A[b] ⊆ B`.
fn subintegral_over_source(m: &AlgebraMorphism, found: &ScanElement) -> Result<bool> {
    let b = &found.element;
    if !m.is_integral_element(b)? {
        return Ok(false);
    }
    let rel = m.element_relations(b)?;
    let ring = crate::poly::PolyRing::new(
        rel.ring().variables().iter().cloned(),
        crate::poly::MonomialOrder::Grevlex,
    )?;
    let gens = rel
        .generators()
        .iter()
        .map(|g| g.to_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    let adjoined = AffineAlgebra::new(format!("{}[{}]", m.source().label(), b), &ring, gens)?;
    let images: Vec<Polynomial> = (1..ring.var_count()).map(|i| ring.gen(i)).collect();
    let inclusion = AlgebraMorphism::new(m.source(), &adjoined, images)?;
    in_saturation(&ring.gen(0), &inclusion)
}

/// Continuity of the rational function `f` on the closed points of `X`,
/// given the normalization `X' -> X` through its pullback `norm`: `f` is
/// continuous exactly when it lies in the seminormalization, which for a
/// finite map is the saturation.
pub fn regulous_member(
    f: &Polynomial,
    x: &Arc<AffineAlgebra>,
    norm: &AlgebraMorphism,
) -> Result<bool> {
    if !x.same_presentation(norm.source()) {
        return Err(Error::NotANormalization(
            "its source is not the given algebra".to_string(),
        ));
    }
    if !norm.is_extension() {
        return Err(Error::NotANormalization("it is not dominant".to_string()));
    }
    if !norm.is_integral()? {
        return Err(Error::NotANormalization("it is not finite".to_string()));
    }
    if !norm.is_birational()? {
        return Err(Error::NotANormalization("it is not birational".to_string()));
    }
    in_saturation(f, norm)
}

/// All flags of a morphism plus the theorem-consistency checks between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub well_defined: bool,
    pub extension: bool,
    pub finite: bool,
    pub integral: bool,
    pub birational: bool,
    pub radicial: bool,
    pub subintegral: bool,
    pub isomorphism: bool,
    /// `None` when the morphism is not an extension.
    pub seminormal_in: Option<SeminormalStatus>,
    /// Generic degree of each target generator; `None` when transcendental.
    pub generic_degrees: Vec<(String, Option<u32>)>,
    /// First target generator that is not integral.
    pub non_integral_witness: Option<String>,
    /// First target generator outside the saturation.
    pub unsaturated_witness: Option<String>,
    /// Broken implications; nonempty only on an implementation bug.
    pub consistency_violations: Vec<String>,
}

pub fn classify(m: &AlgebraMorphism, degree_bound: u32) -> Result<ClassificationReport> {
    let names = m.target().variables();
    let mut report = ClassificationReport {
        well_defined: true,
        extension: m.is_extension(),
        finite: false,
        integral: false,
        birational: false,
        radicial: false,
        subintegral: false,
        isomorphism: false,
        seminormal_in: None,
        generic_degrees: Vec::new(),
        non_integral_witness: None,
        unsaturated_witness: None,
        consistency_violations: Vec::new(),
    };
    if report.extension {
        let non_integral = m.first_non_integral_generator()?;
        report.integral = non_integral.is_none();
        report.finite = report.integral;
        report.non_integral_witness = non_integral.map(|i| names[i].clone());

        for (name, y) in names.iter().zip(m.target().ring().gens()) {
            let degree = match m.generic_degree(&y) {
                Ok(d) => Some(d),
                Err(Error::Transcendental) => None,
                Err(e) => return Err(e),
            };
            report.generic_degrees.push((name.clone(), degree));
        }
        report.birational = report.generic_degrees.iter().all(|(_, d)| *d == Some(1));

        let unsaturated = first_unsaturated_generator(m)?;
        report.radicial = unsaturated.is_none();
        report.unsaturated_witness = unsaturated.map(|i| names[i].clone());

        report.subintegral = report.integral && report.radicial;
        report.isomorphism = is_isomorphism(m)?;
        report.seminormal_in = Some(seminormality_status(m, degree_bound)?);
    }
    report.consistency_violations = consistency_violations(&report);
    Ok(report)
}

/// Implications every correct classification satisfies.
pub fn consistency_violations(r: &ClassificationReport) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            out.push(what.to_string());
        }
    };
    let status_no = r
        .seminormal_in
        .as_ref()
        .is_some_and(SeminormalStatus::is_no);
    let status_yes = r.seminormal_in == Some(SeminormalStatus::Yes);
    check(
        r.subintegral == (r.finite && r.radicial),
        "finite and radicial must be equivalent to subintegral",
    );
    check(
        !r.isomorphism || (r.radicial && !status_no),
        "an isomorphism must be radicial and seminormal",
    );
    check(
        !(r.finite && r.radicial && status_yes) || r.isomorphism,
        "finite, radicial and seminormal must give an isomorphism",
    );
    check(
        !r.subintegral || r.radicial,
        "subintegral must imply radicial",
    );
    check(
        !r.subintegral || r.birational,
        "subintegral must imply birational",
    );
    check(
        !r.isomorphism || (r.extension && r.finite && r.birational),
        "an isomorphism must be a finite birational extension",
    );
    check(
        r.extension || (r.seminormal_in.is_none() && !r.isomorphism),
        "non-extensions carry no seminormality verdict",
    );
    out
}
