//! Saturation of `A` in `B` through the tensor square `B ⊗_A B`.
//!
//! `b` lies in the saturation exactly when `Δ(b) = b⊗1 − 1⊗b` is nilpotent in
//! `B ⊗_A B`. The tensor square is presented on two copies of the target
//! variables, `y#1` and `y#2`, modulo
//! `J = I_B(y#1) + I_B(y#2) + (f_i(y#1) − f_i(y#2))`.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{AffineAlgebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

/// Largest power tried when looking for an explicit nilpotency index.
pub const NILPOTENCY_SEARCH: u32 = 8;

/// Default degree bound of [`saturation_scan`].
pub const DEFAULT_SCAN_BOUND: u32 = 4;

/// Mandatory caveat attached to every scan.
pub const SCAN_CAVEAT: &str = "bounded exploration: elements of degree above the bound are not \
     examined, and the saturation need not be finitely generated";

/// Presentation of `B ⊗_A B` with its two copy embeddings.
#[derive(Debug)]
pub struct TensorSquare {
    target: Arc<PolyRing>,
    ring: Arc<PolyRing>,
    relations: Ideal,
    first: Vec<usize>,
    second: Vec<usize>,
}

impl TensorSquare {
    pub(crate) fn build(m: &AlgebraMorphism) -> Result<TensorSquare> {
        let target = m.target().ring();
        let n = target.var_count();
        let names = (1..=2).flat_map(|copy| {
            target
                .variables()
                .iter()
                .map(move |v| format!("{v}#{copy}"))
        });
        let ring = PolyRing::new(names, MonomialOrder::Grevlex)?;
        let first: Vec<usize> = (0..n).collect();
        let second: Vec<usize> = (n..2 * n).collect();
        let mut gens = Vec::new();
        for copy in [&first, &second] {
            gens.extend(
                m.target()
                    .relations()
                    .generators()
                    .iter()
                    .map(|r| r.rename(&ring, copy)),
            );
        }
        for f in m.images() {
            gens.push(&f.rename(&ring, &first) - &f.rename(&ring, &second));
        }
        let relations = Ideal::new(&ring, gens)?;
        Ok(TensorSquare {
            target: target.clone(),
            ring,
            relations,
            first,
            second,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// The ideal `J` presenting `B ⊗_A B`.
    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    fn check(&self, b: &Polynomial) -> Result<()> {
        if same_ring(b.ring(), &self.target) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `b ↦ b⊗1`.
    pub fn first_copy(&self, b: &Polynomial) -> Result<Polynomial> {
        self.check(b)?;
        Ok(b.rename(&self.ring, &self.first))
    }

    /// `b ↦ 1⊗b`.
    pub fn second_copy(&self, b: &Polynomial) -> Result<Polynomial> {
        self.check(b)?;
        Ok(b.rename(&self.ring, &self.second))
    }

    /// `Δ(b) = b⊗1 − 1⊗b`.
    pub fn delta(&self, b: &Polynomial) -> Result<Polynomial> {
        Ok(&self.first_copy(b)? - &self.second_copy(b)?)
    }

    /// The involution exchanging the two copies.
    pub fn swap(&self, p: &Polynomial) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let map: Vec<usize> = self.second.iter().chain(&self.first).copied().collect();
        Ok(p.rename(&self.ring, &map))
    }
}

/// Tensor square of an extension.
pub fn tensor_square(m: &AlgebraMorphism) -> Result<&TensorSquare> {
    m.tensor_square_cached()
}

/// `Δ(b)` in the tensor square of `m`.
pub fn delta(b: &Polynomial, m: &AlgebraMorphism) -> Result<Polynomial> {
    tensor_square(m)?.delta(b)
}

/// How a saturation verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaturationCertificate {
    /// `Δ(b) ∈ J`: the difference already vanishes in the tensor square.
    IdealMember,
    /// `Δ(b) ∉ J` but `Δ(b) ∈ √J`; `index` is the least `k` with
    /// `Δ(b)^k ∈ J` when found within [`NILPOTENCY_SEARCH`].
    Nilpotent { index: Option<u32> },
    /// `1 ∉ J + (1 − t·Δ(b))`.
    NotNilpotent,
}

impl SaturationCertificate {
    pub fn is_member(&self) -> bool {
        !matches!(self, SaturationCertificate::NotNilpotent)
    }
}

/// Decides `b ∈ Â_B` and says why.
pub fn saturation_certificate(
    b: &Polynomial,
    m: &AlgebraMorphism,
) -> Result<SaturationCertificate> {
    let t = tensor_square(m)?;
    let d = t.delta(b)?;
    let j = t.relations();
    if j.contains(&d)? {
        return Ok(SaturationCertificate::IdealMember);
    }
    if j.radical_contains(&d)? {
        let index = j.nilpotency_index(&d, NILPOTENCY_SEARCH)?;
        Ok(SaturationCertificate::Nilpotent { index })
    } else {
        Ok(SaturationCertificate::NotNilpotent)
    }
}

/// `b ∈ Â_B`, i.e. `Δ(b)` is nilpotent in `B ⊗_A B`.
pub fn in_saturation(b: &Polynomial, m: &AlgebraMorphism) -> Result<bool> {
    let t = tensor_square(m)?;
    let d = t.delta(b)?;
    t.relations().radical_contains(&d)
}

/// First target generator outside the saturation, if any.
pub fn first_unsaturated_generator(m: &AlgebraMorphism) -> Result<Option<usize>> {
    m.require_extension()?;
    for (i, y) in m.target().ring().gens().iter().enumerate() {
        if !in_saturation(y, m)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `Â_B = B`. The saturation is a subring containing `A`, so checking the
/// target generators suffices.
pub fn is_radicial_extension(m: &AlgebraMorphism) -> Result<bool> {
    Ok(first_unsaturated_generator(m)?.is_none())
}

/// For `A -> C -> B`: every generator of `C`, pushed into `B`, lies in the
/// saturation of `A` in `B`.
pub fn is_radicial_sequence(first: &AlgebraMorphism, second: &AlgebraMorphism) -> Result<bool> {
    let composite = first.then(second)?;
    first.require_extension()?;
    second.require_extension()?;
    composite.require_extension()?;
    for c in second.images() {
        if !in_saturation(c, &composite)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One element found by [`saturation_scan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanElement {
    pub element: Polynomial,
    /// Source element with the same image, when `element` comes from `A`.
    pub preimage: Option<Polynomial>,
    /// Least `k` with `Δ(element)^k ∈ J`, for radical-only finds.
    pub nilpotency: Option<u32>,
}

impl ScanElement {
    pub fn outside_image(&self) -> bool {
        self.preimage.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub bound: u32,
    /// Standard monomials of the target up to the bound.
    pub candidates: usize,
    /// Basis of `{ b in the span of the candidates : Δ(b) ∈ J }`.
    pub ideal_part: Vec<ScanElement>,
    /// Candidate monomials with `Δ(b) ∈ √J \ J`.
    pub radical_part: Vec<ScanElement>,
}

impl ScanReport {
    /// Found elements not coming from the source, in report order.
    pub fn outside_image(&self) -> impl Iterator<Item = &ScanElement> {
        self.ideal_part
            .iter()
            .chain(&self.radical_part)
            .filter(|e| e.outside_image())
    }

    pub fn caveat(&self) -> &'static str {
        SCAN_CAVEAT
    }
}

/// Bounded exploration of the saturation: certified elements of `Â_B` among
/// target elements of degree at most `bound`. Completeness is not claimed.
pub fn saturation_scan(m: &AlgebraMorphism, bound: u32) -> Result<ScanReport> {
    let t = tensor_square(m)?;
    let target = m.target();
    let candidates = standard_monomials(target, bound);
    let j = t.relations();
    let columns: Vec<Polynomial> = candidates
        .iter()
        .map(|b| j.normal_form(&t.delta(b)?))
        .collect::<Result<_>>()?;

    let mut ideal_part = Vec::new();
    for kernel_vector in nullspace(&columns) {
        let terms = kernel_vector
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, candidates[i].leading_monomial().unwrap().clone()));
        let element = Polynomial::from_terms(target.ring(), terms)?.primitive();
        let preimage = m.preimage(&element)?;
        ideal_part.push(ScanElement {
            element,
            preimage,
            nilpotency: None,
        });
    }

    let mut radical_part = Vec::new();
    for (b, nf) in candidates.iter().zip(&columns) {
        if nf.is_zero() {
            continue;
        }
        let d = t.delta(b)?;
        if j.radical_contains(&d)? {
            radical_part.push(ScanElement {
                element: b.clone(),
                preimage: m.preimage(b)?,
                nilpotency: j.nilpotency_index(&d, NILPOTENCY_SEARCH)?,
            });
        }
    }
    Ok(ScanReport {
        bound,
        candidates: candidates.len(),
        ideal_part,
        radical_part,
    })
}

/// Monomials of total degree ≤ `bound` that are not leading monomials of the
/// relation ideal, by ascending degree then ascending order.
fn standard_monomials(algebra: &AffineAlgebra, bound: u32) -> Vec<Polynomial> {
    let ring = algebra.ring();
    let n = ring.var_count();
    let leads: Vec<&Monomial> = algebra
        .relations()
        .groebner()
        .elements()
        .iter()
        .filter_map(Polynomial::leading_monomial)
        .collect();
    let mut out: Vec<Monomial> = Vec::new();
    let mut exps = alloc::vec![0u32; n];
    for degree in 0..=bound {
        let mut layer = Vec::new();
        compositions(&mut exps, 0, degree, &mut layer);
        layer.retain(|m: &Monomial| !leads.iter().any(|l| l.divides(m)));
        layer.sort_by(|a, b| ring.order().cmp(a, b));
        out.extend(layer);
    }
    out.into_iter()
        .map(|m| Polynomial::from_terms(ring, [(Rational::one(), m)]).unwrap())
        .collect()
}

fn compositions(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos == exps.len() {
        if remaining == 0 {
            out.push(Monomial::new(exps.clone()));
        }
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        compositions(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Basis of `{ c : Σ c_i columns[i] = 0 }` over the rationals, one vector per
/// non-pivot column, from the reduced row echelon form.
fn nullspace(columns: &[Polynomial]) -> Vec<Vec<Rational>> {
    let mut rows_index: Vec<Monomial> = Vec::new();
    for c in columns {
        for t in c.terms() {
            if !rows_index.contains(&t.monomial) {
                rows_index.push(t.monomial.clone());
            }
        }
    }
    let ncols = columns.len();
    let mut matrix: Vec<Vec<Rational>> = rows_index
        .iter()
        .map(|m| {
            columns
                .iter()
                .map(|c| {
                    c.terms()
                        .iter()
                        .find(|t| &t.monomial == m)
                        .map_or_else(Rational::zero, |t| t.coeff.clone())
                })
                .collect()
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, p);
        let inv = matrix[row][col].recip();
        for x in matrix[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..matrix.len() {
            if r != row && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                let pivot_row = matrix[row].clone();
                for (x, y) in matrix[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }

    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = alloc::vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -matrix[r][free].clone();
            }
            v
        })
        .collect()
}

/// Human-readable rendering of a certificate for `b`.
pub fn describe_certificate(b: &Polynomial, cert: &SaturationCertificate) -> alloc::string::String {
    let b = b.to_string();
    match cert {
        SaturationCertificate::IdealMember => format!("Δ({b}) ∈ J (ideal membership)"),
        SaturationCertificate::Nilpotent { index: Some(k) } => {
            format!("Δ({b})^{k} ∈ J, Δ({b}) ∉ J (nilpotent)")
        }
        SaturationCertificate::Nilpotent { index: None } => {
            format!("1 ∈ J + (1 - #t·Δ({b})) (Rabinowitsch)")
        }
        SaturationCertificate::NotNilpotent => {
            format!("1 ∉ J + (1 - #t·Δ({b})) (Rabinowitsch): Δ({b}) is not nilpotent")
        }
    }
}
