//! Sparse multivariate polynomials with exact rational coefficients.

mod monomial;
pub mod parse;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use self::monomial::{Monomial, MonomialOrder};

/// Coefficient field: arbitrary-precision rationals, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Ambient polynomial ring `QQ[v1..vn]` together with its monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<I, S>(vars: I, order: MonomialOrder) -> Result<Arc<PolyRing>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Block { split } = order {
            if split > vars.len() {
                return Err(Error::InvalidBlock {
                    split,
                    vars: vars.len(),
                });
            }
        }
        Ok(Arc::new(PolyRing { vars, order }))
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        PolyRing::new(self.vars.iter().cloned(), order)
    }

    /// The `index`-th variable as a polynomial.
    pub fn gen(self: &Arc<Self>, index: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: alloc::vec![Term {
                coeff: Rational::one(),
                monomial: Monomial::var(self.var_count(), index, 1),
            }],
        }
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        self.index_of(name)
            .map(|i| self.gen(i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn gens(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.var_count()).map(|i| self.gen(i)).collect()
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '#' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '#' | '.'))
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// A polynomial in canonical form: nonzero coefficients, terms strictly
/// descending under the ring's order. Structural equality is mathematical
/// equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// Arithmetic selector for [`Polynomial::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            alloc::vec![Term {
                coeff: c,
                monomial: Monomial::one(ring.var_count()),
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_int(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let n = ring.var_count();
        let mut raw = Vec::new();
        for (coeff, monomial) in terms {
            if monomial.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: monomial.len(),
                });
            }
            raw.push(Term { coeff, monomial });
        }
        Ok(Self::from_raw(ring, raw))
    }

    fn from_raw(ring: &Arc<PolyRing>, mut raw: Vec<Term>) -> Self {
        let order = ring.order();
        raw.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coeff += t.coeff,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push(t);
                }
            }
        }
        if terms.last().is_some_and(|t| t.coeff.is_zero()) {
            terms.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Highest exponent of the `var`-th variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.monomial.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    /// Indices of the variables actually occurring.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.var_count())
            .filter(|&i| self.terms.iter().any(|t| t.monomial.exponents()[i] > 0))
            .collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn arith(op: ArithOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        match op {
            ArithOp::Add => f.try_add(g),
            ArithOp::Sub => f.try_sub(g),
            ArithOp::Mul => f.try_mul(g),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other.terms.iter().map(|t| Term {
            coeff: -&t.coeff,
            monomial: t.monomial.clone(),
        })))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &short.terms {
            acc = acc.add_scaled(&t.coeff, &t.monomial, long);
        }
        Ok(acc)
    }

    /// `self + c * m * g`; `g` must share the ring.
    pub fn add_scaled(&self, c: &Rational, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &g.ring));
        if c.is_zero() {
            return self.clone();
        }
        self.merge(g.terms.iter().map(|t| Term {
            coeff: c * &t.coeff,
            monomial: t.monomial.mul(m),
        }))
    }

    // Merges descending term streams; `rhs` must already be descending.
    fn merge<I: Iterator<Item = Term>>(&self, rhs: I) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = rhs.peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(lhs.next().unwrap().clone()),
                (None, Some(_)) => out.push(rhs.next().unwrap()),
                (Some(a), Some(b)) => match order.cmp(&a.monomial, &b.monomial) {
                    Ordering::Greater => out.push(lhs.next().unwrap().clone()),
                    Ordering::Less => out.push(rhs.next().unwrap()),
                    Ordering::Equal => {
                        let a = lhs.next().unwrap();
                        let b = rhs.next().unwrap();
                        let coeff = &a.coeff + b.coeff;
                        if !coeff.is_zero() {
                            out.push(Term {
                                coeff,
                                monomial: b.monomial,
                            });
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Scales to integer coefficients with gcd one and positive leading
    /// coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
            num = num.gcd(t.coeff.numer());
        }
        if self.terms[0].coeff.is_negative() {
            num = -num;
        }
        let factor = Rational::new(den, num);
        if factor.is_one() {
            return self.clone();
        }
        self.scale(&factor)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.var_count() {
            return Err(Error::LengthMismatch {
                expected: self.ring.var_count(),
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Ring map `v_i -> images[i]` into `target`.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Polynomial> {
        let n = self.ring.var_count();
        if images.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: images.len(),
            });
        }
        if images.iter().any(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        // powers[i][k] = images[i]^(k+1), filled on demand
        let mut powers: Vec<Vec<Polynomial>> = alloc::vec![Vec::new(); n];
        let mut raw: Vec<Term> = Vec::new();
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() < e as usize {
                    let next = match powers[i].last() {
                        None => images[i].clone(),
                        Some(p) => p * &images[i],
                    };
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e as usize - 1];
            }
            raw.extend(prod.terms);
        }
        Ok(Polynomial::from_raw(target, raw))
    }

    /// Moves the polynomial into `target` sending variable `i` to variable
    /// `map[i]` of `target`.
    pub fn rename(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        debug_assert_eq!(map.len(), self.ring.var_count());
        let m = target.var_count();
        let raw = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = alloc::vec![0u32; m];
                for (i, &e) in t.monomial.exponents().iter().enumerate() {
                    exps[map[i]] += e;
                }
                Term {
                    coeff: t.coeff.clone(),
                    monomial: Monomial::new(exps),
                }
            })
            .collect();
        Polynomial::from_raw(target, raw)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    /// Fails if a variable that occurs is missing from `target`.
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let support = self.support();
        let mut map = alloc::vec![0usize; self.ring.var_count()];
        for (i, name) in self.ring.variables().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map[i] = j,
                None if support.contains(&i) => return Err(Error::UnknownVariable(name.clone())),
                None => {}
            }
        }
        Ok(self.rename(target, &map))
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub(crate) fn push_trailing(&mut self, t: Term) {
        debug_assert!(self.terms.last().is_none_or(|l| self
            .ring
            .order()
            .cmp(&l.monomial, &t.monomial)
            == Ordering::Greater));
        self.terms.push(t);
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs)
            .expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            let mut first = true;
            for (v, &e) in self.ring.variables().iter().zip(t.monomial.exponents()) {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().copied(), MonomialOrder::Grevlex).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse::parse_polynomial(r, s).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn arith_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            Polynomial::arith(ArithOp::Add, &p(&r, "x+1"), &p(&r, "x-1")).unwrap(),
            p(&r, "2*x")
        );
        assert_eq!(
            Polynomial::arith(ArithOp::Mul, &p(&r, "y-x^2"), &p(&r, "y+x^2")).unwrap(),
            p(&r, "y^2-x^4")
        );
        let expanded = &p(&r, "y^2") - &(&(&p(&r, "x") * &p(&r, "x+1")) * &p(&r, "x"));
        assert_eq!(expanded, p(&r, "y^2-x^3-x^2"));
        assert_eq!(expanded.to_string(), "-x^3 - x^2 + y^2");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = ring(&["x"]);
        let s = ring(&["y"]);
        assert_eq!(
            Polynomial::arith(ArithOp::Sub, &r.gen(0), &s.gen(0)),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn evaluate_examples() {
        let r = ring(&["x", "y"]);
        let node = p(&r, "y^2-x^2*(x+1)");
        assert_eq!(node.evaluate(&[q(0), q(0)]).unwrap(), q(0));
        let s = ring(&["x", "z"]);
        assert_eq!(p(&s, "z^2-(x+1)").evaluate(&[q(0), q(1)]).unwrap(), q(0));
        assert_eq!(p(&s, "5").evaluate(&[q(7), q(-3)]).unwrap(), q(5));
        assert!(node.evaluate(&[q(1)]).is_err());
    }

    #[test]
    fn primitive_and_monic() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "-2/3*x + 4/9*y");
        assert_eq!(f.primitive(), p(&r, "3*x - 2*y"));
        assert_eq!(f.monic(), p(&r, "x - 2/3*y"));
    }

    #[test]
    fn substitute_and_rename() {
        let src = ring(&["u", "v"]);
        let tgt = ring(&["t"]);
        let images = [p(&tgt, "t^2"), p(&tgt, "t^3")];
        let cusp = p(&src, "v^2-u^3");
        assert!(cusp.substitute(&tgt, &images).unwrap().is_zero());
        let big = ring(&["a", "u", "v"]);
        let moved = cusp.rename(&big, &[1, 2]);
        assert_eq!(moved, p(&big, "v^2-u^3"));
        assert_eq!(cusp.to_ring(&big).unwrap(), moved);
        assert_eq!(moved.to_ring(&tgt), Err(Error::UnknownVariable("u".into())));
    }

    #[test]
    fn ring_validation() {
        assert!(matches!(
            PolyRing::new(["x", "x"], MonomialOrder::Lex),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            PolyRing::new(["1x"], MonomialOrder::Lex),
            Err(Error::InvalidVariableName(_))
        ));
        assert!(PolyRing::new(["x"], MonomialOrder::Block { split: 2 }).is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x - 2*y + 1");
        assert_eq!(f.pow(3), &(&f * &f) * &f);
        assert!(f.pow(0).is_one());
    }
}
