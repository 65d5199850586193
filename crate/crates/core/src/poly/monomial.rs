use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a power product; length equals the ring's variable count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(vars: usize) -> Self {
        Monomial {
            exps: alloc::vec![0; vars],
            degree: 0,
        }
    }

    /// The monomial `x_index^exp` in a ring with `vars` variables.
    pub fn var(vars: usize, index: usize, exp: u32) -> Self {
        let mut exps = alloc::vec![0; vars];
        exps[index] = exp;
        Monomial { exps, degree: exp }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when no variable occurs in both monomials.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Admissible monomial orders.
///
/// `Block { split }` compares the first `split` variables by grevlex and
/// breaks ties with grevlex on the remaining ones, so any monomial involving a
/// first-block variable beats every monomial in second-block variables only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    Block {
        split: usize,
    },
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Block { split } => write!(f, "block({split})"),
        }
    }
}

impl MonomialOrder {
    /// Compares two monomials of equal length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| grevlex_tail(&a.exps, &b.exps)),
            MonomialOrder::Block { split } => {
                let (a1, a2) = a.exps.split_at(split);
                let (b1, b2) = b.exps.split_at(split);
                grevlex(a1, b1).then_with(|| grevlex(a2, b2))
            }
        }
    }

    /// Checked comparison; fails when the exponent vectors differ in length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        if let MonomialOrder::Block { split } = *self {
            if split > a.len() {
                return Err(Error::InvalidBlock {
                    split,
                    vars: a.len(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| grevlex_tail(a, b))
}

// Equal degree: the monomial with the smaller exponent in the last differing
// variable is larger.
fn grevlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_and_grevlex_examples() {
        assert_eq!(
            MonomialOrder::Lex
                .compare(&m(&[2, 1]), &m(&[1, 2]))
                .unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Grevlex
                .compare(&m(&[2, 1]), &m(&[1, 3]))
                .unwrap(),
            Ordering::Less
        );
        for order in [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::Block { split: 1 },
        ] {
            assert_eq!(
                order.compare(&m(&[1, 4]), &m(&[1, 4])).unwrap(),
                Ordering::Equal
            );
        }
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let order = MonomialOrder::Block { split: 1 };
        // t beats y^10 in the second block
        assert_eq!(order.cmp(&m(&[1, 0]), &m(&[0, 10])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert_eq!(
            MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])),
            Err(Error::LengthMismatch {
                expected: 1,
                found: 2
            })
        );
        assert!(MonomialOrder::Block { split: 3 }
            .compare(&m(&[1]), &m(&[0]))
            .is_err());
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.checked_div(&b), Some(m(&[1, 0, 0])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[2, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
        assert_eq!(Monomial::var(3, 1, 2), m(&[0, 2, 0]));
        assert_eq!(Monomial::one(2).exponents(), &vec![0, 0][..]);
    }
}
