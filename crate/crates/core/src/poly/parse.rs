//! Polynomial expression syntax.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' INT]
//! atom   := INT ['/' INT] | NAME | '(' expr ')'
//! NAME   := [a-zA-Z][a-zA-Z0-9_#.]*
//! ```
//!
//! There is no implicit multiplication. The expression parser works on a byte
//! offset inside a larger text so the script parser can embed it.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{PolyRing, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: expected one of {}, found {}",
            self.offset,
            self.expected.join(" "),
            self.found
        )
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Var { name: String, offset: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn to_polynomial(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        Ok(match self {
            Expr::Num(c) => Polynomial::constant(ring, c.clone()),
            Expr::Var { name, .. } => ring.var(name)?,
            Expr::Add(a, b) => &a.to_polynomial(ring)? + &b.to_polynomial(ring)?,
            Expr::Sub(a, b) => &a.to_polynomial(ring)? - &b.to_polynomial(ring)?,
            Expr::Mul(a, b) => &a.to_polynomial(ring)? * &b.to_polynomial(ring)?,
            Expr::Neg(a) => -&a.to_polynomial(ring)?,
            Expr::Pow(a, e) => a.to_polynomial(ring)?.pow(*e),
        })
    }

    /// Variable occurrences with their byte offsets, left to right.
    pub fn variables(&self) -> Vec<(&str, usize)> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut Vec<(&'a str, usize)>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var { name, offset } => out.push((name, *offset)),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
        }
    }
}

/// Parses a polynomial over `ring`; the whole text must be consumed.
pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let (expr, end) = parse_expr_at(text, 0)?;
    let end = skip_ws(text, end);
    if end < text.len() {
        return Err(Error::Parse(error_at(
            text,
            end,
            &["+", "-", "*", "^", "end of input"],
        )));
    }
    expr.to_polynomial(ring)
}

/// Parses one expression starting at byte `start`; returns it together with
/// the offset just past its last token.
pub fn parse_expr_at(text: &str, start: usize) -> Result<(Expr, usize), ParseError> {
    let mut p = ExprParser { text, pos: start };
    let e = p.expr()?;
    Ok((e, p.pos))
}

pub(crate) fn skip_ws(text: &str, mut pos: usize) -> usize {
    let bytes = text.as_bytes();
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

/// Describes the token starting at `pos` for diagnostics.
pub fn describe_token(text: &str, pos: usize) -> String {
    match text[pos..].chars().next() {
        None => "end of input".to_string(),
        Some(c) if c.is_ascii_alphanumeric() || c == '_' => {
            let word: String = text[pos..]
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                .collect();
            alloc::format!("`{word}`")
        }
        Some(c) => alloc::format!("`{c}`"),
    }
}

fn error_at(text: &str, pos: usize, expected: &[&'static str]) -> ParseError {
    ParseError {
        offset: pos,
        expected: expected.to_vec(),
        found: describe_token(text, pos),
    }
}

struct ExprParser<'a> {
    text: &'a str,
    pos: usize,
}

const ATOM_START: &[&str] = &["number", "variable", "("];

impl ExprParser<'_> {
    fn peek(&mut self) -> Option<u8> {
        self.pos = skip_ws(self.text, self.pos);
        self.text.as_bytes().get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Expr::Neg(Box::new(self.term()?))
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.peek();
            let start = self.pos;
            let digits = self.digits();
            let exp = digits
                .and_then(|d| d.parse::<u32>().ok())
                .ok_or_else(|| error_at(self.text, start, &["exponent"]))?;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<&str> {
        let bytes = self.text.as_bytes();
        let start = self.pos;
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let bytes = self.text.as_bytes();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(error_at(self.text, self.pos, &[")", "+", "-", "*", "^"]));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                // a rational literal is INT '/' INT with no spaces
                if bytes.get(self.pos) == Some(&b'/')
                    && bytes.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
                {
                    let slash = self.pos;
                    self.pos += 1;
                    let den: BigInt = self.digits().unwrap().parse().unwrap();
                    if den.is_zero() {
                        return Err(error_at(self.text, slash + 1, &["nonzero denominator"]));
                    }
                    return Ok(Expr::Num(Rational::new(num, den)));
                }
                Ok(Expr::Num(Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                // `#` and `.` only occur in internal names such as `x#1`
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric()
                        || matches!(bytes[self.pos], b'_' | b'#' | b'.'))
                {
                    self.pos += 1;
                }
                Ok(Expr::Var {
                    name: self.text[start..self.pos].to_string(),
                    offset: start,
                })
            }
            _ => Err(error_at(self.text, self.pos, ATOM_START)),
        }
    }
}
