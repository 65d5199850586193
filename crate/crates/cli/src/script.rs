//! Script language: ring and map declarations followed by commands.
//!
//! ```text
//! script    := statement*
//! statement := ring | map | command
//! ring      := "ring" NAME "=" "QQ" "[" VAR ("," VAR)* "]" ["/" "(" expr ("," expr)* ")"] ";"
//! map       := "map" NAME ":" NAME "->" NAME "=" "[" expr ("," expr)* "]" ";"
//! command   := "gb" NAME ";"
//!            | ("member" | "radical-member") NAME "(" expr ")" ";"
//!            | ("kernel" | "classify" | "iso") NAME ";"
//!            | "sat-member" NAME "(" expr ")" ";"
//!            | ("scan-saturation" | "seminormal") NAME ["degree" INT] ";"
//!            | "regulous" NAME "via" NAME "(" expr ")" ";"
//! ```
//!
//! A `#` at the start of a line or after whitespace starts a comment that runs
//! to the end of the line. Names are resolved while parsing, so a parsed
//! script only refers to declared rings and maps.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use satura_core::poly::parse::{describe_token, parse_expr_at};
use satura_core::{MonomialOrder, PolyRing, Polynomial};

use crate::error::{CliError, Location};

#[derive(Clone, Debug, PartialEq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Statement {
    pub location: Location,
    pub kind: StatementKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StatementKind {
    Ring(RingDecl),
    Map(MapDecl),
    Command(Command),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingDecl {
    pub name: String,
    pub ring: Arc<PolyRing>,
    pub relations: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub images: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Gb {
        ring: String,
    },
    Member {
        ring: String,
        element: Polynomial,
    },
    RadicalMember {
        ring: String,
        element: Polynomial,
    },
    Kernel {
        map: String,
    },
    Classify {
        map: String,
    },
    SatMember {
        map: String,
        element: Polynomial,
    },
    ScanSaturation {
        map: String,
        degree: Option<u32>,
    },
    Seminormal {
        map: String,
        degree: Option<u32>,
    },
    Regulous {
        ring: String,
        map: String,
        element: Polynomial,
    },
    Iso {
        map: String,
    },
}

impl Command {
    pub fn keyword(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Member { .. } => "member",
            Command::RadicalMember { .. } => "radical-member",
            Command::Kernel { .. } => "kernel",
            Command::Classify { .. } => "classify",
            Command::SatMember { .. } => "sat-member",
            Command::ScanSaturation { .. } => "scan-saturation",
            Command::Seminormal { .. } => "seminormal",
            Command::Regulous { .. } => "regulous",
            Command::Iso { .. } => "iso",
        }
    }
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ring {} = QQ[{}]",
            self.name,
            self.ring.variables().join(",")
        )?;
        if !self.relations.is_empty() {
            write!(f, " / ({})", join(&self.relations))?;
        }
        write!(f, ";")
    }
}

impl fmt::Display for MapDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "map {} : {} -> {} = [{}];",
            self.name,
            self.source,
            self.target,
            join(&self.images)
        )
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = self.keyword();
        match self {
            Command::Gb { ring } => write!(f, "{kw} {ring};"),
            Command::Member { ring, element } | Command::RadicalMember { ring, element } => {
                write!(f, "{kw} {ring} ({element});")
            }
            Command::Kernel { map } | Command::Classify { map } | Command::Iso { map } => {
                write!(f, "{kw} {map};")
            }
            Command::SatMember { map, element } => write!(f, "{kw} {map} ({element});"),
            Command::ScanSaturation { map, degree } | Command::Seminormal { map, degree } => {
                match degree {
                    Some(d) => write!(f, "{kw} {map} degree {d};"),
                    None => write!(f, "{kw} {map};"),
                }
            }
            Command::Regulous { ring, map, element } => {
                write!(f, "{kw} {ring} via {map} ({element});")
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StatementKind::Ring(r) => r.fmt(f),
            StatementKind::Map(m) => m.fmt(f),
            StatementKind::Command(c) => c.fmt(f),
        }
    }
}

fn join(items: &[Polynomial]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Parses `text`, declaring every ring with `order`.
pub fn parse_script(text: &str, order: MonomialOrder) -> Result<Script, CliError> {
    let cleaned = strip_comments(text);
    let mut p = Parser {
        text: &cleaned,
        pos: 0,
        order,
        names: HashMap::new(),
    };
    let mut statements = Vec::new();
    while p.peek().is_some() {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

/// Blanks out comments so byte offsets stay valid.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    let mut prev_space = true;
    for c in text.chars() {
        if c == '\n' {
            in_comment = false;
        } else if c == '#' && prev_space {
            in_comment = true;
        }
        prev_space = c.is_whitespace();
        if in_comment {
            out.extend(std::iter::repeat_n(' ', c.len_utf8()));
        } else {
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug)]
enum Declared {
    Ring(Arc<PolyRing>),
    Map {
        source: Arc<PolyRing>,
        target: Arc<PolyRing>,
    },
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    order: MonomialOrder,
    names: HashMap<String, Declared>,
}

const STATEMENT_START: &[&str] = &[
    "ring",
    "map",
    "gb",
    "member",
    "radical-member",
    "kernel",
    "classify",
    "sat-member",
    "scan-saturation",
    "seminormal",
    "regulous",
    "iso",
];

fn is_name_start(c: u8) -> bool {
    c.is_ascii_alphabetic()
}

fn is_name_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_' || c == b'\''
}

impl Parser<'_> {
    fn location(&self, offset: usize) -> Location {
        Location::at(self.text, offset)
    }

    fn syntax(&self, offset: usize, expected: &[&str]) -> CliError {
        CliError::Syntax {
            location: self.location(offset),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: describe_token(self.text, offset),
        }
    }

    fn name_error(&self, offset: usize, message: String) -> CliError {
        CliError::Name {
            location: self.location(offset),
            message,
        }
    }

    fn peek(&mut self) -> Option<u8> {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        bytes.get(self.pos).copied()
    }

    fn punct(&mut self, token: &'static str) -> Result<(), CliError> {
        self.peek();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.syntax(self.pos, &[token]))
        }
    }

    fn try_punct(&mut self, token: &str) -> bool {
        self.peek();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    /// Reads a name; returns it with its offset.
    fn name(&mut self, what: &'static str) -> Result<(String, usize), CliError> {
        let start = match self.peek() {
            Some(c) if is_name_start(c) => self.pos,
            _ => return Err(self.syntax(self.pos, &[what])),
        };
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && is_name_char(bytes[self.pos]) {
            self.pos += 1;
        }
        Ok((self.text[start..self.pos].to_string(), start))
    }

    fn keyword(&mut self, word: &'static str) -> Result<(), CliError> {
        let save = self.pos;
        match self.name(word) {
            Ok((w, _)) if w == word => Ok(()),
            _ => {
                self.pos = save;
                self.peek();
                Err(self.syntax(self.pos, &[word]))
            }
        }
    }

    /// Statement keywords may contain `-`.
    fn statement_keyword(&mut self) -> Result<(String, usize), CliError> {
        let start = self.pos;
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len()
            && (bytes[self.pos].is_ascii_lowercase() || bytes[self.pos] == b'-')
        {
            self.pos += 1;
        }
        let word = &self.text[start..self.pos];
        if STATEMENT_START.contains(&word) {
            Ok((word.to_string(), start))
        } else {
            Err(self.syntax(start, STATEMENT_START))
        }
    }

    fn statement(&mut self) -> Result<Statement, CliError> {
        self.peek();
        let (word, start) = self.statement_keyword()?;
        let kind = match word.as_str() {
            "ring" => StatementKind::Ring(self.ring_decl()?),
            "map" => StatementKind::Map(self.map_decl()?),
            _ => StatementKind::Command(self.command(&word)?),
        };
        self.punct(";")?;
        Ok(Statement {
            location: self.location(start),
            kind,
        })
    }

    fn declare(&mut self, name: &str, offset: usize, what: Declared) -> Result<(), CliError> {
        if self.names.contains_key(name) {
            return Err(self.name_error(offset, format!("`{name}` is already declared")));
        }
        self.names.insert(name.to_string(), what);
        Ok(())
    }

    fn lookup_ring(&mut self) -> Result<(String, Arc<PolyRing>), CliError> {
        let (name, offset) = self.name("ring name")?;
        match self.names.get(&name) {
            Some(Declared::Ring(r)) => Ok((name, r.clone())),
            Some(Declared::Map { .. }) => {
                Err(self.name_error(offset, format!("`{name}` is a map, expected a ring")))
            }
            None => Err(self.name_error(offset, format!("ring `{name}` is not declared"))),
        }
    }

    fn lookup_map(&mut self) -> Result<(String, Arc<PolyRing>, Arc<PolyRing>), CliError> {
        let (name, offset) = self.name("map name")?;
        match self.names.get(&name) {
            Some(Declared::Map { source, target }) => Ok((name, source.clone(), target.clone())),
            Some(Declared::Ring(_)) => {
                Err(self.name_error(offset, format!("`{name}` is a ring, expected a map")))
            }
            None => Err(self.name_error(offset, format!("map `{name}` is not declared"))),
        }
    }

    fn ring_decl(&mut self) -> Result<RingDecl, CliError> {
        let (name, name_offset) = self.name("ring name")?;
        self.punct("=")?;
        self.keyword("QQ")?;
        self.punct("[")?;
        let mut vars: Vec<(String, usize)> = Vec::new();
        loop {
            let (v, offset) = self.name("variable")?;
            if vars.iter().any(|(w, _)| *w == v) {
                return Err(self.name_error(offset, format!("variable `{v}` is declared twice")));
            }
            vars.push((v, offset));
            if !self.try_punct(",") {
                break;
            }
        }
        self.punct("]")?;
        let ring = PolyRing::new(vars.iter().map(|(v, _)| v.clone()), self.order)
            .map_err(|e| self.name_error(name_offset, e.to_string()))?;
        let mut relations = Vec::new();
        if self.try_punct("/") {
            self.punct("(")?;
            relations = self.expr_list(&ring, ")")?;
        }
        relations.retain(|r: &Polynomial| !r.is_zero());
        self.declare(&name, name_offset, Declared::Ring(ring.clone()))?;
        Ok(RingDecl {
            name,
            ring,
            relations,
        })
    }

    fn map_decl(&mut self) -> Result<MapDecl, CliError> {
        let (name, name_offset) = self.name("map name")?;
        self.punct(":")?;
        let (source, source_ring) = self.lookup_ring()?;
        self.punct("->")?;
        let (target, target_ring) = self.lookup_ring()?;
        self.punct("=")?;
        self.punct("[")?;
        let images = self.expr_list(&target_ring, "]")?;
        self.declare(
            &name,
            name_offset,
            Declared::Map {
                source: source_ring,
                target: target_ring,
            },
        )?;
        Ok(MapDecl {
            name,
            source,
            target,
            images,
        })
    }

    /// Comma-separated expressions up to and including `close`.
    fn expr_list(
        &mut self,
        ring: &Arc<PolyRing>,
        close: &'static str,
    ) -> Result<Vec<Polynomial>, CliError> {
        let mut out = vec![self.expr(ring)?];
        loop {
            if self.try_punct(",") {
                out.push(self.expr(ring)?);
            } else if self.try_punct(close) {
                return Ok(out);
            } else {
                self.peek();
                return Err(self.syntax(self.pos, &[",", close, "+", "-", "*", "^"]));
            }
        }
    }

    fn expr(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial, CliError> {
        self.peek();
        let (expr, end) = parse_expr_at(self.text, self.pos).map_err(|e| CliError::Syntax {
            location: self.location(e.offset),
            expected: e.expected.iter().map(|s| s.to_string()).collect(),
            found: e.found,
        })?;
        for (v, offset) in expr.variables() {
            if ring.index_of(v).is_none() {
                return Err(self.name_error(offset, format!("`{v}` is not a variable of {ring}")));
            }
        }
        self.pos = end;
        Ok(expr.to_polynomial(ring).expect("variables were checked"))
    }

    fn paren_expr(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial, CliError> {
        self.punct("(")?;
        let e = self.expr(ring)?;
        self.peek();
        if !self.try_punct(")") {
            return Err(self.syntax(self.pos, &[")", "+", "-", "*", "^"]));
        }
        Ok(e)
    }

    fn degree(&mut self) -> Result<Option<u32>, CliError> {
        let save = self.pos;
        match self.name("degree") {
            Ok((w, _)) if w == "degree" => {}
            _ => {
                self.pos = save;
                return Ok(None);
            }
        }
        self.peek();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse::<u32>()
            .map(Some)
            .map_err(|_| self.syntax(start, &["degree bound"]))
    }

    fn command(&mut self, word: &str) -> Result<Command, CliError> {
        Ok(match word {
            "gb" => Command::Gb {
                ring: self.lookup_ring()?.0,
            },
            "member" | "radical-member" => {
                let (ring, r) = self.lookup_ring()?;
                let element = self.paren_expr(&r)?;
                if word == "member" {
                    Command::Member { ring, element }
                } else {
                    Command::RadicalMember { ring, element }
                }
            }
            "kernel" => Command::Kernel {
                map: self.lookup_map()?.0,
            },
            "classify" => Command::Classify {
                map: self.lookup_map()?.0,
            },
            "iso" => Command::Iso {
                map: self.lookup_map()?.0,
            },
            "sat-member" => {
                let (map, _, target) = self.lookup_map()?;
                let element = self.paren_expr(&target)?;
                Command::SatMember { map, element }
            }
            "scan-saturation" | "seminormal" => {
                let map = self.lookup_map()?.0;
                let degree = self.degree()?;
                if word == "seminormal" {
                    Command::Seminormal { map, degree }
                } else {
                    Command::ScanSaturation { map, degree }
                }
            }
            "regulous" => {
                let ring = self.lookup_ring()?.0;
                self.keyword("via")?;
                let (map, _, target) = self.lookup_map()?;
                let element = self.paren_expr(&target)?;
                Command::Regulous { ring, map, element }
            }
            _ => unreachable!("statement keywords are checked"),
        })
    }
}
