//! Runs a parsed script against the core library.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::time::Instant;

use satura_core::classify::{is_isomorphism, regulous_member, seminormality_status};
use satura_core::ideal::RABINOWITSCH_VAR;
use satura_core::saturation::{
    describe_certificate, saturation_certificate, saturation_scan, DEFAULT_SCAN_BOUND,
    NILPOTENCY_SEARCH,
};
use satura_core::{
    classify, AffineAlgebra, AlgebraMorphism, ClassificationReport, Ideal, Polynomial, ScanReport,
    SeminormalStatus,
};

use crate::error::{CliError, Location};
use crate::script::{Command, MapDecl, RingDecl, Script, StatementKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Default bound for `scan-saturation` and `seminormal`.
    pub degree_bound: u32,
    /// Record elapsed times; off for golden comparisons.
    pub timing: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            degree_bound: DEFAULT_SCAN_BOUND,
            timing: true,
        }
    }
}

/// Result payload of one statement.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Declared,
    Gb {
        order: String,
        basis: Vec<Polynomial>,
    },
    Member {
        member: bool,
        normal_form: Polynomial,
    },
    RadicalMember {
        member: bool,
        certificate: String,
    },
    Kernel {
        generators: Vec<Polynomial>,
        extension: bool,
    },
    Classify(Box<ClassificationReport>),
    SatMember {
        member: bool,
        certificate: String,
    },
    Scan(ScanReport),
    Seminormal(SeminormalStatus),
    Regulous {
        member: bool,
        certificate: String,
    },
    Iso {
        isomorphism: bool,
        certificate: String,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub location: Location,
    /// Statement keyword, e.g. `classify`.
    pub command: String,
    /// The statement as written back by the pretty-printer.
    pub echo: String,
    pub inputs: BTreeMap<String, String>,
    pub outcome: Outcome,
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub records: Vec<Record>,
}

#[derive(Default)]
struct Env {
    algebras: HashMap<String, Arc<AffineAlgebra>>,
    maps: HashMap<String, AlgebraMorphism>,
}

/// Executes statements in order and stops at the first error, which is
/// returned next to the records produced so far.
pub fn execute(script: &Script, config: &Config) -> (Report, Option<CliError>) {
    let mut env = Env::default();
    let mut report = Report::default();
    for st in &script.statements {
        let start = Instant::now();
        let result = match &st.kind {
            StatementKind::Ring(r) => env.declare_ring(r),
            StatementKind::Map(m) => env.declare_map(m),
            StatementKind::Command(c) => env.run(c, config),
        };
        let elapsed = start.elapsed();
        match result {
            Ok(outcome) => report.records.push(Record {
                location: st.location,
                command: keyword(&st.kind).to_string(),
                echo: st.to_string(),
                inputs: inputs(&st.kind),
                outcome,
                elapsed_ms: config
                    .timing
                    .then(|| (elapsed.as_secs_f64() * 1e6).round() / 1e3),
            }),
            Err(source) => {
                return (
                    report,
                    Some(CliError::Domain {
                        location: st.location,
                        source,
                    }),
                )
            }
        }
    }
    (report, None)
}

fn keyword(kind: &StatementKind) -> &'static str {
    match kind {
        StatementKind::Ring(_) => "ring",
        StatementKind::Map(_) => "map",
        StatementKind::Command(c) => c.keyword(),
    }
}

fn inputs(kind: &StatementKind) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        out.insert(k.to_string(), v);
    };
    match kind {
        StatementKind::Ring(r) => {
            put("name", r.name.clone());
            put("ring", r.ring.to_string());
            put("relations", join(&r.relations));
        }
        StatementKind::Map(m) => {
            put("name", m.name.clone());
            put("source", m.source.clone());
            put("target", m.target.clone());
            put("images", join(&m.images));
        }
        StatementKind::Command(c) => match c {
            Command::Gb { ring } => put("ring", ring.clone()),
            Command::Member { ring, element } | Command::RadicalMember { ring, element } => {
                put("ring", ring.clone());
                put("element", element.to_string());
            }
            Command::Kernel { map } | Command::Classify { map } | Command::Iso { map } => {
                put("map", map.clone())
            }
            Command::SatMember { map, element } => {
                put("map", map.clone());
                put("element", element.to_string());
            }
            Command::ScanSaturation { map, degree } | Command::Seminormal { map, degree } => {
                put("map", map.clone());
                if let Some(d) = degree {
                    put("degree", d.to_string());
                }
            }
            Command::Regulous { ring, map, element } => {
                put("ring", ring.clone());
                put("map", map.clone());
                put("element", element.to_string());
            }
        },
    }
    out
}

fn join(items: &[Polynomial]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Certificate text for `f ∈ √I`.
fn radical_certificate(ideal: &Ideal, f: &Polynomial) -> satura_core::Result<(bool, String)> {
    let t = RABINOWITSCH_VAR;
    if ideal.contains(f)? {
        return Ok((true, format!("{f} ∈ I (ideal membership)")));
    }
    if !ideal.radical_contains(f)? {
        return Ok((false, format!("1 ∉ I + (1 - {t}·({f})) (Rabinowitsch)")));
    }
    Ok(match ideal.nilpotency_index(f, NILPOTENCY_SEARCH)? {
        Some(k) => (true, format!("({f})^{k} ∈ I, {f} ∉ I (nilpotent)")),
        None => (true, format!("1 ∈ I + (1 - {t}·({f})) (Rabinowitsch)")),
    })
}

impl Env {
    fn algebra(&self, name: &str) -> &Arc<AffineAlgebra> {
        &self.algebras[name]
    }

    fn map(&self, name: &str) -> &AlgebraMorphism {
        &self.maps[name]
    }

    fn declare_ring(&mut self, r: &RingDecl) -> satura_core::Result<Outcome> {
        let algebra = AffineAlgebra::new(r.name.clone(), &r.ring, r.relations.clone())?;
        self.algebras.insert(r.name.clone(), algebra);
        Ok(Outcome::Declared)
    }

    fn declare_map(&mut self, m: &MapDecl) -> satura_core::Result<Outcome> {
        let morphism = AlgebraMorphism::new(
            self.algebra(&m.source),
            self.algebra(&m.target),
            m.images.clone(),
        )?;
        self.maps.insert(m.name.clone(), morphism);
        Ok(Outcome::Declared)
    }

    fn run(&self, c: &Command, config: &Config) -> satura_core::Result<Outcome> {
        Ok(match c {
            Command::Gb { ring } => {
                let a = self.algebra(ring);
                Outcome::Gb {
                    order: a.ring().order().to_string(),
                    basis: a.relations().groebner().elements().to_vec(),
                }
            }
            Command::Member { ring, element } => {
                let nf = self.algebra(ring).relations().normal_form(element)?;
                Outcome::Member {
                    member: nf.is_zero(),
                    normal_form: nf,
                }
            }
            Command::RadicalMember { ring, element } => {
                let (member, certificate) =
                    radical_certificate(self.algebra(ring).relations(), element)?;
                Outcome::RadicalMember {
                    member,
                    certificate,
                }
            }
            Command::Kernel { map } => {
                let m = self.map(map);
                Outcome::Kernel {
                    generators: m.kernel().generators().to_vec(),
                    extension: m.is_extension(),
                }
            }
            Command::Classify { map } => {
                Outcome::Classify(Box::new(classify(self.map(map), config.degree_bound)?))
            }
            Command::SatMember { map, element } => {
                let cert = saturation_certificate(element, self.map(map))?;
                Outcome::SatMember {
                    member: cert.is_member(),
                    certificate: describe_certificate(element, &cert),
                }
            }
            Command::ScanSaturation { map, degree } => Outcome::Scan(saturation_scan(
                self.map(map),
                degree.unwrap_or(config.degree_bound),
            )?),
            Command::Seminormal { map, degree } => Outcome::Seminormal(seminormality_status(
                self.map(map),
                degree.unwrap_or(config.degree_bound),
            )?),
            Command::Regulous { ring, map, element } => {
                let m = self.map(map);
                let member = regulous_member(element, self.algebra(ring), m)?;
                let cert = saturation_certificate(element, m)?;
                Outcome::Regulous {
                    member,
                    certificate: describe_certificate(element, &cert),
                }
            }
            Command::Iso { map } => {
                let m = self.map(map);
                let isomorphism = is_isomorphism(m)?;
                Outcome::Iso {
                    isomorphism,
                    certificate: iso_certificate(m)?,
                }
            }
        })
    }
}

fn iso_certificate(m: &AlgebraMorphism) -> satura_core::Result<String> {
    if !m.is_extension() {
        return Ok("not injective: the kernel is larger than the source relations".to_string());
    }
    let mut parts = Vec::new();
    for (name, y) in m.target().variables().iter().zip(m.target().ring().gens()) {
        match m.preimage(&y)? {
            Some(p) => parts.push(format!("{name} = image of {p}")),
            None => return Ok(format!("not surjective: {name} has no preimage")),
        }
    }
    Ok(format!("inverse: {}", parts.join(", ")))
}
