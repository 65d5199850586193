//! Human and JSON renderings of a report.

use serde::Serialize;
use serde_json::{json, Value};

use satura_core::saturation::ScanElement;
use satura_core::{ClassificationReport, Polynomial, ScanReport, SeminormalStatus};

use crate::exec::{Outcome, Report};

/// Printed once before human output: operations such as generic degrees and
/// birationality assume prime relation ideals.
pub const TRUST_BANNER: &str =
    "trusted: irreducible (relation ideals are assumed prime; this is not checked)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Json,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Human => render_human(report),
        Format::Json => render_json(report),
    }
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    command: &'a str,
    inputs: &'a std::collections::BTreeMap<String, String>,
    verdict: Value,
    certificate: Value,
    elapsed_ms: Option<f64>,
}

/// One JSON object per line.
pub fn render_json(report: &Report) -> String {
    let mut out = String::new();
    for r in &report.records {
        let (verdict, certificate) = json_payload(&r.outcome);
        let rec = JsonRecord {
            command: &r.command,
            inputs: &r.inputs,
            verdict,
            certificate,
            elapsed_ms: r.elapsed_ms,
        };
        out.push_str(&serde_json::to_string(&rec).expect("records serialize"));
        out.push('\n');
    }
    out
}

fn strings(items: &[Polynomial]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn status_text(s: &SeminormalStatus) -> String {
    match s {
        SeminormalStatus::No(_) => "no".to_string(),
        SeminormalStatus::YesUpTo(d) => format!("yes up to degree {d}"),
        SeminormalStatus::Yes => "yes".to_string(),
    }
}

fn status_certificate(s: &SeminormalStatus) -> String {
    match s {
        SeminormalStatus::No(b) => {
            format!("{b} lies in the seminormalization but not in the source")
        }
        SeminormalStatus::YesUpTo(_) => satura_core::saturation::SCAN_CAVEAT.to_string(),
        SeminormalStatus::Yes => "every target generator comes from the source".to_string(),
    }
}

fn scan_element_json(e: &ScanElement) -> Value {
    json!({
        "element": e.element.to_string(),
        "preimage": e.preimage.as_ref().map(ToString::to_string),
        "nilpotency": e.nilpotency,
    })
}

fn json_payload(outcome: &Outcome) -> (Value, Value) {
    match outcome {
        Outcome::Declared => (json!("declared"), Value::Null),
        Outcome::Gb { order, basis } => (
            json!(strings(basis)),
            json!({ "order": order, "size": basis.len() }),
        ),
        Outcome::Member {
            member,
            normal_form,
        } => (json!(member), json!(format!("normal form: {normal_form}"))),
        Outcome::RadicalMember {
            member,
            certificate,
        }
        | Outcome::SatMember {
            member,
            certificate,
        }
        | Outcome::Regulous {
            member,
            certificate,
        } => (json!(member), json!(certificate)),
        Outcome::Kernel {
            generators,
            extension,
        } => (json!(strings(generators)), json!(kernel_note(*extension))),
        Outcome::Classify(r) => classify_json(r),
        Outcome::Scan(s) => (
            json!({
                "ideal_part": s.ideal_part.iter().map(scan_element_json).collect::<Vec<_>>(),
                "radical_part": s.radical_part.iter().map(scan_element_json).collect::<Vec<_>>(),
                "outside_image": s.outside_image().map(|e| e.element.to_string()).collect::<Vec<_>>(),
            }),
            json!({ "bound": s.bound, "candidates": s.candidates, "caveat": s.caveat() }),
        ),
        Outcome::Seminormal(s) => (json!(status_text(s)), json!(status_certificate(s))),
        Outcome::Iso {
            isomorphism,
            certificate,
        } => (json!(isomorphism), json!(certificate)),
    }
}

fn kernel_note(extension: bool) -> &'static str {
    if extension {
        "equals the source relations: the map is injective"
    } else {
        "larger than the source relations: the map is not injective"
    }
}

fn classify_json(r: &ClassificationReport) -> (Value, Value) {
    let verdict = json!({
        "well_defined": r.well_defined,
        "extension": r.extension,
        "finite": r.finite,
        "integral": r.integral,
        "birational": r.birational,
        "radicial": r.radicial,
        "subintegral": r.subintegral,
        "isomorphism": r.isomorphism,
        "seminormal_in": r.seminormal_in.as_ref().map(status_text),
    });
    let degrees: serde_json::Map<String, Value> = r
        .generic_degrees
        .iter()
        .map(|(n, d)| (n.clone(), json!(d)))
        .collect();
    let certificate = json!({
        "generic_degrees": degrees,
        "non_integral_witness": r.non_integral_witness,
        "unsaturated_witness": r.unsaturated_witness,
        "seminormal_witness": match &r.seminormal_in {
            Some(SeminormalStatus::No(b)) => Some(b.to_string()),
            _ => None,
        },
        "consistency_violations": r.consistency_violations,
    });
    (verdict, certificate)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn listing(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(", ")
    }
}

/// Label/value rows of a record body.
fn human_rows(outcome: &Outcome) -> Vec<(String, String)> {
    let row = |k: &str, v: String| (k.to_string(), v);
    match outcome {
        Outcome::Declared => Vec::new(),
        Outcome::Gb { order, basis } => {
            let mut rows = vec![row(
                "basis",
                format!("{} element(s), reduced, {order}", basis.len()),
            )];
            rows.extend(basis.iter().map(|g| row("", g.to_string())));
            rows
        }
        Outcome::Member {
            member,
            normal_form,
        } => vec![
            row("verdict", member.to_string()),
            row("normal form", normal_form.to_string()),
        ],
        Outcome::RadicalMember {
            member,
            certificate,
        }
        | Outcome::SatMember {
            member,
            certificate,
        }
        | Outcome::Regulous {
            member,
            certificate,
        } => vec![
            row("verdict", member.to_string()),
            row("certificate", certificate.clone()),
        ],
        Outcome::Kernel {
            generators,
            extension,
        } => {
            let mut rows = vec![row(
                "kernel",
                format!(
                    "{} generator(s), {}",
                    generators.len(),
                    kernel_note(*extension)
                ),
            )];
            rows.extend(generators.iter().map(|g| row("", g.to_string())));
            rows
        }
        Outcome::Classify(r) => classify_rows(r),
        Outcome::Scan(s) => scan_rows(s),
        Outcome::Seminormal(s) => vec![
            row("verdict", status_text(s)),
            row("certificate", status_certificate(s)),
        ],
        Outcome::Iso {
            isomorphism,
            certificate,
        } => vec![
            row("verdict", isomorphism.to_string()),
            row("certificate", certificate.clone()),
        ],
    }
}

fn classify_rows(r: &ClassificationReport) -> Vec<(String, String)> {
    let with = |flag: bool, note: Option<String>| match note {
        Some(n) => format!("{} ({n})", yes_no(flag)),
        None => yes_no(flag).to_string(),
    };
    let degrees = (!r.generic_degrees.is_empty()).then(|| {
        let parts: Vec<String> = r
            .generic_degrees
            .iter()
            .map(|(n, d)| match d {
                Some(d) => format!("{n} {d}"),
                None => format!("{n} transcendental"),
            })
            .collect();
        format!("generic degrees: {}", parts.join(", "))
    });
    let seminormal = match &r.seminormal_in {
        Some(SeminormalStatus::No(b)) => format!("no (witness {b})"),
        Some(s) => status_text(s),
        None => "n/a (not an extension)".to_string(),
    };
    let violations = if r.consistency_violations.is_empty() {
        "no violations".to_string()
    } else {
        r.consistency_violations.join("; ")
    };
    vec![
        ("well-defined".into(), yes_no(r.well_defined).into()),
        ("extension".into(), yes_no(r.extension).into()),
        (
            "finite".into(),
            with(
                r.finite,
                r.non_integral_witness
                    .as_ref()
                    .map(|w| format!("{w} is not integral")),
            ),
        ),
        ("integral".into(), yes_no(r.integral).into()),
        ("birational".into(), with(r.birational, degrees)),
        (
            "radicial".into(),
            with(
                r.radicial,
                r.unsaturated_witness
                    .as_ref()
                    .map(|w| format!("{w} is not in the saturation")),
            ),
        ),
        ("subintegral".into(), yes_no(r.subintegral).into()),
        ("isomorphism".into(), yes_no(r.isomorphism).into()),
        ("seminormal".into(), seminormal),
        ("consistency".into(), violations),
    ]
}

fn describe_found(e: &ScanElement) -> String {
    let mut s = e.element.to_string();
    if let Some(k) = e.nilpotency {
        s.push_str(&format!(" [Δ^{k} ∈ J]"));
    }
    match &e.preimage {
        Some(p) => s.push_str(&format!(" = image of {p}")),
        None => s.push_str(" (outside the image)"),
    }
    s
}

fn scan_rows(s: &ScanReport) -> Vec<(String, String)> {
    let mut rows = vec![(
        "bound".to_string(),
        format!("degree {} ({} candidate monomials)", s.bound, s.candidates),
    )];
    let mut section = |label: &str, items: &[ScanElement]| {
        if items.is_empty() {
            rows.push((label.to_string(), "(none)".to_string()));
        }
        for (i, e) in items.iter().enumerate() {
            let l = if i == 0 { label } else { "" };
            rows.push((l.to_string(), describe_found(e)));
        }
    };
    section("Δ(b) ∈ J", &s.ideal_part);
    section("Δ(b) ∈ √J only", &s.radical_part);
    let outside: Vec<String> = s.outside_image().map(|e| e.element.to_string()).collect();
    rows.push(("outside image".to_string(), listing(&outside)));
    rows.push(("caveat".to_string(), s.caveat().to_string()));
    rows
}

/// Aligned plain-text report.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    if report.records.is_empty() {
        return out;
    }
    out.push_str(TRUST_BANNER);
    out.push_str("\n\n");
    for (i, r) in report.records.iter().enumerate() {
        out.push_str(&format!("[{}] {}\n", i + 1, r.echo));
        let mut rows = human_rows(&r.outcome);
        if let (Some(ms), false) = (r.elapsed_ms, rows.is_empty()) {
            rows.push(("time".to_string(), format!("{ms:.3} ms")));
        }
        let width = rows
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        for (k, v) in rows {
            let pad = width - k.chars().count();
            out.push_str(format!("    {k}{}  {v}", " ".repeat(pad)).trim_end());
            out.push('\n');
        }
    }
    out
}
