//! Output documents and their three renderings. JSON is the authoritative
//! machine format; CSV flattens tuples to semicolon-joined lists; text is
//! for reading in a terminal.

use clap::ValueEnum;
use ringlab_core::{ClassificationProfile, Elem, FiniteRing, FLAGS};
use ringlab_suite::{OpenQuestionReport, SuiteReport, Witness};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Serialize)]
pub struct RingInfoDoc {
    /// Canonical spec text; always re-parses to the same construction.
    pub spec: String,
    pub order: usize,
    pub units: usize,
    pub local: bool,
    pub reduced: bool,
    pub nilradical: Vec<Elem>,
    pub maximal_ideals: Vec<Vec<Elem>>,
    pub validated: bool,
}

#[derive(Serialize)]
pub struct IdealRow {
    pub index: usize,
    pub size: usize,
    pub proper: bool,
    pub maximal: bool,
    pub prime: bool,
    pub members: Vec<Elem>,
}

#[derive(Serialize)]
pub struct IdealsDoc {
    pub ring: String,
    pub order: usize,
    pub count: usize,
    pub ideals: Vec<IdealRow>,
}

#[derive(Serialize)]
pub struct ClassifyRow {
    pub members: Vec<Elem>,
    pub profile: ClassificationProfile,
}

#[derive(Serialize)]
pub struct ClassifyDoc {
    pub ring: String,
    pub ideals: Vec<ClassifyRow>,
}

#[derive(Serialize)]
pub struct SearchHit {
    pub ring: String,
    pub members: Vec<Elem>,
    pub member_names: Vec<String>,
    pub profile: ClassificationProfile,
}

#[derive(Serialize)]
pub struct SearchDoc {
    pub expression: String,
    pub rings_scanned: u64,
    pub ideals_scanned: u64,
    pub hits: Vec<SearchHit>,
    pub build_errors: Vec<String>,
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}

fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

fn csv_row(fields: &[String]) -> String {
    let escaped: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    format!("{}\n", escaped.join(","))
}

fn joined(elems: &[Elem]) -> String {
    elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";")
}

fn named_set(ring: &FiniteRing, members: &[Elem]) -> String {
    let names: Vec<&str> = members.iter().map(|&e| ring.elem_name(e)).collect();
    format!("{{{}}}", names.join(", "))
}

fn named_tuple(ring: &FiniteRing, elems: &[Elem]) -> String {
    let names: Vec<&str> = elems.iter().map(|&e| ring.elem_name(e)).collect();
    format!("({})", names.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Witness tuples for the CSV column: `flag=a;b;c` joined by `|`, in flag
/// declaration order.
fn witness_column(profile: &ClassificationProfile) -> String {
    FLAGS
        .iter()
        .filter_map(|&f| profile.witnesses.get(f).map(|w| format!("{f}={}", joined(w))))
        .collect::<Vec<_>>()
        .join("|")
}

pub fn ring_info(doc: &RingInfoDoc, ring: &FiniteRing, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let header = "spec,order,units,local,reduced,nilradical,maximal_ideals,validated\n";
            let ideals =
                doc.maximal_ideals.iter().map(|m| joined(m)).collect::<Vec<_>>().join("|");
            let row = csv_row(&[
                doc.spec.clone(),
                doc.order.to_string(),
                doc.units.to_string(),
                doc.local.to_string(),
                doc.reduced.to_string(),
                joined(&doc.nilradical),
                ideals,
                doc.validated.to_string(),
            ]);
            format!("{header}{row}")
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("ring: {}\n", doc.spec));
            out.push_str(&format!("order: {}\n", doc.order));
            out.push_str(&format!("units: {}\n", doc.units));
            out.push_str(&format!("local: {}\n", yes_no(doc.local)));
            out.push_str(&format!("reduced: {}\n", yes_no(doc.reduced)));
            out.push_str(&format!("nilradical: {}\n", named_set(ring, &doc.nilradical)));
            out.push_str(&format!("maximal ideals ({}):\n", doc.maximal_ideals.len()));
            for m in &doc.maximal_ideals {
                out.push_str(&format!("  {}\n", named_set(ring, m)));
            }
            out.push_str(&format!(
                "validated: {}\n",
                if doc.validated { "ok" } else { "FAILED" }
            ));
            out
        }
    }
}

pub fn ideals(doc: &IdealsDoc, ring: &FiniteRing, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let mut out = String::from("ring,index,size,proper,maximal,prime,members\n");
            for row in &doc.ideals {
                out.push_str(&csv_row(&[
                    doc.ring.clone(),
                    row.index.to_string(),
                    row.size.to_string(),
                    row.proper.to_string(),
                    row.maximal.to_string(),
                    row.prime.to_string(),
                    joined(&row.members),
                ]));
            }
            out
        }
        Format::Text => {
            let mut out = format!("ring: {} (order {}, {} ideals)\n", doc.ring, doc.order, doc.count);
            out.push_str("index  size  proper  maximal  prime  members\n");
            for row in &doc.ideals {
                out.push_str(&format!(
                    "{:<5}  {:<4}  {:<6}  {:<7}  {:<5}  {}\n",
                    row.index,
                    row.size,
                    yes_no(row.proper),
                    yes_no(row.maximal),
                    yes_no(row.prime),
                    named_set(ring, &row.members)
                ));
            }
            out
        }
    }
}

pub fn classify(doc: &ClassifyDoc, ring: &FiniteRing, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let mut out = format!("ring,members,{},witnesses\n", FLAGS.join(","));
            for row in &doc.ideals {
                let mut fields = vec![doc.ring.clone(), joined(&row.members)];
                for &flag in FLAGS.iter() {
                    fields.push(row.profile.get(flag).expect("known flag").to_string());
                }
                fields.push(witness_column(&row.profile));
                out.push_str(&csv_row(&fields));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for row in &doc.ideals {
                out.push_str(&format!(
                    "ideal {} in {}\n",
                    named_set(ring, &row.members),
                    doc.ring
                ));
                for &flag in FLAGS.iter() {
                    let value = row.profile.get(flag).expect("known flag");
                    match row.profile.witnesses.get(flag) {
                        Some(w) => out.push_str(&format!(
                            "  {flag}: {}  witness {}\n",
                            yes_no(value),
                            named_tuple(ring, w)
                        )),
                        None => out.push_str(&format!("  {flag}: {}\n", yes_no(value))),
                    }
                }
            }
            out
        }
    }
}

fn witness_csv_fields(witness: Option<&Witness>) -> [String; 4] {
    match witness {
        None => [String::new(), String::new(), String::new(), String::new()],
        Some(w) => [
            w.flag.clone().unwrap_or_default(),
            w.ideals.iter().map(|m| joined(m)).collect::<Vec<_>>().join("|"),
            joined(&w.elements),
            w.note.clone(),
        ],
    }
}

pub fn suite_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => {
            let mut out = String::from(
                "ring,check,outcome,instances,millis,witness_flag,witness_ideals,\
                 witness_elements,witness_note\n",
            );
            for v in &report.results {
                let [flag, ideals, elements, note] = witness_csv_fields(v.witness.as_ref());
                out.push_str(&csv_row(&[
                    v.ring.clone(),
                    v.check_id.clone(),
                    format!("{:?}", v.outcome),
                    v.instances_checked.to_string(),
                    v.millis.to_string(),
                    flag,
                    ideals,
                    elements,
                    note,
                ]));
            }
            out
        }
        Format::Text => {
            let c = &report.config;
            let mut out = format!(
                "suite: cap {}, slow {}, parallelism {}, corpus {}\n",
                c.cap, c.slow, c.parallelism, c.corpus_source
            );
            let ok = report.corpus.iter().filter(|r| r.status == "ok").count();
            out.push_str(&format!(
                "rings: {} ({} ok, {} failed to build)\n\n",
                report.corpus.len(),
                ok,
                report.corpus.len() - ok
            ));
            out.push_str(&format!(
                "{:<34} {:>8} {:>8} {:>7} {:>12}\n",
                "check", "verified", "vacuous", "failed", "instances"
            ));
            for (id, tally) in &report.summary.per_check {
                out.push_str(&format!(
                    "{:<34} {:>8} {:>8} {:>7} {:>12}\n",
                    id, tally.verified, tally.vacuous, tally.counterexamples, tally.instances
                ));
            }
            if !report.summary.never_verified.is_empty() {
                out.push_str(&format!(
                    "\nnever verified (vacuous on every ring): {}\n",
                    report.summary.never_verified.join(", ")
                ));
            }
            for row in report.corpus.iter().filter(|r| r.status == "error") {
                out.push_str(&format!(
                    "\nbuild error: {}: {}\n",
                    row.spec,
                    row.error.as_deref().unwrap_or("unknown")
                ));
            }
            for v in &report.results {
                if format!("{:?}", v.outcome) != "Counterexample" {
                    continue;
                }
                out.push_str(&format!("\ncounterexample: {} on {}\n", v.check_id, v.ring));
                if let Some(w) = &v.witness {
                    out.push_str(&format!("  note: {}\n", w.note));
                    for m in &w.ideals {
                        out.push_str(&format!("  ideal: {{{}}}\n", joined(m)));
                    }
                    if !w.element_names.is_empty() {
                        out.push_str(&format!(
                            "  elements: ({})\n",
                            w.element_names.join(", ")
                        ));
                    }
                }
            }
            let s = &report.summary;
            out.push_str(&format!(
                "\nsummary: {} verified, {} vacuous, {} counterexamples, {} build errors\n",
                s.verified, s.vacuous, s.counterexamples, s.errors
            ));
            out
        }
    }
}

pub fn search(doc: &SearchDoc, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let mut out = format!("ring,members,{},witnesses\n", FLAGS.join(","));
            for hit in &doc.hits {
                let mut fields = vec![hit.ring.clone(), joined(&hit.members)];
                for &flag in FLAGS.iter() {
                    fields.push(hit.profile.get(flag).expect("known flag").to_string());
                }
                fields.push(witness_column(&hit.profile));
                out.push_str(&csv_row(&fields));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "search: {} over {} rings, {} proper ideals\n",
                doc.expression, doc.rings_scanned, doc.ideals_scanned
            );
            for err in &doc.build_errors {
                out.push_str(&format!("build error: {err}\n"));
            }
            for hit in &doc.hits {
                out.push_str(&format!(
                    "{}  {{{}}}\n",
                    hit.ring,
                    hit.member_names.join(", ")
                ));
            }
            out.push_str(&format!("{} hits\n", doc.hits.len()));
            out
        }
    }
}

pub fn open_question(report: &OpenQuestionReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => {
            let mut out = String::from("ring,ideal,factor1,factor2,factor3\n");
            for hit in &report.hits {
                out.push_str(&csv_row(&[
                    hit.ring.clone(),
                    joined(&hit.ideal),
                    joined(&hit.factors[0]),
                    joined(&hit.factors[1]),
                    joined(&hit.factors[2]),
                ]));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "open question scan: {} rings, {} instances, {} hits\n",
                report.rings_scanned, report.instances_checked, report.hits.len()
            );
            for err in &report.build_errors {
                out.push_str(&format!("build error: {err}\n"));
            }
            for hit in &report.hits {
                out.push_str(&format!(
                    "{}: ideal {{{}}} with factors {{{}}} {{{}}} {{{}}}\n",
                    hit.ring,
                    joined(&hit.ideal),
                    joined(&hit.factors[0]),
                    joined(&hit.factors[1]),
                    joined(&hit.factors[2])
                ));
            }
            if report.hits.is_empty() {
                out.push_str("no hits: every recorded instance satisfied the containment\n");
            }
            out
        }
    }
}
