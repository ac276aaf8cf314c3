//! Corpus files and batch verification.
//!
//! A corpus is a CSV of named PD codes, optionally carrying reference
//! columns (Alexander coefficients, signature, genus, fiberedness) used for
//! cross-validation. The bundled corpus covers the alternating knots through
//! nine crossings, one reduced alternating diagram per knot.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::alexander::{alexander_polynomial, AlexanderPolynomial};
use crate::analyze::{analyze_diagram, lemma37_check, verify_main_theorem, TheoremVerdict};
use crate::catalog::torus_alexander_half;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::floer::{check_ag_bound, check_trapezoidal, hf_plus_descriptors};
use crate::graphs::{is_fibered_special, torus_sum_decomposition};
use crate::invariants::{invariant_report, is_sqp_fibered, InvariantReport};
use crate::seifert::{murasugi_decompose, SeifertData};

pub const BUNDLED_CORPUS_NAME: &str = "alternating-knots-to-9-crossings.csv";

/// Location of the bundled corpus; KNOTSCOPE_CORPUS_DIR overrides the
/// directory baked in at compile time.
pub fn bundled_corpus_path() -> PathBuf {
    let dir = match std::env::var("KNOTSCOPE_CORPUS_DIR") {
        Ok(dir) => PathBuf::from(dir),
        Err(_) => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../cli/data"),
    };
    dir.join(BUNDLED_CORPUS_NAME)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub pd: String,
    pub alexander: Option<Vec<i64>>,
    pub signature: Option<i64>,
    pub genus: Option<i64>,
    pub fibered: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct CorpusLoad {
    pub records: Vec<KnotRecord>,
    /// (line number, message) for rows skipped in lenient mode.
    pub skipped: Vec<(u64, String)>,
}

const SHORT_HEADER: [&str; 2] = ["name", "pd"];
const FULL_HEADER: [&str; 6] = ["name", "pd", "alexander", "signature", "genus", "fibered"];

fn parse_row(rec: &csv::StringRecord, full: bool) -> std::result::Result<KnotRecord, String> {
    let name = rec.get(0).unwrap_or("").trim().to_string();
    if name.is_empty() {
        return Err("empty name".into());
    }
    let pd = rec.get(1).unwrap_or("").trim().to_string();
    crate::pd::PdCode::parse(&pd).map_err(|e| format!("pd: {e}"))?;
    let mut out = KnotRecord { name, pd, alexander: None, signature: None, genus: None, fibered: None };
    if full {
        let field = |i: usize| rec.get(i).unwrap_or("").trim();
        if !field(2).is_empty() {
            let coeffs: std::result::Result<Vec<i64>, _> =
                field(2).split_whitespace().map(str::parse).collect();
            out.alexander = Some(coeffs.map_err(|e| format!("alexander: {e}"))?);
        }
        if !field(3).is_empty() {
            out.signature = Some(field(3).parse().map_err(|e| format!("signature: {e}"))?);
        }
        if !field(4).is_empty() {
            out.genus = Some(field(4).parse().map_err(|e| format!("genus: {e}"))?);
        }
        if !field(5).is_empty() {
            out.fibered = Some(match field(5) {
                "true" => true,
                "false" => false,
                other => return Err(format!("fibered: expected true/false, got {other}")),
            });
        }
    }
    Ok(out)
}

/// Parses a corpus CSV. In strict mode the first malformed row aborts the
/// load; in lenient mode malformed rows are collected with line numbers and
/// the rest of the file is used.
pub fn load_corpus(path: &Path, lenient: bool) -> Result<CorpusLoad> {
    let text = std::fs::read_to_string(path)
        .map_err(|_| Error::FileMissing { path: path.display().to_string() })?;
    load_corpus_str(&text, lenient)
}

pub fn load_corpus_str(text: &str, lenient: bool) -> Result<CorpusLoad> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .from_reader(text.as_bytes());
    let header: Vec<String> = match reader.headers() {
        Ok(h) if !h.is_empty() && h.iter().any(|f| !f.trim().is_empty()) => {
            h.iter().map(|f| f.trim().to_string()).collect()
        }
        _ => return Err(Error::HeaderMismatch { got: String::new() }),
    };
    let full = if header == FULL_HEADER {
        true
    } else if header == SHORT_HEADER {
        false
    } else {
        return Err(Error::HeaderMismatch { got: header.join(",") });
    };

    let mut records: Vec<KnotRecord> = Vec::new();
    let mut skipped = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| Error::RowParseError {
            row: e.position().map_or(0, |p| p.line() as usize),
            details: e.to_string(),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        let parsed = parse_row(&row, full).and_then(|r| {
            if records.iter().any(|prev| prev.name == r.name) {
                Err(format!("duplicate name {}", r.name))
            } else {
                Ok(r)
            }
        });
        match parsed {
            Ok(r) => records.push(r),
            Err(details) if lenient => skipped.push((line, details)),
            Err(details) => {
                return Err(Error::RowParseError { row: line as usize, details })
            }
        }
    }
    Ok(CorpusLoad { records, skipped })
}

/// Renders records back to the canonical CSV text (full header, LF endings).
pub fn render_corpus_csv(records: &[KnotRecord]) -> String {
    let mut out = String::from("name,pd,alexander,signature,genus,fibered\n");
    for r in records {
        let alex = r.alexander.as_ref().map_or(String::new(), |c| {
            c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        });
        let opt_int = |v: Option<i64>| v.map_or(String::new(), |x| x.to_string());
        let fib = r.fibered.map_or(String::new(), |b| b.to_string());
        out.push_str(&format!(
            "{},\"{}\",{},{},{},{}\n",
            r.name,
            r.pd,
            alex,
            opt_int(r.signature),
            opt_int(r.genus),
            fib
        ));
    }
    out
}

/// The bundled corpus regenerated from the catalog, with every reference
/// column computed by this library.
pub fn bundled_corpus_records() -> Vec<KnotRecord> {
    crate::catalog::bundled()
        .into_iter()
        .map(|k| {
            let a = alexander_polynomial(&k.diagram).expect("bundled diagrams are knots");
            let inv = invariant_report(&k.diagram).expect("bundled diagrams are knots");
            KnotRecord {
                name: k.name,
                pd: k.diagram.pd_code().to_bracket_string(),
                alexander: Some(a.coeffs().to_vec()),
                signature: Some(inv.signature),
                genus: Some(inv.genus),
                fibered: Some(inv.fibered),
            }
        })
        .collect()
}

/// The batch checks, named as they appear on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Euler,
    GenusCross,
    FiberedCross,
    AgBound,
    Trapezoid,
    RankNonneg,
    Theorem,
    Lemma37,
    AlexanderProduct,
}

pub const ALL_CHECKS: [Check; 9] = [
    Check::Euler,
    Check::GenusCross,
    Check::FiberedCross,
    Check::AgBound,
    Check::Trapezoid,
    Check::RankNonneg,
    Check::Theorem,
    Check::Lemma37,
    Check::AlexanderProduct,
];

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Euler => "euler",
            Check::GenusCross => "genus-cross",
            Check::FiberedCross => "fibered-cross",
            Check::AgBound => "ag-bound",
            Check::Trapezoid => "trapezoid",
            Check::RankNonneg => "rank-nonneg",
            Check::Theorem => "theorem",
            Check::Lemma37 => "lemma37",
            Check::AlexanderProduct => "alexander-product",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        ALL_CHECKS.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub check: Check,
    pub pass: bool,
    pub message: Option<String>,
}

#[derive(Debug, Clone)]
pub struct RecordResult {
    pub name: String,
    pub outcomes: Vec<CheckOutcome>,
}

#[derive(Debug, Clone)]
pub struct CorpusSummary {
    pub checks: Vec<Check>,
    pub results: Vec<RecordResult>,
    pub skipped: Vec<(u64, String)>,
}

impl CorpusSummary {
    pub fn failure_count(&self) -> usize {
        self.results
            .iter()
            .map(|r| r.outcomes.iter().filter(|o| !o.pass).count())
            .sum()
    }

    /// Deterministic text form: a pure function of records and checks, with
    /// no timing and no scheduling artifacts.
    pub fn render(&self) -> String {
        let mut out = format!(
            "corpus: {} records, checks: {}\n",
            self.results.len(),
            self.checks.iter().map(|c| c.name()).collect::<Vec<_>>().join(",")
        );
        for r in &self.results {
            out.push_str(&format!("{:<20}", r.name));
            for o in &r.outcomes {
                match (&o.pass, &o.message) {
                    (true, _) => out.push_str(&format!(" {}=ok", o.check.name())),
                    (false, Some(m)) => out.push_str(&format!(" {}=FAIL({m})", o.check.name())),
                    (false, None) => out.push_str(&format!(" {}=FAIL", o.check.name())),
                }
            }
            out.push('\n');
        }
        for (line, msg) in &self.skipped {
            out.push_str(&format!("skipped line {line}: {msg}\n"));
        }
        out.push_str(&format!(
            "total: {} records, {} failures, {} skipped\n",
            self.results.len(),
            self.failure_count(),
            self.skipped.len()
        ));
        out
    }
}

/// Per-record state shared by the checks; every stage keeps its own error so
/// failures show up as check data rather than aborting the batch.
struct Ctx<'a> {
    record: &'a KnotRecord,
    diagram: Result<Diagram>,
    alexander: Result<AlexanderPolynomial>,
    invariants: Result<InvariantReport>,
    pieces: Result<Vec<Diagram>>,
}

impl<'a> Ctx<'a> {
    fn new(record: &'a KnotRecord) -> Ctx<'a> {
        let diagram = Diagram::parse(&record.pd);
        let alexander = diagram.as_ref().map_err(Clone::clone).and_then(alexander_polynomial);
        let invariants = diagram.as_ref().map_err(Clone::clone).and_then(invariant_report);
        let pieces = diagram.as_ref().map_err(Clone::clone).and_then(murasugi_decompose);
        Ctx { record, diagram, alexander, invariants, pieces }
    }

    fn diagram(&self) -> std::result::Result<&Diagram, String> {
        self.diagram.as_ref().map_err(|e| format!("parse: {e}"))
    }

    fn alexander(&self) -> std::result::Result<&AlexanderPolynomial, String> {
        self.alexander.as_ref().map_err(|e| format!("alexander: {e}"))
    }

    fn invariants(&self) -> std::result::Result<&InvariantReport, String> {
        self.invariants.as_ref().map_err(|e| format!("invariants: {e}"))
    }

    fn run(&self, check: Check) -> CheckOutcome {
        let verdict = match check {
            Check::Euler => self.check_euler(),
            Check::GenusCross => self.check_genus_cross(),
            Check::FiberedCross => self.check_fibered_cross(),
            Check::AgBound => self.check_ag_bound(),
            Check::Trapezoid => self.check_trapezoid(),
            Check::RankNonneg => self.check_rank_nonneg(),
            Check::Theorem => self.check_theorem(),
            Check::Lemma37 => self.check_lemma37(),
            Check::AlexanderProduct => self.check_alexander_product(),
        };
        match verdict {
            Ok(()) => CheckOutcome { check, pass: true, message: None },
            Err(m) => CheckOutcome { check, pass: false, message: Some(m) },
        }
    }

    fn check_euler(&self) -> std::result::Result<(), String> {
        let d = self.diagram()?;
        if !d.is_connected() {
            return Err("diagram is disconnected".into());
        }
        let (f, n) = (d.face_count(), d.crossing_count());
        if n > 0 && f != n + 2 {
            return Err(format!("Euler count: {f} faces on {n} crossings"));
        }
        Ok(())
    }

    fn check_genus_cross(&self) -> std::result::Result<(), String> {
        let d = self.diagram()?;
        let a = self.alexander()?;
        let s = SeifertData::new(d).map_err(|e| e.to_string())?;
        let surface = s.genus(d).map_err(|e| e.to_string())?;
        if a.genus() != surface {
            return Err(format!("Alexander degree {} vs surface genus {surface}", a.genus()));
        }
        if let Some(reference) = self.record.genus {
            if reference != surface {
                return Err(format!("reference genus {reference} vs computed {surface}"));
            }
        }
        Ok(())
    }

    fn check_fibered_cross(&self) -> std::result::Result<(), String> {
        let a = self.alexander()?;
        let pieces = self.pieces.as_ref().map_err(|e| format!("decompose: {e}"))?;
        let mut graph_fibered = true;
        for p in pieces {
            graph_fibered &= is_fibered_special(p).map_err(|e| e.to_string())?;
        }
        if a.is_fibered() != graph_fibered {
            return Err(format!(
                "monic test says {}, graph criterion says {graph_fibered}",
                a.is_fibered()
            ));
        }
        if let Some(reference) = self.record.fibered {
            if reference != graph_fibered {
                return Err(format!("reference fibered {reference} vs computed {graph_fibered}"));
            }
        }
        Ok(())
    }

    fn check_ag_bound(&self) -> std::result::Result<(), String> {
        let a = self.alexander()?;
        if a.genus() == 0 {
            return Ok(());
        }
        let inv = self.invariants()?;
        let r = check_ag_bound(a, inv.tau_alternating);
        if !r.pass {
            return Err(format!("case {}: {} < {}", r.case, r.lhs, r.rhs));
        }
        Ok(())
    }

    fn check_trapezoid(&self) -> std::result::Result<(), String> {
        let a = self.alexander()?;
        let r = check_trapezoidal(a);
        if !r.monotone_ok {
            return Err(format!("monotone clause fails at index {:?}", r.first_violation));
        }
        if !r.plateau_ok {
            return Err("plateau clause fails".into());
        }
        Ok(())
    }

    fn check_rank_nonneg(&self) -> std::result::Result<(), String> {
        let a = self.alexander()?;
        let inv = self.invariants()?;
        hf_plus_descriptors(a, inv.tau_alternating).map_err(|e| e.to_string())?;
        if let Some(reference) = self.record.signature {
            if reference != inv.signature {
                return Err(format!(
                    "reference signature {reference} vs computed {}",
                    inv.signature
                ));
            }
        }
        Ok(())
    }

    fn check_theorem(&self) -> std::result::Result<(), String> {
        let d = self.diagram()?;
        let r = verify_main_theorem(&self.record.name, d).map_err(|e| e.to_string())?;
        match r.verdict {
            TheoremVerdict::Failed { diagnostics } => Err(diagnostics),
            _ => Ok(()),
        }
    }

    fn check_lemma37(&self) -> std::result::Result<(), String> {
        let d = self.diagram()?;
        let r = lemma37_check(d).map_err(|e| e.to_string())?;
        if r.both_sides_found() && is_sqp_fibered(d).map_err(|e| e.to_string())? {
            return Err(format!(
                "sqp-fibered knot with both-sides circles {:?}",
                r.both_sides
            ));
        }
        Ok(())
    }

    fn check_alexander_product(&self) -> std::result::Result<(), String> {
        let d = self.diagram()?;
        let a = self.alexander()?;
        if let Some(reference) = &self.record.alexander {
            if reference != a.coeffs() {
                return Err(format!(
                    "reference coefficients {reference:?} vs computed {:?}",
                    a.coeffs()
                ));
            }
        }
        let s = SeifertData::new(d).map_err(|e| e.to_string())?;
        if !(s.is_special() && a.is_fibered()) {
            return Ok(());
        }
        let summands = torus_sum_decomposition(d).map_err(|e| e.to_string())?;
        let mut product = AlexanderPolynomial::from_half(&[1]);
        for t in &summands {
            assert!(t.k % 2 == 1, "knot summands have odd k");
            product = product.mul(&AlexanderPolynomial::from_half(&torus_alexander_half(
                (t.k - 1) / 2,
            )));
        }
        if product.coeffs() != a.coeffs() {
            return Err(format!(
                "torus product {:?} vs Delta {:?}",
                product.coeffs(),
                a.coeffs()
            ));
        }
        Ok(())
    }
}

fn run_record(record: &KnotRecord, checks: &[Check]) -> RecordResult {
    let ctx = Ctx::new(record);
    RecordResult {
        name: record.name.clone(),
        outcomes: checks.iter().map(|&c| ctx.run(c)).collect(),
    }
}

/// Runs the selected checks over the records on `jobs` threads (0 picks the
/// machine default). The result order matches the record order whatever the
/// job count.
pub fn corpus_run(records: &[KnotRecord], checks: &[Check], jobs: usize) -> CorpusSummary {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let results: Vec<RecordResult> =
        pool.install(|| records.par_iter().map(|r| run_record(r, checks)).collect());
    CorpusSummary { checks: checks.to_vec(), results, skipped: Vec::new() }
}

/// Full JSON report for one record, with reference-column mismatches listed
/// under "reference_mismatches".
pub fn analyze_record(record: &KnotRecord) -> Result<Value> {
    let d = Diagram::parse(&record.pd)?;
    let report = analyze_diagram(&record.name, &d)?;
    let mut mismatches: Vec<String> = Vec::new();
    if let Some(reference) = &record.alexander {
        if reference != report.alexander.coeffs() {
            mismatches.push(format!(
                "alexander: reference {reference:?}, computed {:?}",
                report.alexander.coeffs()
            ));
        }
    }
    let mut check_int = |label: &str, reference: Option<i64>, computed: i64| {
        if let Some(r) = reference {
            if r != computed {
                mismatches.push(format!("{label}: reference {r}, computed {computed}"));
            }
        }
    };
    check_int("signature", record.signature, report.invariants.signature);
    check_int("genus", record.genus, report.invariants.genus);
    if let Some(r) = record.fibered {
        if r != report.invariants.fibered {
            mismatches.push(format!(
                "fibered: reference {r}, computed {}",
                report.invariants.fibered
            ));
        }
    }
    let mut j = report.to_json();
    j["reference_mismatches"] = json!(mismatches);
    Ok(j)
}

/// The published shape of the analyze report, as a JSON Schema document.
pub fn report_schema() -> Value {
    let integer = json!({"type": "integer"});
    let boolean = json!({"type": "boolean"});
    let string = json!({"type": "string"});
    let int_array = json!({"type": "array", "items": {"type": "integer"}});
    let summand = json!({
        "type": "object",
        "required": ["k", "sign"],
        "properties": {"k": integer, "sign": string},
    });
    json!({
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "knotscope analyze report",
        "type": "object",
        "required": [
            "name", "diagram", "seifert", "pieces", "alexander", "invariants",
            "summands", "lemma37", "ag_bound", "trapezoid", "hf_plus", "prop22",
        ],
        "properties": {
            "name": string,
            "diagram": {
                "type": "object",
                "required": ["crossings", "faces", "components", "alternating", "reduced", "connected"],
                "properties": {
                    "crossings": {"type": "array", "items": {
                        "type": "object",
                        "required": ["code", "sign"],
                        "properties": {"code": int_array, "sign": integer},
                    }},
                    "faces": {"type": "array", "items": int_array},
                    "components": {"type": "array", "items": int_array},
                    "alternating": boolean,
                    "reduced": boolean,
                    "connected": boolean,
                },
            },
            "seifert": {
                "type": "object",
                "required": ["circles", "bands", "nested", "special", "genus"],
                "properties": {
                    "circles": integer,
                    "bands": integer,
                    "nested": int_array,
                    "special": boolean,
                    "genus": integer,
                },
            },
            "pieces": {"type": "array", "items": {
                "type": "object",
                "required": ["crossings", "black", "white_valences", "fibered", "tree", "reduced_edges"],
                "properties": {
                    "crossings": integer,
                    "black": integer,
                    "white_valences": int_array,
                    "fibered": boolean,
                    "tree": boolean,
                    "reduced_edges": {"type": "array", "items": {
                        "type": "object",
                        "required": ["m", "sign"],
                        "properties": {"m": integer, "sign": string},
                    }},
                },
            }},
            "alexander": {
                "type": "object",
                "required": ["g", "coeffs"],
                "properties": {"g": integer, "coeffs": int_array},
            },
            "invariants": {
                "type": "object",
                "required": ["genus", "fibered", "signature", "tau_alternating", "sqp_fibered", "determinant"],
                "properties": {
                    "genus": integer,
                    "fibered": boolean,
                    "signature": integer,
                    "tau_alternating": integer,
                    "sqp_fibered": boolean,
                    "determinant": integer,
                },
            },
            "summands": {"anyOf": [{"type": "null"}, {"type": "array", "items": summand}]},
            "lemma37": {
                "type": "object",
                "required": ["nested", "both_sides"],
                "properties": {"nested": int_array, "both_sides": int_array},
            },
            "ag_bound": {"anyOf": [{"type": "null"}, {
                "type": "object",
                "required": ["pass", "case", "lhs", "rhs"],
                "properties": {"pass": boolean, "case": string, "lhs": integer, "rhs": integer},
            }]},
            "trapezoid": {
                "type": "object",
                "required": ["monotone_ok", "plateau_ok", "first_violation", "top_equality"],
                "properties": {
                    "monotone_ok": boolean,
                    "plateau_ok": boolean,
                    "first_violation": {"anyOf": [{"type": "null"}, integer]},
                    "top_equality": boolean,
                },
            },
            "hf_plus": {"type": "array", "items": {
                "type": "object",
                "required": ["s", "b", "delta"],
                "properties": {"s": integer, "b": integer, "delta": integer},
            }},
            "prop22": {"anyOf": [{"type": "null"}, string]},
            "reference_mismatches": {"type": "array", "items": string},
        },
    })
}

/// Checks a value against the subset of JSON Schema used by
/// `report_schema`: type tags, required properties, items, anyOf.
pub fn validate_against_schema(value: &Value, schema: &Value) -> std::result::Result<(), String> {
    if let Some(any_of) = schema.get("anyOf").and_then(Value::as_array) {
        if any_of.iter().any(|s| validate_against_schema(value, s).is_ok()) {
            return Ok(());
        }
        return Err(format!("{value} matches no anyOf branch"));
    }
    match schema.get("type").and_then(Value::as_str) {
        Some("object") => {
            let obj = value.as_object().ok_or_else(|| format!("{value} is not an object"))?;
            if let Some(required) = schema.get("required").and_then(Value::as_array) {
                for key in required {
                    let key = key.as_str().unwrap();
                    if !obj.contains_key(key) {
                        return Err(format!("missing required key {key}"));
                    }
                }
            }
            if let Some(props) = schema.get("properties").and_then(Value::as_object) {
                for (key, sub) in props {
                    if let Some(v) = obj.get(key) {
                        validate_against_schema(v, sub)
                            .map_err(|e| format!("{key}: {e}"))?;
                    }
                }
            }
            Ok(())
        }
        Some("array") => {
            let arr = value.as_array().ok_or_else(|| format!("{value} is not an array"))?;
            if let Some(items) = schema.get("items") {
                for (i, v) in arr.iter().enumerate() {
                    validate_against_schema(v, items).map_err(|e| format!("[{i}]: {e}"))?;
                }
            }
            Ok(())
        }
        Some("integer") => {
            if value.is_i64() || value.is_u64() {
                Ok(())
            } else {
                Err(format!("{value} is not an integer"))
            }
        }
        Some("boolean") => value.as_bool().map(|_| ()).ok_or_else(|| format!("{value} is not a boolean")),
        Some("string") => value.as_str().map(|_| ()).ok_or_else(|| format!("{value} is not a string")),
        Some("null") => {
            if value.is_null() {
                Ok(())
            } else {
                Err(format!("{value} is not null"))
            }
        }
        other => Err(format!("unsupported schema type {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_csv() -> String {
        render_corpus_csv(&bundled_corpus_records())
    }

    #[test]
    fn bundled_records_load_back_verbatim() {
        let records = bundled_corpus_records();
        assert!(records.len() >= 80, "corpus has {} records", records.len());
        let text = render_corpus_csv(&records);
        let load = load_corpus_str(&text, false).unwrap();
        assert_eq!(load.records, records);
        assert!(load.skipped.is_empty());
        for r in &load.records {
            Diagram::parse(&r.pd).unwrap();
        }
    }

    #[test]
    fn empty_file_is_a_header_mismatch() {
        assert!(matches!(
            load_corpus_str("", false),
            Err(Error::HeaderMismatch { .. })
        ));
        assert!(matches!(
            load_corpus_str("name;pd\n", false),
            Err(Error::HeaderMismatch { .. })
        ));
    }

    #[test]
    fn missing_file_is_reported() {
        assert!(matches!(
            load_corpus(Path::new("/nonexistent/corpus.csv"), false),
            Err(Error::FileMissing { .. })
        ));
    }

    #[test]
    fn malformed_pd_row_is_an_error_or_skipped() {
        let text = "name,pd\nok,\"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\"\nbad,\"[[1,2,3]]\"\n";
        match load_corpus_str(text, false) {
            Err(Error::RowParseError { row, .. }) => assert_eq!(row, 3),
            other => panic!("expected RowParseError, got {other:?}"),
        }
        let lenient = load_corpus_str(text, true).unwrap();
        assert_eq!(lenient.records.len(), 1);
        assert_eq!(lenient.skipped.len(), 1);
        assert_eq!(lenient.skipped[0].0, 3);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = "name,pd\nk,\"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\"\nk,\"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\"\n";
        assert!(matches!(
            load_corpus_str(text, false),
            Err(Error::RowParseError { row: 3, .. })
        ));
    }

    #[test]
    fn full_corpus_run_is_clean() {
        let load = load_corpus_str(&sample_csv(), false).unwrap();
        let summary = corpus_run(&load.records, &ALL_CHECKS, 4);
        assert_eq!(summary.failure_count(), 0, "{}", summary.render());
        assert_eq!(summary.results.len(), load.records.len());
    }

    #[test]
    fn job_count_does_not_change_the_summary() {
        let load = load_corpus_str(&sample_csv(), false).unwrap();
        let one = corpus_run(&load.records, &ALL_CHECKS, 1).render();
        let eight = corpus_run(&load.records, &ALL_CHECKS, 8).render();
        assert_eq!(one, eight);
    }

    #[test]
    fn corrupted_reference_column_fails_its_check() {
        let mut records = load_corpus_str(&sample_csv(), false).unwrap().records;
        let r = records.iter_mut().find(|r| r.name == "4_1").unwrap();
        r.signature = Some(2);
        r.genus = Some(7);
        let summary = corpus_run(&records, &ALL_CHECKS, 2);
        let bad = summary.results.iter().find(|r| r.name == "4_1").unwrap();
        let failed: Vec<&str> = bad
            .outcomes
            .iter()
            .filter(|o| !o.pass)
            .map(|o| o.check.name())
            .collect();
        assert_eq!(failed, ["genus-cross", "rank-nonneg"]);
        assert_eq!(summary.failure_count(), 2);
    }

    #[test]
    fn unparseable_record_fails_every_check() {
        let record = KnotRecord {
            name: "broken".into(),
            pd: "[[1,4,2,5]]".into(),
            alexander: None,
            signature: None,
            genus: None,
            fibered: None,
        };
        let summary = corpus_run(&[record], &ALL_CHECKS, 1);
        assert_eq!(summary.failure_count(), ALL_CHECKS.len());
    }

    #[test]
    fn check_names_round_trip() {
        for c in ALL_CHECKS {
            assert_eq!(Check::from_name(c.name()), Some(c));
        }
        assert_eq!(Check::from_name("nonsense"), None);
    }

    #[test]
    fn analyze_reports_validate_against_the_schema() {
        let schema = report_schema();
        for record in bundled_corpus_records() {
            let report = analyze_record(&record).unwrap();
            validate_against_schema(&report, &schema)
                .unwrap_or_else(|e| panic!("{}: {e}", record.name));
            assert_eq!(report["reference_mismatches"], json!([]));
        }
    }

    fn default_bundled_path() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../cli/data").join(BUNDLED_CORPUS_NAME)
    }

    #[test]
    fn bundled_corpus_file_is_in_sync_with_the_catalog() {
        let on_disk = std::fs::read_to_string(default_bundled_path())
            .expect("bundled corpus file exists; run the regenerate test to create it");
        assert_eq!(on_disk, sample_csv(), "run the regenerate_bundled_corpus_file test");
    }

    /// Rewrites the bundled CSV from the catalog. Run explicitly after
    /// catalog changes: cargo test -p knotscope regenerate -- --ignored
    #[test]
    #[ignore]
    fn regenerate_bundled_corpus_file() {
        let path = default_bundled_path();
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, sample_csv()).unwrap();
    }

    #[test]
    fn analyze_record_flags_reference_mismatches() {
        let record = KnotRecord {
            name: "3_1".into(),
            pd: "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]".into(),
            alexander: Some(vec![1, -1, 1]),
            signature: Some(-2),
            genus: Some(1),
            fibered: Some(true),
        };
        let report = analyze_record(&record).unwrap();
        let mismatches = report["reference_mismatches"].as_array().unwrap();
        // The all-negative trefoil has signature +2.
        assert_eq!(mismatches.len(), 1);
        assert!(mismatches[0].as_str().unwrap().contains("signature"));
    }
}
