//! Command implementations behind the `ade-lattice` binary.
//!
//! Each `cmd_*` function does the work of one subcommand and returns a
//! [`CmdOutput`] (rendered text plus an ok flag) or a [`CliError`]. The
//! binary maps those onto stable exit codes:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | success, and every expectation matched              |
//! | 1    | ran to completion, but an expectation failed        |
//! | 2    | bad input: unreadable file, malformed JSON, unknown |
//! |      | family, bad parameters                              |
//! | 3    | precondition failure: indefinite or degenerate      |
//! |      | form, capacity exceeded                             |
//!
//! Text and JSON renderings carry the same numeric content; JSON documents
//! round-trip losslessly through serde.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{
    classify_construction, default_catalog, del_pezzo_table, expected_outcome, theorem_filter,
    variety_identity, Construction, ConstructionError, ExpectedOutcome,
};
use crate::exact_linalg::IntMatrix;
use crate::lattice::{Lattice, LatticeError};
use crate::roots::{classify, AdeType, ClassificationReport, RootsError};
use crate::selftest;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unusable input: exit code 2.
    #[error("{0}")]
    Input(String),
    /// Input parsed fine, but the mathematics refuses it: exit code 3.
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

fn map_lattice_err(e: LatticeError) -> CliError {
    match e {
        LatticeError::NotSymmetric
        | LatticeError::NotIntegral { .. }
        | LatticeError::RankMismatch { .. }
        | LatticeError::DependentBasis => CliError::Input(e.to_string()),
        LatticeError::DegenerateForm
        | LatticeError::NotPositiveDefinite { .. }
        | LatticeError::NotEven { .. }
        | LatticeError::NotFullRank { .. }
        | LatticeError::CapacityExceeded { .. } => CliError::Precondition(e.to_string()),
    }
}

fn map_roots_err(e: RootsError) -> CliError {
    match e {
        RootsError::Lattice(le) => map_lattice_err(le),
        other => CliError::Precondition(other.to_string()),
    }
}

fn map_construction_err(e: ConstructionError) -> CliError {
    match e {
        ConstructionError::InvalidParameter { .. } => CliError::Input(e.to_string()),
        ConstructionError::Lattice(le) => map_lattice_err(le),
        ConstructionError::Roots(re) => map_roots_err(re),
    }
}

/// Output rendering selected by the `--json` flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl OutputFormat {
    pub fn from_json_flag(json: bool) -> Self {
        if json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        }
    }
}

/// What a command hands back to the binary: the full rendered output and
/// whether every expectation held (`ok == false` exits 1).
#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub text: String,
    pub ok: bool,
}

/// One classification with its provenance, expectation, and timing — the
/// unit of JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    /// What was classified: a lattice label, file name, or construction name.
    pub input: String,
    pub report: ClassificationReport,
    /// Invariant factors of the discriminant group as decimal strings
    /// (present on lattice-file classifications).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub disc_factors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<ExpectedOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matched: Option<bool>,
    pub elapsed_us: u64,
}

/// Output of the theorem command: the survivors plus the deduplicated
/// variety names they realize.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremDocument {
    pub catalog_size: usize,
    pub survivors: Vec<ReportDocument>,
    /// Distinct varieties among the survivors, sorted.
    pub varieties: Vec<String>,
    /// Whether `varieties` is exactly the expected four.
    pub matched: bool,
}

/// On-disk lattice format: `{"rank": n, "gram": [[...]], "label": "..."}`
/// with integer entries (64-bit signed).
#[derive(Deserialize)]
struct LatticeInput {
    rank: usize,
    gram: Vec<Vec<i64>>,
    #[serde(default)]
    label: Option<String>,
}

/// Parse the JSON lattice format, rejecting shape mismatches and asymmetry.
pub fn parse_lattice_json(source: &str) -> Result<Lattice, CliError> {
    let input: LatticeInput = serde_json::from_str(source)
        .map_err(|e| CliError::Input(format!("could not parse lattice JSON: {e}")))?;
    if input.gram.len() != input.rank {
        return Err(CliError::Input(format!(
            "rank is {} but the gram matrix has {} rows",
            input.rank,
            input.gram.len()
        )));
    }
    for (i, row) in input.gram.iter().enumerate() {
        if row.len() != input.rank {
            return Err(CliError::Input(format!(
                "gram row {i} has {} entries, expected {}",
                row.len(),
                input.rank
            )));
        }
    }
    let lattice =
        Lattice::new(IntMatrix::from_rows(&input.gram)).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(match input.label {
        Some(label) => lattice.with_label(label),
        None => lattice,
    })
}

/// Split `key=value` arguments into a map, rejecting duplicates and
/// malformed pairs.
fn parse_key_value_params(raw: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    let mut params = BTreeMap::new();
    for item in raw {
        let Some((key, value)) = item.split_once('=') else {
            return Err(CliError::Input(format!(
                "parameter '{item}' is not of the form key=value"
            )));
        };
        if params
            .insert(key.trim().to_string(), value.trim().to_string())
            .is_some()
        {
            return Err(CliError::Input(format!("duplicate parameter '{key}'")));
        }
    }
    Ok(params)
}

fn reject_unknown_keys(
    family: &str,
    params: &BTreeMap<String, String>,
    allowed: &[&str],
) -> Result<(), CliError> {
    for key in params.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(CliError::Input(format!(
                "unknown parameter '{key}' for family '{family}' (allowed: {})",
                if allowed.is_empty() {
                    "none".to_string()
                } else {
                    allowed.join(", ")
                }
            )));
        }
    }
    Ok(())
}

fn require_u32(
    family: &str,
    params: &BTreeMap<String, String>,
    keys: &[&str],
) -> Result<u32, CliError> {
    let present: Vec<&&str> = keys.iter().filter(|k| params.contains_key(**k)).collect();
    match present.as_slice() {
        [] => Err(CliError::Input(format!(
            "family '{family}' needs the parameter '{}'",
            keys[0]
        ))),
        [key] => params[**key].parse().map_err(|_| {
            CliError::Input(format!(
                "parameter '{key}' for family '{family}' must be a nonnegative integer, got '{}'",
                params[**key]
            ))
        }),
        _ => Err(CliError::Input(format!(
            "family '{family}' accepts only one of {}",
            keys.join("/")
        ))),
    }
}

/// A parameterless construction addressable by name, used both as a
/// standalone family and as the base of a blowup.
fn named_construction(name: &str) -> Result<Construction, CliError> {
    match name {
        "quadric" => Ok(Construction::quadric()),
        "veronese-quadric" => Ok(Construction::veronese_quadric()),
        "del-pezzo-prime" | "v6'" => Ok(Construction::del_pezzo_prime()),
        "v3" | "v4" | "v5" | "v6" | "v7" | "v8" => {
            let degree: u32 = name[1..].parse().expect("single digit");
            // The table degrees are the 11 - n convention folded away: Vn has
            // degree n, and del_pezzo takes the degree directly.
            Construction::del_pezzo(degree).map_err(|e| CliError::Input(e.to_string()))
        }
        other => Err(CliError::Input(format!(
            "'{other}' is not a named construction (try quadric, veronese-quadric, v3..v8, v6')"
        ))),
    }
}

/// Resolve a family name plus parameters into a validated [`Construction`].
/// Shared by the `construct` subcommand and the catalog file loader.
pub fn resolve_construction(
    family: &str,
    params: &BTreeMap<String, String>,
    label: Option<String>,
) -> Result<Construction, CliError> {
    let input_err = |e: ConstructionError| CliError::Input(e.to_string());
    let construction = match family {
        "scroll" => {
            reject_unknown_keys(family, params, &["r", "c2"])?;
            Construction::scroll(require_u32(family, params, &["r", "c2"])?).map_err(input_err)?
        }
        "ordinary-quadric-pencil" | "ordinary-pencil" => {
            reject_unknown_keys(family, params, &["m"])?;
            Construction::ordinary_quadric_pencil(require_u32(family, params, &["m"])?)
                .map_err(input_err)?
        }
        "extraordinary-quadric-pencil" | "extraordinary-pencil" => {
            reject_unknown_keys(family, params, &["m"])?;
            Construction::extraordinary_quadric_pencil(require_u32(family, params, &["m"])?)
                .map_err(input_err)?
        }
        "veronese-pencil" => {
            reject_unknown_keys(family, params, &["m"])?;
            Construction::veronese_pencil(require_u32(family, params, &["m"])?)
                .map_err(input_err)?
        }
        "del-pezzo" => {
            reject_unknown_keys(family, params, &["degree"])?;
            Construction::del_pezzo(require_u32(family, params, &["degree"])?)
                .map_err(input_err)?
        }
        "blowup" => {
            reject_unknown_keys(family, params, &["base", "k"])?;
            let base_name = params
                .get("base")
                .ok_or_else(|| {
                    CliError::Input("family 'blowup' needs the parameter 'base'".to_string())
                })?
                .as_str();
            let base = named_construction(base_name)?;
            Construction::blowup(base, require_u32(family, params, &["k"])?).map_err(input_err)?
        }
        name => {
            let named = named_construction(name).map_err(|_| {
                CliError::Input(format!(
                    "unknown family '{name}' (try scroll, ordinary-quadric-pencil, \
                     extraordinary-quadric-pencil, veronese-pencil, del-pezzo, \
                     del-pezzo-prime, quadric, veronese-quadric, blowup, or a named \
                     construction v3..v8, v6')"
                ))
            })?;
            reject_unknown_keys(name, params, &[])?;
            named
        }
    };
    Ok(match label {
        Some(label) => construction.with_label(label),
        None => construction,
    })
}

/// One entry of a catalog file: `{"family": "...", "params": {...},
/// "label": "..."}`. Parameter values may be JSON numbers or strings.
#[derive(Deserialize)]
struct CatalogEntry {
    family: String,
    #[serde(default)]
    params: BTreeMap<String, serde_json::Value>,
    #[serde(default)]
    label: Option<String>,
}

fn load_catalog(path: &Path) -> Result<Vec<Construction>, CliError> {
    let source = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let entries: Vec<CatalogEntry> = serde_json::from_str(&source)
        .map_err(|e| CliError::Input(format!("could not parse catalog JSON: {e}")))?;
    entries
        .into_iter()
        .map(|entry| {
            let mut params = BTreeMap::new();
            for (key, value) in entry.params {
                let as_string = match value {
                    serde_json::Value::Number(n) => n.to_string(),
                    serde_json::Value::String(s) => s,
                    other => {
                        return Err(CliError::Input(format!(
                            "parameter '{key}' must be a number or string, got {other}"
                        )))
                    }
                };
                params.insert(key, as_string);
            }
            resolve_construction(&entry.family, &params, entry.label)
        })
        .collect()
}

fn elapsed_us(started: Instant) -> u64 {
    u64::try_from(started.elapsed().as_micros()).unwrap_or(u64::MAX)
}

/// Classify one construction and compare against its expectation.
fn construction_document(c: &Construction) -> Result<ReportDocument, CliError> {
    let started = Instant::now();
    let report = classify_construction(c).map_err(map_construction_err)?;
    let expected = expected_outcome(c);
    let matched = expected.matches(&report);
    Ok(ReportDocument {
        input: c.display_name(),
        report,
        disc_factors: None,
        expected: Some(expected),
        matched: Some(matched),
        elapsed_us: elapsed_us(started),
    })
}

fn join_types(types: &[AdeType]) -> String {
    if types.is_empty() {
        return "none".to_string();
    }
    let parts: Vec<String> = types.iter().map(AdeType::to_string).collect();
    parts.join(" + ")
}

fn render_document_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let r = &doc.report;
    let _ = writeln!(out, "{}", doc.input);
    let _ = writeln!(
        out,
        "  rank {}  disc {}  roots {}  weyl order {}",
        r.rank, r.disc, r.root_count, r.weyl_order
    );
    let _ = writeln!(out, "  components: {}", join_types(&r.components));
    let _ = writeln!(
        out,
        "  roots span lattice: {}",
        if r.roots_span_lattice { "yes" } else { "no" }
    );
    if let Some(factors) = &doc.disc_factors {
        let rendered = if factors.is_empty() {
            "trivial".to_string()
        } else {
            factors.join(" x ")
        };
        let _ = writeln!(out, "  disc invariant factors: {rendered}");
    }
    if let Some(sets) = &r.possible_overlattice_types {
        let rendered: Vec<String> = sets.iter().map(|s| join_types(s)).collect();
        let _ = writeln!(out, "  possible overlattices: {{{}}}", rendered.join(", "));
    }
    if let Some(expected) = &doc.expected {
        let verdict = match doc.matched {
            Some(true) => "MATCH",
            Some(false) => "MISMATCH",
            None => "unchecked",
        };
        let _ = writeln!(out, "  expected: {expected} -> {verdict}");
    }
    let _ = writeln!(out, "  elapsed: {} us", doc.elapsed_us);
    out
}

fn render_documents(docs: &[ReportDocument], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let parts: Vec<String> = docs.iter().map(render_document_text).collect();
            parts.join("")
        }
        OutputFormat::Json => {
            let json = if docs.len() == 1 {
                serde_json::to_string_pretty(&docs[0])
            } else {
                serde_json::to_string_pretty(&docs)
            };
            json.expect("report documents always serialize") + "\n"
        }
    }
}

/// `classify --gram FILE`: report the root system of a lattice given in the
/// JSON lattice format.
pub fn cmd_classify(path: &Path, format: OutputFormat) -> Result<CmdOutput, CliError> {
    let started = Instant::now();
    let source = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let lattice = parse_lattice_json(&source)?;
    let report = classify(&lattice).map_err(map_roots_err)?;
    let disc_factors = lattice
        .discriminant_group()
        .map_err(map_lattice_err)?
        .invariant_factors
        .iter()
        .map(|x| x.to_string())
        .collect();
    let input = lattice
        .label()
        .map_or_else(|| path.display().to_string(), str::to_string);
    let doc = ReportDocument {
        input,
        report,
        disc_factors: Some(disc_factors),
        expected: None,
        matched: None,
        elapsed_us: elapsed_us(started),
    };
    Ok(CmdOutput {
        text: render_documents(&[doc], format),
        ok: true,
    })
}

/// `construct FAMILY key=value…`: build one construction, classify it, and
/// compare with its expected outcome (mismatch exits 1).
pub fn cmd_construct(
    family: &str,
    raw_params: &[String],
    format: OutputFormat,
) -> Result<CmdOutput, CliError> {
    let params = parse_key_value_params(raw_params)?;
    let construction = resolve_construction(family, &params, None)?;
    let doc = construction_document(&construction)?;
    let ok = doc.matched == Some(true);
    Ok(CmdOutput {
        text: render_documents(&[doc], format),
        ok,
    })
}

fn table_row_key(c: &Construction) -> String {
    c.label
        .as_deref()
        .and_then(|l| l.split(':').next())
        .unwrap_or_default()
        .to_string()
}

fn normalize_row_filter(raw: &str) -> String {
    let upper = raw.trim().to_uppercase();
    match upper.as_str() {
        "V6P" | "V6PRIME" | "V6’" => "V6'".to_string(),
        other => other.to_string(),
    }
}

/// Documents for the del Pezzo table rows, optionally restricted to one row.
pub fn table2_documents(only: Option<&str>) -> Result<Vec<ReportDocument>, CliError> {
    let rows = del_pezzo_table();
    let selected: Vec<Construction> = match only {
        None => rows,
        Some(filter) => {
            let key = normalize_row_filter(filter);
            let matched: Vec<Construction> = rows
                .into_iter()
                .filter(|c| table_row_key(c) == key)
                .collect();
            if matched.is_empty() {
                return Err(CliError::Input(format!(
                    "no table row named '{filter}' (rows: V3, V4, V5, V6, V6', V7, V8)"
                )));
            }
            matched
        }
    };
    selected.iter().map(construction_document).collect()
}

/// `table2 [--only ROW]`: classify the seven del Pezzo rows and check each
/// against its expectation.
pub fn cmd_table2(only: Option<&str>, format: OutputFormat) -> Result<CmdOutput, CliError> {
    let docs = table2_documents(only)?;
    let ok = docs.iter().all(|d| d.matched == Some(true));
    Ok(CmdOutput {
        text: render_documents(&docs, format),
        ok,
    })
}

/// The theorem analysis over a given catalog.
pub fn theorem_document(catalog: &[Construction]) -> Result<TheoremDocument, CliError> {
    let survivors = theorem_filter(catalog).map_err(map_construction_err)?;
    let docs: Result<Vec<ReportDocument>, CliError> =
        survivors.iter().map(construction_document).collect();
    let mut varieties: Vec<String> = survivors.iter().map(variety_identity).collect();
    varieties.sort();
    varieties.dedup();
    let matched = varieties == expected_varieties();
    Ok(TheoremDocument {
        catalog_size: catalog.len(),
        survivors: docs?,
        varieties,
        matched,
    })
}

/// The variety names the filter must land on, derived from the same
/// identity map the survivors are grouped by.
pub fn expected_varieties() -> Vec<String> {
    let mut names: Vec<String> = [
        Construction::quadric(),
        Construction::extraordinary_quadric_pencil(2).expect("valid parameter"),
        Construction::scroll(2).expect("valid parameter"),
        Construction::del_pezzo(8).expect("valid degree"),
    ]
    .iter()
    .map(variety_identity)
    .collect();
    names.sort();
    names
}

fn render_theorem_text(doc: &TheoremDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "catalog entries: {}", doc.catalog_size);
    let _ = writeln!(out, "A1 survivors: {}", doc.survivors.len());
    for survivor in &doc.survivors {
        let _ = writeln!(out, "  - {}", survivor.input);
    }
    let _ = writeln!(out, "distinct varieties: {}", doc.varieties.len());
    for variety in &doc.varieties {
        let _ = writeln!(out, "  * {variety}");
    }
    let _ = writeln!(
        out,
        "expected four varieties -> {}",
        if doc.matched { "MATCH" } else { "MISMATCH" }
    );
    out
}

/// `theorem [--catalog FILE]`: filter the catalog (built-in by default) down
/// to the single-`A1` constructions and group them by variety. Exits 1
/// unless the surviving varieties are exactly the expected four.
pub fn cmd_theorem(catalog_path: Option<&Path>, format: OutputFormat) -> Result<CmdOutput, CliError> {
    let catalog = match catalog_path {
        None => default_catalog(),
        Some(path) => load_catalog(path)?,
    };
    let doc = theorem_document(&catalog)?;
    let ok = doc.matched;
    let text = match format {
        OutputFormat::Text => render_theorem_text(&doc),
        OutputFormat::Json => {
            serde_json::to_string_pretty(&doc).expect("theorem document serializes") + "\n"
        }
    };
    Ok(CmdOutput { text, ok })
}

/// `selftest [--seed N]`: run the seeded randomized checks; any failure
/// exits 1.
pub fn cmd_selftest(seed: u64, format: OutputFormat) -> Result<CmdOutput, CliError> {
    let report = selftest::run(seed);
    let ok = report.all_passed();
    let text = match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "seed: {}", report.seed);
            for check in &report.checks {
                let _ = writeln!(
                    out,
                    "check {}: {} — {}",
                    check.name,
                    if check.passed { "ok" } else { "FAILED" },
                    check.detail
                );
            }
            let _ = writeln!(
                out,
                "{}",
                if ok { "all checks passed" } else { "SOME CHECKS FAILED" }
            );
            out
        }
        OutputFormat::Json => {
            serde_json::to_string_pretty(&report).expect("selftest report serializes") + "\n"
        }
    };
    Ok(CmdOutput { text, ok })
}
