//! Knot tables and batch evaluation.
//!
//! Table format: one `name<TAB>gauss_code` per line; blank lines and lines
//! starting with `#` are skipped.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{self, Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, ParseOptions};
use crate::engine::{compute_invariant, InvariantResult, Options};
use crate::switches::Family;

#[derive(Debug, Error)]
pub enum BatchError {
    #[error("cannot read table: {0}")]
    Io(#[from] io::Error),
    #[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))]
    Table(Vec<LineError>),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for LineError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub diagram: Diagram,
    pub line: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Any bad line fails the whole load.
    pub strict: bool,
    pub parse: ParseOptions,
}

/// Entries that parsed, plus the per-line errors of those that did not.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub entries: Vec<TableEntry>,
    pub errors: Vec<LineError>,
}

pub fn parse_table(text: &str, opts: LoadOptions) -> Result<Table, BatchError> {
    let mut table = Table::default();
    let mut names = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut err = |message: String| table.errors.push(LineError { line, message });
        let Some((name, code)) = raw.split_once('\t') else {
            err("expected `name<TAB>gauss_code`".into());
            continue;
        };
        let name = name.trim();
        if name.is_empty() {
            err("empty name".into());
            continue;
        }
        if !names.insert(name.to_string()) {
            err(format!("duplicate name `{name}`"));
            continue;
        }
        match Diagram::parse_with(code, opts.parse) {
            Ok(diagram) => table.entries.push(TableEntry {
                name: name.to_string(),
                diagram,
                line,
            }),
            Err(e) => err(format!("{name}: {e}")),
        }
    }
    if opts.strict && !table.errors.is_empty() {
        return Err(BatchError::Table(table.errors));
    }
    Ok(table)
}

pub fn load_table(path: impl AsRef<Path>, opts: LoadOptions) -> Result<Table, BatchError> {
    let mut text = String::new();
    std::fs::File::open(path)?.read_to_string(&mut text)?;
    parse_table(&text, opts)
}

/// One (entry, family) evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct BatchRow {
    pub name: String,
    pub real_crossings: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Ok(InvariantResult),
    Failed { family: Family, error: String },
}

impl BatchRow {
    pub fn family(&self) -> Family {
        match &self.outcome {
            Outcome::Ok(r) => r.family,
            Outcome::Failed { family, .. } => *family,
        }
    }

    pub fn result(&self) -> Option<&InvariantResult> {
        match &self.outcome {
            Outcome::Ok(r) => Some(r),
            Outcome::Failed { .. } => None,
        }
    }

    fn record(&self) -> RowRecord {
        RowRecord {
            name: self.name.clone(),
            family: self.family().name().into(),
            polynomial: self.result().map(|r| r.canonical.to_string()),
        }
    }
}

/// The part of a row the summary depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowRecord {
    pub name: String,
    pub family: String,
    /// `None` when evaluation failed.
    pub polynomial: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCounts {
    pub evaluated: usize,
    pub zero: usize,
    pub nonzero: usize,
    pub errors: usize,
}

/// Among entries where `zero_family` vanishes, how many `detecting_family`
/// does not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detection {
    pub zero_family: String,
    pub detecting_family: String,
    pub zero_count: usize,
    pub detected: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub entries: usize,
    pub families: BTreeMap<String, FamilyCounts>,
    pub detections: Vec<Detection>,
}

impl Summary {
    /// Tallies rows; family order for detections follows first appearance.
    pub fn from_records(rows: &[RowRecord]) -> Self {
        let mut families: BTreeMap<String, FamilyCounts> = BTreeMap::new();
        let mut order: Vec<String> = Vec::new();
        let mut zero: BTreeMap<(&str, &str), bool> = BTreeMap::new();
        let mut names = BTreeSet::new();
        for r in rows {
            names.insert(r.name.as_str());
            if !order.contains(&r.family) {
                order.push(r.family.clone());
            }
            let c = families.entry(r.family.clone()).or_default();
            c.evaluated += 1;
            match r.polynomial.as_deref() {
                None => c.errors += 1,
                Some("0") => {
                    c.zero += 1;
                    zero.insert((&r.name, &r.family), true);
                }
                Some(_) => {
                    c.nonzero += 1;
                    zero.insert((&r.name, &r.family), false);
                }
            }
        }
        let mut detections = Vec::new();
        for a in &order {
            for b in order.iter().filter(|b| *b != a) {
                let mut zero_count = 0;
                let mut detected = 0;
                for n in &names {
                    if zero.get(&(n, a.as_str())) == Some(&true) {
                        zero_count += 1;
                        if zero.get(&(n, b.as_str())) == Some(&false) {
                            detected += 1;
                        }
                    }
                }
                detections.push(Detection {
                    zero_family: a.clone(),
                    detecting_family: b.clone(),
                    zero_count,
                    detected,
                });
            }
        }
        Summary {
            entries: names.len(),
            families,
            detections,
        }
    }

    pub fn detection(&self, zero_family: Family, detecting: Family) -> Option<&Detection> {
        self.detections
            .iter()
            .find(|d| d.zero_family == zero_family.name() && d.detecting_family == detecting.name())
    }
}

/// An entry whose z-parity exponent span exceeds its real crossing count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureViolation {
    pub name: String,
    pub z_span: u32,
    pub real_crossings: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchReport {
    pub entries: Vec<BatchRow>,
    pub summary: Summary,
    pub conjecture_violations: Vec<ConjectureViolation>,
}

#[derive(Clone, Debug, Default)]
pub struct BatchOptions {
    pub eval: Options,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

fn evaluate(entries: &[TableEntry], families: &[Family], opts: &Options) -> Vec<BatchRow> {
    let work: Vec<(&TableEntry, usize)> = entries
        .iter()
        .flat_map(|e| (0..families.len()).map(move |i| (e, i)))
        .collect();
    let mut rows: Vec<(usize, BatchRow)> = work
        .par_iter()
        .map(|&(e, i)| {
            let family = families[i];
            let outcome = match compute_invariant(&e.diagram, family, opts) {
                Ok(r) => Outcome::Ok(r),
                Err(err) => Outcome::Failed {
                    family,
                    error: err.to_string(),
                },
            };
            (
                i,
                BatchRow {
                    name: e.name.clone(),
                    real_crossings: e.diagram.real_crossing_count(),
                    outcome,
                },
            )
        })
        .collect();
    rows.sort_by(|(i, a), (j, b)| a.name.cmp(&b.name).then(i.cmp(j)));
    rows.into_iter().map(|(_, r)| r).collect()
}

pub fn run_batch(
    entries: &[TableEntry],
    families: &[Family],
    opts: &BatchOptions,
) -> Result<BatchReport, BatchError> {
    let rows = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| BatchError::Pool(e.to_string()))?
            .install(|| evaluate(entries, families, &opts.eval)),
        None => evaluate(entries, families, &opts.eval),
    };
    let records: Vec<RowRecord> = rows.iter().map(BatchRow::record).collect();
    let conjecture_violations = rows
        .iter()
        .filter_map(|row| {
            let r = row.result().filter(|r| r.family == Family::ZParity)?;
            let span = r.bounds.z_span?;
            (span as usize > row.real_crossings).then(|| ConjectureViolation {
                name: row.name.clone(),
                z_span: span,
                real_crossings: row.real_crossings,
            })
        })
        .collect();
    Ok(BatchReport {
        summary: Summary::from_records(&records),
        entries: rows,
        conjecture_violations,
    })
}

pub const CSV_COLUMNS: [&str; 9] = [
    "name",
    "family",
    "polynomial",
    "writhe",
    "n_o_bound",
    "n_real_bound",
    "n_v_bound",
    "nonclassical",
    "odd_evidence",
];

fn opt_bool(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

impl BatchReport {
    /// Failed rows have every column after `family` empty.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), BatchError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_COLUMNS)?;
        for row in &self.entries {
            let family = row.family().name().to_string();
            let record = match row.result() {
                Some(r) => vec![
                    row.name.clone(),
                    family,
                    r.canonical.to_string(),
                    r.writhe.to_string(),
                    r.bounds.n_o_bound.to_string(),
                    r.bounds.n_real_bound.to_string(),
                    r.bounds.n_v_bound.to_string(),
                    opt_bool(r.flags.nonclassical),
                    opt_bool(r.flags.odd_evidence),
                ],
                None => {
                    let mut v = vec![row.name.clone(), family];
                    v.resize(CSV_COLUMNS.len(), String::new());
                    v
                }
            };
            out.write_record(&record)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String, BatchError> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Rows of a CSV report, for recomputing its summary.
pub fn records_from_csv<R: Read>(r: R) -> Result<Vec<RowRecord>, BatchError> {
    let mut reader = csv::Reader::from_reader(r);
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        let poly = rec.get(2).unwrap_or_default();
        out.push(RowRecord {
            name: rec.get(0).unwrap_or_default().into(),
            family: rec.get(1).unwrap_or_default().into(),
            polynomial: (!poly.is_empty()).then(|| poly.to_string()),
        });
    }
    Ok(out)
}

/// Rows of a JSON report, for recomputing its summary.
pub fn records_from_json(text: &str) -> Result<Vec<RowRecord>, BatchError> {
    #[derive(Deserialize)]
    struct Row {
        name: String,
        family: String,
        polynomial: Option<String>,
    }
    #[derive(Deserialize)]
    struct Report {
        entries: Vec<Row>,
    }
    let report: Report = serde_json::from_str(text)?;
    Ok(report
        .entries
        .into_iter()
        .map(|r| RowRecord {
            name: r.name,
            family: r.family,
            polynomial: r.polynomial,
        })
        .collect())
}
