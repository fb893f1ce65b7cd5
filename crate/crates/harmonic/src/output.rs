//! Table, JSON and CSV renderings of reports, bound rows and single values.

use std::fmt::Write as _;

use clap::ValueEnum;
use harmonic_core::bounds::{BoundCheck, Verdict};
use harmonic_core::verify::{Record, Summary, VerificationReport};
use harmonic_core::Ball;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// Significant digits printed for midpoints.
pub const DIGITS: usize = 25;

fn parts(b: &Ball) -> (String, String) {
    b.to_decimal_parts(DIGITS)
}

fn pm(b: &Ball) -> String {
    b.to_decimal(DIGITS)
}

#[derive(Serialize)]
struct SummaryJson {
    pass: usize,
    equality: usize,
    fail: usize,
    undecided: usize,
}

impl From<Summary> for SummaryJson {
    fn from(s: Summary) -> Self {
        SummaryJson { pass: s.pass, equality: s.equality, fail: s.fail, undecided: s.undecided }
    }
}

#[derive(Serialize)]
struct RecordJson {
    check: String,
    params: Map<String, Value>,
    verdict: String,
    margin_mid: Option<String>,
    margin_rad: Option<String>,
    precision_bits: u32,
}

impl From<&Record> for RecordJson {
    fn from(r: &Record) -> Self {
        let (margin_mid, margin_rad) = match &r.margin {
            Some(m) => {
                let (a, b) = parts(m);
                (Some(a), Some(b))
            }
            None => (None, None),
        };
        RecordJson {
            check: r.check.clone(),
            params: r.params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect(),
            verdict: r.verdict.to_string(),
            margin_mid,
            margin_rad,
            precision_bits: r.precision_bits,
        }
    }
}

#[derive(Serialize)]
struct ReportJson {
    summary: SummaryJson,
    records: Vec<RecordJson>,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut l = String::new();
        for (i, c) in cells.enumerate() {
            if i > 0 {
                l.push_str("  ");
            }
            let _ = write!(l, "{c:<w$}", w = width[i]);
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn summary_line(s: &Summary) -> String {
    format!("pass {}  equality {}  fail {}  undecided {}\n", s.pass, s.equality, s.fail, s.undecided)
}

fn params_text(r: &Record) -> String {
    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

pub const REPORT_CSV_HEADER: [&str; 6] = ["check", "params", "verdict", "margin_mid", "margin_rad", "precision_bits"];

pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(&ReportJson {
            summary: report.summary().into(),
            records: report.records().iter().map(RecordJson::from).collect(),
        }),
        Format::Csv => csv_string(
            &REPORT_CSV_HEADER,
            report.records().iter().map(|r| {
                let (m, rad) = r.margin.as_ref().map(parts).unwrap_or_default();
                vec![r.check.clone(), params_text(r), r.verdict.to_string(), m, rad, r.precision_bits.to_string()]
            }),
        ),
        Format::Table => {
            let rows: Vec<Vec<String>> = report
                .records()
                .iter()
                .map(|r| {
                    vec![
                        r.check.clone(),
                        params_text(r),
                        r.verdict.to_string(),
                        r.margin.as_ref().map(pm).unwrap_or_else(|| "-".into()),
                        r.precision_bits.to_string(),
                    ]
                })
                .collect();
            let mut s = table(&["check", "params", "verdict", "margin", "bits"], &rows);
            s.push_str(&summary_line(&report.summary()));
            s
        }
    }
}

pub const BOUNDS_CSV_HEADER: [&str; 13] = [
    "bound_id",
    "n",
    "lower_mid",
    "lower_rad",
    "target_mid",
    "target_rad",
    "upper_mid",
    "upper_rad",
    "verdict",
    "lower_margin_mid",
    "lower_margin_rad",
    "upper_margin_mid",
    "upper_margin_rad",
];

fn bound_cells(c: &BoundCheck) -> Vec<String> {
    let mut row = vec![c.id.to_string(), c.n.to_string()];
    for b in [&c.lower, &c.target, &c.upper] {
        let (m, r) = parts(b);
        row.push(m);
        row.push(r);
    }
    row.push(c.verdict.to_string());
    for b in [&c.lower_margin, &c.upper_margin] {
        let (m, r) = parts(b);
        row.push(m);
        row.push(r);
    }
    row
}

pub fn verdict_summary(verdicts: impl IntoIterator<Item = Verdict>) -> Summary {
    let mut s = Summary::default();
    for v in verdicts {
        match v {
            Verdict::Pass => s.pass += 1,
            Verdict::Equality(_) => s.equality += 1,
            Verdict::Fail => s.fail += 1,
            Verdict::Undecided => s.undecided += 1,
        }
    }
    s
}

pub fn render_bounds(checks: &[BoundCheck], format: Format) -> String {
    let summary = verdict_summary(checks.iter().map(|c| c.verdict));
    match format {
        Format::Csv => csv_string(&BOUNDS_CSV_HEADER, checks.iter().map(bound_cells)),
        Format::Json => {
            let rows: Vec<Map<String, Value>> = checks
                .iter()
                .map(|c| {
                    let mut m: Map<String, Value> = BOUNDS_CSV_HEADER
                        .iter()
                        .zip(bound_cells(c))
                        .map(|(k, v)| (k.to_string(), Value::String(v)))
                        .collect();
                    m.insert("n".into(), Value::from(c.n));
                    m.insert("precision_bits".into(), Value::from(c.precision.bits()));
                    m
                })
                .collect();
            #[derive(Serialize)]
            struct Doc {
                summary: SummaryJson,
                rows: Vec<Map<String, Value>>,
            }
            to_json(&Doc { summary: summary.into(), rows })
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    vec![
                        c.id.to_string(),
                        c.n.to_string(),
                        pm(&c.lower),
                        pm(&c.target),
                        pm(&c.upper),
                        c.verdict.to_string(),
                    ]
                })
                .collect();
            let mut s = table(&["bound", "n", "lower", "target", "upper", "verdict"], &rows);
            s.push_str(&summary_line(&summary));
            s
        }
    }
}

/// `H(n)` as an exact fraction or as an enclosure.
pub enum Evaluated {
    Exact(String),
    Enclosure(Ball),
}

pub fn render_value(n: u64, value: &Evaluated, format: Format) -> String {
    match (value, format) {
        (Evaluated::Exact(q), Format::Table) => format!("{q}\n"),
        (Evaluated::Enclosure(b), Format::Table) => format!("{}\n", pm(b)),
        (Evaluated::Exact(q), Format::Json) => to_json(&serde_json::json!({ "n": n, "exact": q })),
        (Evaluated::Enclosure(b), Format::Json) => {
            let (m, r) = parts(b);
            to_json(&serde_json::json!({ "n": n, "mid": m, "rad": r, "precision_bits": b.precision().bits() }))
        }
        (Evaluated::Exact(q), Format::Csv) => csv_string(&["n", "exact"], [vec![n.to_string(), q.clone()]]),
        (Evaluated::Enclosure(b), Format::Csv) => {
            let (m, r) = parts(b);
            csv_string(&["n", "mid", "rad", "precision_bits"], [vec![n.to_string(), m, r, b.precision().bits().to_string()]])
        }
    }
}
