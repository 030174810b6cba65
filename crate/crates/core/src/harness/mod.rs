//! Verification suites with reproducible reports.

pub mod check;
pub mod enumerate;
pub mod random;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};

pub use enumerate::{canonical_form, enumerate_graphs, enumerate_hereditary, graph6_stream, CANON_CAP, ENUM_CAP};

/// Counterexamples kept per report; the count in `failed` is always exact.
pub const MAX_COUNTEREXAMPLES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SuiteId {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    S9,
    S10,
    S11,
    S12,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::S1,
        SuiteId::S2,
        SuiteId::S3,
        SuiteId::S4,
        SuiteId::S5,
        SuiteId::S6,
        SuiteId::S7,
        SuiteId::S8,
        SuiteId::S9,
        SuiteId::S10,
        SuiteId::S11,
        SuiteId::S12,
    ];

    /// One-line description of what the suite checks.
    pub fn describe(self) -> &'static str {
        match self {
            SuiteId::S1 => "clock-free graphs without a star cutset are diamond-free",
            SuiteId::S2 => "clock-free graphs with a star cutset have a clique cutset",
            SuiteId::S3 => "every short pyramid contains a clock",
            SuiteId::S4 => "three-path configuration through a vertex and three of its neighbours",
            SuiteId::S5 => "paw cutset witness",
            SuiteId::S6 => "seagull cutset witness",
            SuiteId::S7 => "non-crossing core separations cover G minus the central bag",
            SuiteId::S8 => "separator pipeline soundness",
            SuiteId::S9 => "treewidth of clean clock-free graphs",
            SuiteId::S10 => "obstruction and Pohoata-Davies properties",
            SuiteId::S11 => "claw neighbours of a path end",
            SuiteId::S12 => "closure, shield and core algebra",
        }
    }

    /// Whether a run can fail; the sweep only reports data.
    pub fn has_verdict(self) -> bool {
        self != SuiteId::S9
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        SuiteId::ALL
            .into_iter()
            .find(|id| id.to_string() == upper)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Run parameters. `None` fields take the suite's default.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteParams {
    pub nmax: Option<usize>,
    pub seed: u64,
    pub samples: Option<usize>,
    /// Cleanness parameter for the sweep.
    pub t: Option<usize>,
    /// Longest pyramid path for the short-pyramid suite.
    pub path_len_max: Option<usize>,
    /// Graphs to use instead of the internal enumeration.
    #[serde(skip)]
    pub corpus: Option<Vec<Graph>>,
}

impl SuiteParams {
    pub fn with_seed(seed: u64) -> Self {
        SuiteParams { seed, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub witness: serde_json::Value,
}

/// One row of the treewidth sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    /// Connected clock-free graphs of this order.
    pub graphs: u64,
    /// Those that are `t`-clean.
    pub clean: u64,
    pub max_treewidth: usize,
    pub max_gamma3: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub description: String,
    pub total: u64,
    /// Instances meeting the suite's hypotheses.
    pub hypothesis: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<SweepRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub wall_clock_ms: u64,
    pub seed: u64,
    pub config: BTreeMap<String, String>,
}

impl SuiteReport {
    /// A report with no instances.
    pub fn empty(suite: SuiteId, seed: u64) -> Self {
        SuiteReport {
            suite,
            description: suite.describe().to_string(),
            total: 0,
            hypothesis: 0,
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
            table: Vec::new(),
            notes: Vec::new(),
            wall_clock_ms: 0,
            seed,
            config: BTreeMap::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Instance counts accumulated by a suite; merged in instance order.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub total: u64,
    pub hypothesis: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Tally {
    pub fn skip(&mut self) {
        self.total += 1;
    }

    pub fn pass(&mut self) {
        self.total += 1;
        self.hypothesis += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, g: &Graph, witness: serde_json::Value) {
        self.total += 1;
        self.hypothesis += 1;
        self.failed += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { graph6: encode_graph6(g), witness });
        }
    }

    pub fn record(&mut self, ok: bool, g: &Graph, witness: impl FnOnce() -> serde_json::Value) {
        if ok {
            self.pass();
        } else {
            self.fail(g, witness());
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.hypothesis += other.hypothesis;
        self.passed += other.passed;
        self.failed += other.failed;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
        self
    }
}

/// Runs one suite. Identical parameters and corpus give identical reports
/// apart from `wall_clock_ms`.
pub fn run_suite(id: SuiteId, params: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut report = SuiteReport::empty(id, params.seed);
    let (tally, config) = suites::run(id, params, &mut report)?;
    report.total = tally.total;
    report.hypothesis = tally.hypothesis;
    report.passed = tally.passed;
    report.failed = tally.failed;
    report.counterexamples = tally.counterexamples;
    report.config = config;
    report.wall_clock_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::InvalidParameter(format!("unknown report format `{s}`"))),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders a report. The sweep's CSV has one row per order; other suites
/// give a summary row followed by one row per counterexample.
pub fn render_report(report: &SuiteReport, format: ReportFormat) -> Result<String> {
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            out = serde_json::to_string_pretty(report)?;
            out.push('\n');
        }
        ReportFormat::Csv if report.suite == SuiteId::S9 => {
            out.push_str("n,graphs,clean,max_treewidth,max_gamma3\n");
            for r in &report.table {
                out.push_str(&format!("{},{},{},{},{}\n", r.n, r.graphs, r.clean, r.max_treewidth, r.max_gamma3));
            }
        }
        ReportFormat::Csv => {
            out.push_str("suite,total,hypothesis,passed,failed,seed,graph6,witness\n");
            out.push_str(&format!(
                "{},{},{},{},{},{},,\n",
                report.suite, report.total, report.hypothesis, report.passed, report.failed, report.seed
            ));
            for c in &report.counterexamples {
                out.push_str(&format!(
                    "{},,,,,,{},{}\n",
                    report.suite,
                    csv_field(&c.graph6),
                    csv_field(&c.witness.to_string())
                ));
            }
        }
        ReportFormat::Text => {
            out.push_str(&format!(
                "{} ({}): total {}, hypothesis {}, passed {}, failed {}\n",
                report.suite, report.description, report.total, report.hypothesis, report.passed, report.failed
            ));
            if !report.table.is_empty() {
                out.push_str("n graphs clean max_tw max_gamma3\n");
                for r in &report.table {
                    out.push_str(&format!("{} {} {} {} {}\n", r.n, r.graphs, r.clean, r.max_treewidth, r.max_gamma3));
                }
            }
            for c in &report.counterexamples {
                out.push_str(&format!("counterexample {} {}\n", c.graph6, c.witness));
            }
            for note in &report.notes {
                out.push_str(&format!("note: {note}\n"));
            }
        }
    }
    Ok(out)
}

/// Writes [`render_report`] output.
pub fn emit_report(report: &SuiteReport, format: ReportFormat, out: &mut dyn Write) -> Result<()> {
    out.write_all(render_report(report, format)?.as_bytes())?;
    Ok(())
}
