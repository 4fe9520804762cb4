//! Report documents behind the `verify`, `chain` and `oracle` commands, and
//! their JSON and CSV renderings.

mod oracle;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{discrepancy_report, ChainReport, CSV_HEADER};
use crate::error::{Error, Result};
use crate::euler_sums::SumConvention;
use crate::real::PrecisionContext;

pub use oracle::{oracle_report, ConventionComparison, OracleReport, OracleRow};
pub use suites::{run_suite, CheckResult, Suite, SuiteResult};

pub const TOOL: &str = "harmonic-zeta";

/// JSON schema every document validates against.
pub const SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

/// `A`, `B` or `all`.
pub fn parse_conventions(s: &str) -> Result<Vec<SumConvention>> {
    match s {
        "A" | "a" => Ok(vec![SumConvention::A]),
        "B" | "b" => Ok(vec![SumConvention::B]),
        "all" => Ok(SumConvention::ALL.to_vec()),
        _ => Err(Error::InvalidArgument(format!("unknown convention {s:?}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Verify,
    Chain,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: Command,
    pub digits: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<SuiteResult>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    /// Wall-clock milliseconds; the only non-deterministic block.
    pub timing: BTreeMap<String, u64>,
}

impl ReportDocument {
    fn new(command: Command, ctx: &PrecisionContext) -> Self {
        ReportDocument {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command,
            digits: ctx.digits(),
            suites: None,
            chain: None,
            oracle: None,
            timing: BTreeMap::new(),
        }
    }

    /// False when any verification suite failed.
    pub fn passed(&self) -> bool {
        self.suites.iter().flatten().all(|s| s.passed)
    }

    /// Process exit status: 0 on success, 1 on a failed suite.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidArgument(e.to_string());
        match self.command {
            Command::Verify => {
                w.write_record(["suite", "check", "residual", "tolerance", "passed"]).map_err(io)?;
                for suite in self.suites.iter().flatten() {
                    if let Some(err) = &suite.error {
                        w.write_record([suite.suite.name(), "error", "", "", "false"]).map_err(io)?;
                        w.write_record([suite.suite.name(), err.as_str(), "", "", "false"]).map_err(io)?;
                    }
                    for c in &suite.checks {
                        let num = |r: &Option<crate::real::Real>| r.as_ref().map(|r| r.to_sci_string(6)).unwrap_or_default();
                        w.write_record([
                            suite.suite.name().to_string(),
                            c.name.clone(),
                            num(&c.residual),
                            num(&c.tolerance),
                            c.passed.to_string(),
                        ])
                        .map_err(io)?;
                    }
                }
            }
            Command::Chain => {
                w.write_record(CSV_HEADER).map_err(io)?;
                for row in self.chain.iter().flat_map(|c| c.csv_rows()) {
                    w.write_record(&row).map_err(io)?;
                }
            }
            Command::Oracle => {
                w.write_record(["k", "convention", "ramanujan", "chain", "closed_form", "spread", "stable", "n", "j"])
                    .map_err(io)?;
                for row in self.oracle.iter().flat_map(|o| &o.rows) {
                    for c in &row.comparisons {
                        w.write_record([
                            row.k.to_string(),
                            c.convention.to_string(),
                            row.ramanujan.to_decimal_string(),
                            c.chain.to_decimal_string(),
                            c.closed_form.to_decimal_string(),
                            row.spread.to_sci_string(6),
                            row.stable.to_string(),
                            row.scheme.n.to_string(),
                            row.scheme.j.to_string(),
                        ])
                        .map_err(io)?;
                    }
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Runs the requested suites in parallel; results keep the requested order.
pub fn cmd_verify(ctx: &PrecisionContext, suites: &[Suite]) -> ReportDocument {
    let mut selected: Vec<Suite> = suites.to_vec();
    selected.dedup();
    let start = Instant::now();
    let timed: Vec<(SuiteResult, u64)> = selected
        .par_iter()
        .map(|&s| {
            let t = Instant::now();
            let r = run_suite(s, ctx);
            (r, millis(t))
        })
        .collect();
    let mut doc = ReportDocument::new(Command::Verify, ctx);
    for (r, ms) in &timed {
        doc.timing.insert(r.suite.name().into(), *ms);
    }
    doc.timing.insert("total".into(), millis(start));
    doc.suites = Some(timed.into_iter().map(|(r, _)| r).collect());
    doc
}

pub fn cmd_chain(kmax: u32, conventions: &[SumConvention], ctx: &PrecisionContext) -> Result<ReportDocument> {
    let start = Instant::now();
    let mut doc = ReportDocument::new(Command::Chain, ctx);
    doc.chain = Some(discrepancy_report(kmax, conventions, ctx)?);
    doc.timing.insert("total".into(), millis(start));
    Ok(doc)
}

pub fn cmd_oracle(kmax: u32, ctx: &PrecisionContext) -> Result<ReportDocument> {
    let start = Instant::now();
    let mut doc = ReportDocument::new(Command::Oracle, ctx);
    doc.oracle = Some(oracle_report(kmax, ctx)?);
    doc.timing.insert("total".into(), millis(start));
    Ok(doc)
}
