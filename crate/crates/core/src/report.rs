use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

pub(crate) fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Pass/fail outcome of one checked claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Verdict {
    pub fn new(claim: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            pass,
            detail: detail.into(),
        }
    }

    pub fn check(claim: impl Into<String>, pass: bool) -> Self {
        Verdict::new(claim, pass, "")
    }
}

/// Output of one CLI run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }
}

/// Fixed-width table with a header row.
#[derive(Debug, Clone, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(header: &[S]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: ToString>(&mut self, cells: &[S]) {
        self.rows
            .push(cells.iter().map(|c| c.to_string()).collect());
    }
}

impl Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ncol = self
            .rows
            .iter()
            .map(Vec::len)
            .chain([self.header.len()])
            .max()
            .unwrap_or(0);
        let mut width = vec![0; ncol];
        for r in std::iter::once(&self.header).chain(&self.rows) {
            for (i, c) in r.iter().enumerate() {
                width[i] = width[i].max(c.chars().count());
            }
        }
        let line = |f: &mut fmt::Formatter<'_>, r: &[String]| -> fmt::Result {
            let mut s = String::new();
            for (i, c) in r.iter().enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                let pad = width[i] - c.chars().count();
                s.push_str(c);
                s.extend(std::iter::repeat_n(' ', pad));
            }
            writeln!(f, "{}", s.trim_end())
        };
        line(f, &self.header)?;
        let total: usize = width.iter().sum::<usize>() + 2 * ncol.saturating_sub(1);
        writeln!(f, "{}", "-".repeat(total))?;
        for r in &self.rows {
            line(f, r)?;
        }
        Ok(())
    }
}

/// Human-readable rendering: the command, a text body, then one line per verdict.
pub fn render_text(report: &Report, body: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", report.command);
    if !body.is_empty() {
        out.push_str(body);
        if !body.ends_with('\n') {
            out.push('\n');
        }
    }
    if !report.verdicts.is_empty() {
        out.push('\n');
    }
    for v in &report.verdicts {
        let tag = if v.pass { "PASS" } else { "FAIL" };
        if v.detail.is_empty() {
            let _ = writeln!(out, "{}: {tag}", v.claim);
        } else {
            let _ = writeln!(out, "{}: {tag} ({})", v.claim, v.detail);
        }
    }
    let _ = writeln!(out, "wall time: {} ms", report.wall_time_ms);
    out
}
