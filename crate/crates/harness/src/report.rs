//! Verification reports and their JSON and text renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::Source;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub group: String,
    pub suite: String,
    pub claim: String,
    pub anchor: String,
    pub status: Status,
    pub measured: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<Source>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub summary: Summary,
    pub records: Vec<ClaimRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?} (expected json or text)")),
        }
    }
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, records: Vec<ClaimRecord>) -> Self {
        let count = |s| records.iter().filter(|r| r.status == s).count();
        let (pass, fail, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
        let exit_code = if fail > 0 {
            1
        } else if skipped > 0 {
            3
        } else {
            0
        };
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            summary: Summary {
                total: records.len(),
                pass,
                fail,
                skipped,
                exit_code,
            },
            records,
        }
    }

    /// 0 if every claim passed, 1 if any failed, 3 if some were skipped
    /// for lack of budget and none failed.
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<[String; 6]> = vec![[
            "status".into(),
            "suite".into(),
            "group".into(),
            "claim".into(),
            "measured".into(),
            "expected".into(),
        ]];
        for r in &self.records {
            let expected = match (&r.expected, r.source) {
                (Some(e), Some(s)) => format!("{e} ({s})"),
                (Some(e), None) => e.clone(),
                _ => String::new(),
            };
            rows.push([
                r.status.as_str().into(),
                r.suite.clone(),
                r.group.clone(),
                r.claim.clone(),
                r.measured.clone(),
                expected,
            ]);
        }
        let mut widths = [0usize; 6];
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in &rows {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i + 1 == row.len() {
                    line.push_str(cell);
                } else {
                    let pad = widths[i] - cell.chars().count();
                    let _ = write!(line, "{cell}{}  ", " ".repeat(pad));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n{} claims: {} pass, {} fail, {} skipped (exit {})",
            s.total, s.pass, s.fail, s.skipped, s.exit_code
        );
        out
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}
