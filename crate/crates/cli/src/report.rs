//! Report documents and their two renderings: pretty JSON with a fixed
//! field order, and a plain text table.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::claims::{ClaimResult, Verdict};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub fails: usize,
    pub budget_exceeded: usize,
}

impl Summary {
    pub fn of(claims: &[ClaimResult]) -> Self {
        let count = |v| claims.iter().filter(|c| c.verdict == v).count();
        Summary {
            total: claims.len(),
            holds: count(Verdict::Holds),
            fails: count(Verdict::Fails),
            budget_exceeded: count(Verdict::BudgetExceeded),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.holds == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub manifest: String,
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "manifest {} (monophonic {})", self.manifest, self.tool_version);
        let id_w = self.claims.iter().map(|c| c.claim_id.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<id_w$}  {:<15}  {:>9}  {:>10}  statement", "claim", "verdict", "checked", "ms");
        for c in &self.claims {
            let _ = writeln!(
                out,
                "{:<id_w$}  {:<15}  {:>9}  {:>10}  {}",
                c.claim_id,
                c.verdict.to_string(),
                c.checked,
                c.runtime_ms,
                c.statement
            );
            if c.verdict != Verdict::Holds {
                let _ =
                    writeln!(out, "{:id_w$}  expected {}, observed {}", "", compact(&c.expected), compact(&c.observed));
                if let Some(w) = &c.witness {
                    let _ = writeln!(out, "{:id_w$}  witness {}", "", compact(w));
                }
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} claims: {} hold, {} fail, {} budget-exceeded",
            s.total, s.holds, s.fails, s.budget_exceeded
        );
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}
