//! Verification report types and their deterministic JSON rendering.
//!
//! Timing is kept out of the JSON by default so two runs with the same
//! seed produce byte-identical report files; text output always shows it.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Serialize)]
pub struct Check {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub details: String,
}

#[derive(Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            checks: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn check(&mut self, id: &str, paper_ref: &str, pass: bool, details: String) {
        assert!(
            self.checks.iter().all(|c| c.id != id),
            "duplicate check id {id}"
        );
        self.checks.push(Check {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            details,
        });
    }

    pub fn skip(&mut self, id: &str, paper_ref: &str, details: String) {
        self.checks.push(Check {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status: Status::Skip,
            details,
        });
    }

    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn render_text(&self, out: &mut String) {
        out.push_str(&format!("suite {}\n", self.suite));
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            out.push_str(&format!("  [{s}] {:<38} {}\n", c.id, c.details));
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("  ({} checks, {} ms)\n", self.checks.len(), ms));
        }
    }
}

#[derive(Serialize)]
pub struct ReportSet {
    pub reports: Vec<Report>,
}

impl ReportSet {
    pub fn failures(&self) -> usize {
        self.reports.iter().map(|r| r.failures()).sum()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            r.render_text(&mut out);
        }
        let fails = self.failures();
        if fails == 0 {
            out.push_str("all checks passed\n");
        } else {
            out.push_str(&format!("{fails} check(s) FAILED\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_deterministic_and_omits_timing() {
        let mut r = Report::new("demo");
        r.check("a", "somewhere", true, "fine".into());
        r.check("b", "elsewhere", false, "broken".into());
        let set = ReportSet { reports: vec![r] };
        let j1 = set.to_json();
        let j2 = set.to_json();
        assert_eq!(j1, j2);
        assert!(!j1.contains("elapsed_ms"));
        assert_eq!(set.failures(), 1);
        assert!(set.render_text().contains("FAIL"));
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_ids_rejected() {
        let mut r = Report::new("demo");
        r.check("a", "", true, String::new());
        r.check("a", "", true, String::new());
    }
}
