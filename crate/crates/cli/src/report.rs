//! Reports: flat rows of `theory / degree / dim / check / verdict`.

use serde::{Deserialize, Serialize};

use crate::config::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A value or a diagnostic that is not a pass/fail claim.
    Info,
    Skipped,
}

impl Verdict {
    pub fn of(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Info => "info",
            Verdict::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub theory: String,
    pub degree: Option<usize>,
    pub dim: Option<usize>,
    pub check: Option<String>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub job: String,
    pub command: String,
    pub max_degree: usize,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(job: &str, command: &str, max_degree: usize) -> Report {
        Report {
            job: job.to_string(),
            command: command.to_string(),
            max_degree,
            ..Report::default()
        }
    }

    /// One row per degree.
    pub fn dims(&mut self, theory: &str, dims: &[usize]) {
        for (n, &d) in dims.iter().enumerate() {
            self.rows.push(Row {
                theory: theory.to_string(),
                degree: Some(n),
                dim: Some(d),
                check: None,
                verdict: Verdict::Info,
            });
        }
    }

    pub fn check(&mut self, theory: &str, degree: Option<usize>, check: String, verdict: Verdict) {
        self.rows.push(Row { theory: theory.to_string(), degree, dim: None, check: Some(check), verdict });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Dimension rows of one theory, in degree order.
    pub fn table(&self, theory: &str) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.theory == theory && r.check.is_none())
            .filter_map(|r| r.dim)
            .collect()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Machine => emit_machine(report),
        Format::Human => emit_human(report),
    }
}

pub fn emit_machine(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

pub fn parse_machine(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

fn cell(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

pub fn emit_human(report: &Report) -> String {
    let mut out = format!(
        "job {}  command {}  max degree {}\n",
        report.job, report.command, report.max_degree
    );
    let header = ["theory", "degree", "dim", "check", "verdict"];
    let body: Vec<[String; 5]> = report
        .rows
        .iter()
        .map(|r| {
            [
                r.theory.clone(),
                cell(r.degree),
                cell(r.dim),
                r.check.clone().unwrap_or_else(|| "-".into()),
                r.verdict.as_str().to_string(),
            ]
        })
        .collect();
    let mut width = header.map(|h| h.chars().count());
    for row in &body {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(width).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(w - c.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    out.push_str(&line(&header.map(String::from)));
    for row in &body {
        out.push_str(&line(row));
    }
    for n in &report.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    let fails = report.failures().count();
    out.push_str(&if fails == 0 { "verdict: pass\n".to_string() } else { format!("verdict: fail ({fails} failed)\n") });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::new("empty", "validate", 0);
        let text = emit_human(&r);
        assert!(text.starts_with("job empty"));
        assert!(text.contains("theory"));
        assert!(r.passed());
        assert_eq!(parse_machine(&emit_machine(&r)).unwrap(), r);
    }

    #[test]
    fn machine_round_trip() {
        let mut r = Report::new("x", "hc-twisted", 3);
        r.dims("HC^g", &[1, 0, 1, 0]);
        r.check("identities", Some(2), "b∘b (0,2)".into(), Verdict::Fail);
        let back = parse_machine(&emit_machine(&r)).unwrap();
        assert_eq!(back.table("HC^g"), vec![1, 0, 1, 0]);
        assert_eq!(back, r);
        assert_eq!(back.exit_code(), 1);
    }
}
