//! Report assembly and rendering.

use multival_core::{AxiomReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

/// Verdicts, ordered key/value fields and an optional payload.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    pub fields: Vec<(String, String)>,
    pub verdicts: Vec<Verdict>,
    /// Element labels used to annotate witnesses whose arguments are indices.
    pub labels: Option<Vec<String>>,
    pub payload: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn verdicts(&mut self, r: &AxiomReport) -> &mut Self {
        self.verdicts.extend(r.verdicts.iter().cloned());
        self
    }

    pub fn verdict(&mut self, v: Verdict) -> &mut Self {
        self.verdicts.push(v);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed || v.informational)
    }

    fn witness_labels(&self, args: &[i64]) -> Option<String> {
        let labels = self.labels.as_ref()?;
        let named: Option<Vec<&str>> = args
            .iter()
            .map(|&a| usize::try_from(a).ok().and_then(|i| labels.get(i)).map(String::as_str))
            .collect();
        named.map(|n| n.join(","))
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Structured => self.render_structured(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = format!("== {}\n", self.command);
        if let Some(p) = &self.payload {
            out.push_str(p);
            if !p.ends_with('\n') {
                out.push('\n');
            }
            out.push('\n');
        }
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for v in &self.verdicts {
            let tag = match (v.passed, v.informational) {
                (true, _) => "pass",
                (false, true) => "info",
                (false, false) => "FAIL",
            };
            out.push_str(&format!("[{tag}] {}", v.axiom));
            if let Some(w) = &v.witness {
                let args: Vec<String> = w.args.iter().map(ToString::to_string).collect();
                out.push_str(&format!(" violations={} witness=({})", v.violations, args.join(", ")));
                if let Some(l) = self.witness_labels(&w.args) {
                    out.push_str(&format!(" labels=({l})"));
                }
                if !w.detail.is_empty() {
                    out.push_str(&format!(" {}", w.detail));
                }
            }
            out.push('\n');
        }
        out.push_str(&format!("result: {}\n", if self.passed() { "pass" } else { "fail" }));
        out
    }

    fn render_structured(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(p) = &self.payload {
            let lines: Vec<&str> = p.lines().collect();
            out.push_str(&format!("payload.lines: {}\n", lines.len()));
            for (i, l) in lines.iter().enumerate() {
                out.push_str(&format!("payload.{i}: {l}\n"));
            }
        }
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("verdicts: {}\n", self.verdicts.len()));
        for (i, v) in self.verdicts.iter().enumerate() {
            let p = format!("verdict.{i}");
            out.push_str(&format!("{p}.axiom: {}\n", v.axiom));
            out.push_str(&format!("{p}.status: {}\n", if v.passed { "pass" } else { "fail" }));
            out.push_str(&format!("{p}.informational: {}\n", v.informational));
            out.push_str(&format!("{p}.violations: {}\n", v.violations));
            if let Some(w) = &v.witness {
                let args: Vec<String> = w.args.iter().map(ToString::to_string).collect();
                out.push_str(&format!("{p}.witness: {}\n", args.join(",")));
                if let Some(l) = self.witness_labels(&w.args) {
                    out.push_str(&format!("{p}.witness_labels: {l}\n"));
                }
                if !w.detail.is_empty() {
                    out.push_str(&format!("{p}.detail: {}\n", w.detail));
                }
            }
        }
        out.push_str(&format!("status: {}\n", if self.passed() { "pass" } else { "fail" }));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use multival_core::Witness;

    #[test]
    fn structured_lists_witness_and_labels() {
        let mut r = Report::new("check demo");
        r.labels = Some(vec!["e".into(), "s1".into()]);
        r.field("size", 2);
        r.verdict(Verdict::pass("a"));
        r.verdict(Verdict::fail("b", 3, Witness::indices(&[1, 0], "why")));
        let s = r.render(OutputFormat::Structured);
        assert!(s.contains("verdict.1.witness: 1,0\n"));
        assert!(s.contains("verdict.1.witness_labels: s1,e\n"));
        assert!(s.contains("verdict.1.detail: why\n"));
        assert!(s.ends_with("status: fail\n"));
        assert!(!r.passed());
        assert!(r.render(OutputFormat::Text).contains("[FAIL] b violations=3 witness=(1, 0) labels=(s1,e) why"));
    }

    #[test]
    fn informational_failures_do_not_fail() {
        let mut r = Report::new("x");
        r.verdict(Verdict::fail("c", 1, Witness::indices(&[0], "")).informational());
        assert!(r.passed());
        assert!(r.render(OutputFormat::Text).contains("[info] c"));
    }
}
