use std::fmt;

/// A failing instance of an axiom: the arguments (as 0-based indices or
/// integers) plus an optional human-readable explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub args: Vec<i64>,
    pub detail: String,
}

impl Witness {
    pub fn new<I: IntoIterator<Item = i64>>(args: I, detail: impl Into<String>) -> Self {
        Witness {
            args: args.into_iter().collect(),
            detail: detail.into(),
        }
    }

    pub fn indices(args: &[usize], detail: impl Into<String>) -> Self {
        Witness::new(args.iter().map(|&a| a as i64), detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: String,
    pub passed: bool,
    /// Number of failing instances found (0 when passed).
    pub violations: usize,
    pub witness: Option<Witness>,
    /// Informational verdicts are reported but do not affect `passed()`.
    pub informational: bool,
}

impl Verdict {
    pub fn pass(axiom: impl Into<String>) -> Self {
        Verdict {
            axiom: axiom.into(),
            passed: true,
            violations: 0,
            witness: None,
            informational: false,
        }
    }

    pub fn fail(axiom: impl Into<String>, violations: usize, witness: Witness) -> Self {
        Verdict {
            axiom: axiom.into(),
            passed: false,
            violations,
            witness: Some(witness),
            informational: false,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// Accumulates failures of a single axiom, keeping the first witness.
#[derive(Debug)]
pub struct Tally {
    axiom: String,
    violations: usize,
    witness: Option<Witness>,
}

impl Tally {
    pub fn new(axiom: impl Into<String>) -> Self {
        Tally {
            axiom: axiom.into(),
            violations: 0,
            witness: None,
        }
    }

    pub fn record(&mut self, witness: impl FnOnce() -> Witness) {
        if self.witness.is_none() {
            self.witness = Some(witness());
        }
        self.violations += 1;
    }

    /// Merges the failures of `v`, prefixing its witness arguments.
    pub fn absorb(&mut self, v: &Verdict, prefix: &[i64]) {
        if let Some(w) = &v.witness {
            if self.witness.is_none() {
                let args = prefix.iter().chain(&w.args).copied().collect();
                self.witness = Some(Witness { args, detail: w.detail.clone() });
            }
            self.violations += v.violations;
        }
    }

    pub fn finish(self) -> Verdict {
        match self.witness {
            None => Verdict::pass(self.axiom),
            Some(w) => Verdict::fail(self.axiom, self.violations, w),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdicts: Vec<Verdict>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.verdicts.extend(other.verdicts);
    }

    /// True iff every non-informational verdict passed.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed || v.informational)
    }

    pub fn get(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn axiom_passed(&self, axiom: &str) -> bool {
        self.get(axiom).is_some_and(|v| v.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            write!(f, "{}: {}", v.axiom, if v.passed { "pass" } else { "FAIL" })?;
            if v.informational {
                write!(f, " (informational)")?;
            }
            if let Some(w) = &v.witness {
                write!(f, " violations={} witness={:?}", v.violations, w.args)?;
                if !w.detail.is_empty() {
                    write!(f, " {}", w.detail)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
