//! Outcomes of law suites.

use std::fmt;

/// The first input on which a law's two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Result of checking one named law over a batch of samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
    /// Present exactly when `failures > 0`.
    pub counterexample: Option<Counterexample>,
}

impl LawOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        LawOutcome { name: name.into(), samples: 0, failures: 0, counterexample: None }
    }

    /// Records one sample. `describe` runs only for the first failure.
    pub fn record(&mut self, holds: bool, describe: impl FnOnce() -> Counterexample) {
        self.samples += 1;
        if !holds {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    /// Records one sample comparing two displayable sides.
    pub fn compare<T: PartialEq + fmt::Display>(&mut self, inputs: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.record(lhs == rhs, || Counterexample { inputs: inputs(), lhs: lhs.to_string(), rhs: rhs.to_string() });
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub suite: String,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn new(suite: impl Into<String>) -> Self {
        LawReport { suite: suite.into(), laws: Vec::new() }
    }

    pub fn push(&mut self, law: LawOutcome) {
        self.laws.push(law);
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawOutcome::passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.name == name)
    }

    /// Names of the failing laws, in report order.
    pub fn failing(&self) -> Vec<&str> {
        self.laws.iter().filter(|l| !l.passed()).map(|l| l.name.as_str()).collect()
    }

    /// Appends the laws of `other`, merging outcomes that share a name.
    pub fn absorb(&mut self, other: LawReport) {
        for law in other.laws {
            match self.laws.iter_mut().find(|l| l.name == law.name) {
                Some(existing) => {
                    existing.samples += law.samples;
                    existing.failures += law.failures;
                    if existing.counterexample.is_none() {
                        existing.counterexample = law.counterexample;
                    }
                }
                None => self.laws.push(law),
            }
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.laws.iter().filter(|l| l.passed()).count();
        writeln!(f, "suite {}: {}/{} laws pass", self.suite, passed, self.laws.len())?;
        for law in &self.laws {
            let status = if law.passed() { "PASS" } else { "FAIL" };
            write!(f, "  {status} {:<16} {} samples", law.name, law.samples)?;
            if law.failures > 0 {
                write!(f, ", {} failures", law.failures)?;
            }
            writeln!(f)?;
            if let Some(cx) = &law.counterexample {
                writeln!(f, "    inputs: {}", cx.inputs)?;
                writeln!(f, "    lhs:    {}", cx.lhs)?;
                writeln!(f, "    rhs:    {}", cx.rhs)?;
            }
        }
        Ok(())
    }
}
