//! Verdicts with localized violations.

use std::fmt;

use crate::linalg::{fmt_vec, Scalar};

/// One failed instance of an identity. Indices are 0-based here and printed
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(
            f,
            "{} at ({}): lhs = {}, rhs = {}",
            self.identity,
            idx.join(","),
            fmt_vec(&self.lhs),
            fmt_vec(&self.rhs)
        )
    }
}

/// Passes exactly when there are no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn into_violations(self) -> Vec<Violation> {
        self.violations
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }

    /// Prefixes every identity id with `tag/`.
    pub fn tagged(mut self, tag: &str) -> Self {
        for v in &mut self.violations {
            v.identity = format!("{tag}/{}", v.identity);
        }
        self
    }

    /// True if some violation carries exactly this id, or this id as its last
    /// `/`-separated segment.
    pub fn fails(&self, identity: &str) -> bool {
        self.violations.iter().any(|v| {
            v.identity == identity || v.identity.rsplit('/').next() == Some(identity)
        })
    }

    /// Distinct identity ids, sorted.
    pub fn failed_identities(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.violations.iter().map(|v| v.identity.clone()).collect();
        ids.sort();
        ids.dedup();
        ids
    }

    /// Violations ordered by identity then indices.
    pub fn sorted(mut self) -> Self {
        self.violations
            .sort_by(|a, b| (&a.identity, &a.indices).cmp(&(&b.identity, &b.indices)));
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        writeln!(f, "fail ({} violations)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Accumulates comparisons; optionally stops after the first failure.
pub(crate) struct Checker {
    report: CheckReport,
    first_only: bool,
}

impl Checker {
    pub(crate) fn new(first_only: bool) -> Self {
        Checker {
            report: CheckReport::new(),
            first_only,
        }
    }

    pub(crate) fn full() -> Self {
        Self::new(false)
    }

    pub(crate) fn done(&self) -> bool {
        self.first_only && !self.report.passed()
    }

    pub(crate) fn eq(&mut self, id: &str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        if lhs != rhs {
            self.report.push(Violation {
                identity: id.to_string(),
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    pub(crate) fn fail(&mut self, id: &str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        self.report.push(Violation {
            identity: id.to_string(),
            indices: indices.to_vec(),
            lhs,
            rhs,
        });
    }

    pub(crate) fn merge(&mut self, other: CheckReport) {
        self.report.merge(other);
    }

    pub(crate) fn finish(self) -> CheckReport {
        self.report
    }
}
