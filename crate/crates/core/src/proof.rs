//! Structured evidence for symbolic and sampled checks.

use std::fmt;

use serde::Serialize;

use crate::linalg::Matrix;
use crate::poly::MultiPoly;

/// One checked statement together with the evidence for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofItem {
    pub label: String,
    pub holds: bool,
    pub witness: String,
}

/// Ordered list of checked statements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProofReport {
    pub title: String,
    pub items: Vec<ProofItem>,
    pub notes: Vec<String>,
}

impl ProofReport {
    pub fn new(title: &str) -> Self {
        ProofReport { title: title.to_string(), ..Default::default() }
    }

    pub fn push(&mut self, label: &str, holds: bool, witness: impl Into<String>) {
        self.items.push(ProofItem { label: label.to_string(), holds, witness: witness.into() });
    }

    /// Records that `p` expands to the zero polynomial; the witness is the
    /// expansion itself.
    pub fn push_zero(&mut self, label: &str, p: &MultiPoly) {
        self.push(label, p.is_zero(), format!("expands to {p}"));
    }

    /// Records that every entry of `m` expands to zero; on failure the
    /// witness is the first nonzero entry.
    pub fn push_zero_matrix(&mut self, label: &str, m: &Matrix<MultiPoly>) {
        match m.entries().iter().position(|p| !p.is_zero()) {
            None => self.push(label, true, format!("all {} entries expand to 0", m.entries().len())),
            Some(k) => {
                let witness = format!("entry ({}, {}) = {}", k / m.cols() + 1, k % m.cols() + 1, m.entries()[k]);
                self.push(label, false, witness)
            }
        }
    }

    pub fn note(&mut self, text: &str) {
        self.notes.push(text.to_string());
    }

    pub fn extend(&mut self, other: ProofReport) {
        self.items.extend(other.items);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    pub fn first_failure(&self) -> Option<&ProofItem> {
        self.items.iter().find(|i| !i.holds)
    }

    /// Failure witness if any item fails, otherwise the joined witnesses.
    pub fn summary_witness(&self) -> String {
        match self.first_failure() {
            Some(item) => format!("{}: {}", item.label, item.witness),
            None => self.items.iter().map(|i| format!("{}: {}", i.label, i.witness)).collect::<Vec<_>>().join("; "),
        }
    }
}

impl fmt::Display for ProofReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for item in &self.items {
            let mark = if item.holds { "ok" } else { "FAILED" };
            writeln!(f, "  [{mark}] {} ({})", item.label, item.witness)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Tally of a property checked over many samples, keeping the first
/// counterexample.
#[derive(Default)]
pub struct Tally {
    pub checked: usize,
    pub failure: Option<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    /// Tally of `(holds, witness)` outcomes in sample order.
    pub fn collect(outcomes: impl IntoIterator<Item = (bool, String)>) -> Self {
        let mut t = Tally::default();
        for (ok, w) in outcomes {
            t.record(ok, || w);
        }
        t
    }

    pub fn push_into(self, report: &mut ProofReport, label: &str) {
        match self.failure {
            None => report.push(label, true, format!("holds on {} samples", self.checked)),
            Some(w) => report.push(label, false, w),
        }
    }
}
