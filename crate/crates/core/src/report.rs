//! Outcome records shared by the verification harnesses.

use serde::Serialize;

/// One tested instance: a witness label, pass/fail and a free-form detail.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub witness: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub entries: Vec<CheckEntry>,
    /// Largest numeric deviation seen, for tolerance-based checks.
    pub max_deviation: Option<f64>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), entries: Vec::new(), max_deviation: None }
    }

    pub fn push(&mut self, witness: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.entries.push(CheckEntry { witness: witness.into(), ok, detail: detail.into() });
    }

    pub fn note_deviation(&mut self, dev: f64) {
        self.max_deviation = Some(match self.max_deviation {
            Some(m) if m >= dev => m,
            _ => dev,
        });
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> Vec<&CheckEntry> {
        self.entries.iter().filter(|e| !e.ok).collect()
    }

    /// Append the entries of another report, prefixing their witnesses.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for e in other.entries {
            self.entries.push(CheckEntry { witness: format!("{prefix}{}", e.witness), ..e });
        }
        if let Some(d) = other.max_deviation {
            self.note_deviation(d);
        }
    }

    pub fn summary(&self) -> String {
        let fails = self.failures().len();
        let dev = self.max_deviation.map(|d| format!(", max deviation {d:.3e}")).unwrap_or_default();
        format!("{}: {} cases, {} failed{}", self.name, self.entries.len(), fails, dev)
    }
}
