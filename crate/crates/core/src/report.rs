use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one certificate check, itemised so failures carry witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub check: String,
    pub passed: bool,
    pub items: Vec<CheckItem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub subject: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<i64>>,
}

impl CertificateReport {
    /// An empty report passes until a failing item is pushed.
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            passed: true,
            items: Vec::new(),
        }
    }

    pub fn pass(&mut self, subject: impl Into<String>, detail: impl Into<String>) {
        self.push(CheckItem {
            subject: subject.into(),
            passed: true,
            detail: detail.into(),
            witness: None,
        });
    }

    pub fn fail(
        &mut self,
        subject: impl Into<String>,
        detail: impl Into<String>,
        witness: Option<Vec<i64>>,
    ) {
        self.push(CheckItem {
            subject: subject.into(),
            passed: false,
            detail: detail.into(),
            witness,
        });
    }

    pub fn push(&mut self, item: CheckItem) {
        self.passed &= item.passed;
        self.items.push(item);
    }

    /// Appends the items of `other` under this report.
    pub fn absorb(&mut self, other: CertificateReport) {
        for item in other.items {
            self.push(item);
        }
        self.passed &= other.passed;
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn witnesses(&self) -> Vec<&[i64]> {
        self.failures().filter_map(|i| i.witness.as_deref()).collect()
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        writeln!(f, "{}: {verdict}", self.check)?;
        for item in &self.items {
            let mark = if item.passed { "ok  " } else { "FAIL" };
            write!(f, "  [{mark}] {}: {}", item.subject, item.detail)?;
            if let Some(w) = &item.witness {
                write!(f, " witness {w:?}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// 1-based rendering of an index set, e.g. `{1,4,13}`.
pub fn face_label(face: &[usize]) -> String {
    let parts: Vec<String> = face.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_flip_the_verdict() {
        let mut r = CertificateReport::new("demo");
        r.pass("a", "fine");
        assert!(r.passed);
        r.fail("b", "broken", Some(vec![1, 2]));
        assert!(!r.passed);
        assert_eq!(r.witnesses(), vec![&[1i64, 2][..]]);
        assert_eq!(face_label(&[0, 3, 12]), "{1,4,13}");
    }
}
