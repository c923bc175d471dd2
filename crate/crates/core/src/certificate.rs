//! Machine-checkable evidence attached to every verdict.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertEntry {
    pub label: String,
    pub ok: bool,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: String,
    pub entries: Vec<CertEntry>,
}

impl Certificate {
    pub fn new(subject: impl Into<String>) -> Self {
        Certificate {
            subject: subject.into(),
            entries: Vec::new(),
        }
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, value: impl Into<Value>) -> bool {
        self.entries.push(CertEntry {
            label: label.into(),
            ok,
            value: value.into(),
        });
        ok
    }

    /// Records a residual map; passes iff it is exactly zero.
    pub fn residual(&mut self, label: impl Into<String>, residual: &Matrix) -> bool {
        let nnz = residual.nnz();
        self.check(label, nnz == 0, serde_json::json!({ "nonzero_entries": nnz }))
    }

    pub fn equal<T: PartialEq + Serialize>(&mut self, label: impl Into<String>, lhs: T, rhs: T) -> bool {
        let ok = lhs == rhs;
        let value = serde_json::json!({ "lhs": lhs, "rhs": rhs });
        self.check(label, ok, value)
    }

    /// Merges a sub-certificate, prefixing its labels.
    pub fn absorb(&mut self, prefix: &str, other: Certificate) -> bool {
        let ok = other.verdict();
        for e in other.entries {
            self.entries.push(CertEntry {
                label: format!("{prefix}/{}", e.label),
                ..e
            });
        }
        ok
    }

    pub fn verdict(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> Vec<&CertEntry> {
        self.entries.iter().filter(|e| !e.ok).collect()
    }

    /// SHA-256 over the canonical JSON encoding.
    pub fn digest(&self) -> String {
        let canon = serde_json::to_vec(&serde_json::to_value(self).expect("serializable"))
            .expect("serializable");
        let hash = Sha256::digest(&canon);
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Converts a failing certificate into a falsification error.
    pub fn into_result(self) -> Result<Certificate> {
        if self.verdict() {
            Ok(self)
        } else {
            let labels: Vec<&str> = self.failures().iter().map(|e| e.label.as_str()).collect();
            Err(Error::Falsified(format!("{}: {}", self.subject, labels.join(", "))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_and_digest() {
        let mut c = Certificate::new("demo");
        c.equal("dims", 2, 2);
        assert!(c.verdict());
        let d1 = c.digest();
        c.residual("zero", &Matrix::identity(2, 1));
        assert!(!c.verdict());
        assert_ne!(d1, c.digest());
        assert!(c.into_result().is_err());
    }
}
