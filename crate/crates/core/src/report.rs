use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed check, with the indices (facets, vertices, ...) it concerns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub code: String,
    pub message: String,
    pub indices: Vec<usize>,
}

/// Outcome of a verifier. `ok` exactly when there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, code: &str, message: impl Into<String>, indices: Vec<usize>) {
        self.violations.push(Violation {
            code: code.to_string(),
            message: message.into(),
            indices,
        });
    }

    pub fn has(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "[{}] {}", v.code, v.message)?;
            if i == 4 && self.violations.len() > 5 {
                write!(f, "; ... {} more", self.violations.len() - 5)?;
                break;
            }
        }
        Ok(())
    }
}
