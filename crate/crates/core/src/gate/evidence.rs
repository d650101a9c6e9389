use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

/// A named exact integer backing a comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Datum {
    pub label: String,
    pub value: BigInt,
}

/// Outcome of one condition together with the integers that decide it.
/// Every value can be recomputed from `(N, p, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionEvidence {
    pub name: String,
    pub passed: bool,
    pub data: Vec<Datum>,
    /// Optional free-form note, e.g. which index failed.
    pub note: Option<String>,
}

impl ConditionEvidence {
    pub fn new(name: &str, passed: bool) -> Self {
        ConditionEvidence { name: name.to_string(), passed, data: Vec::new(), note: None }
    }

    pub fn with(mut self, label: impl Into<String>, value: impl Into<BigInt>) -> Self {
        self.data.push(Datum { label: label.into(), value: value.into() });
        self
    }

    pub fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn datum(&self, label: &str) -> Option<&BigInt> {
        self.data.iter().find(|d| d.label == label).map(|d| &d.value)
    }
}

impl fmt::Display for ConditionEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", if self.passed { "pass" } else { "FAIL" }, self.name)?;
        for (i, d) in self.data.iter().enumerate() {
            write!(f, "{}{}={}", if i == 0 { ": " } else { ", " }, d.label, d.value)?;
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}
