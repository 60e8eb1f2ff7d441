use std::fmt;

use crate::graded_algebra::GradedPoly;
use crate::structures::data::TensorEntry;

/// What a condition left behind: a hamiltonian, or the nonzero entries of a
/// classical tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Hamiltonian(GradedPoly),
    Tensor(Vec<TensorEntry>),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Hamiltonian(p) => p.is_zero(),
            Residual::Tensor(entries) => entries.iter().all(|e| e.value.is_zero()),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Hamiltonian(p) => write!(f, "{p}"),
            Residual::Tensor(entries) => {
                let nz: Vec<&TensorEntry> = entries.iter().filter(|e| !e.value.is_zero()).collect();
                if nz.is_empty() {
                    return write!(f, "0");
                }
                for (i, e) in nz.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{} = {}", e.index, e.value)?;
                }
                Ok(())
            }
        }
    }
}

/// One named zero-test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    /// The identity being tested, written as a formula.
    pub label: String,
    pub residual: Residual,
}

impl Condition {
    pub fn new(name: &str, label: &str, residual: Residual) -> Self {
        Condition {
            name: name.to_string(),
            label: label.to_string(),
            residual,
        }
    }

    pub fn hamiltonian(name: &str, label: &str, p: GradedPoly) -> Self {
        Self::new(name, label, Residual::Hamiltonian(p))
    }

    pub fn tensor(name: &str, label: &str, entries: Vec<TensorEntry>) -> Self {
        Self::new(name, label, Residual::Tensor(entries))
    }

    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Per-condition residuals; the report passes iff every residual is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub title: String,
    pub conditions: Vec<Condition>,
}

impl CheckReport {
    pub fn new(title: &str) -> Self {
        CheckReport {
            title: title.to_string(),
            conditions: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Condition) {
        self.conditions.push(c);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.conditions.extend(other.conditions);
    }

    pub fn passed(&self) -> bool {
        self.conditions.iter().all(Condition::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.conditions {
            write!(f, "  [{}] {}  ({})", if c.passed() { "ok" } else { "FAIL" }, c.name, c.label)?;
            if c.passed() {
                writeln!(f)?;
            } else {
                writeln!(f, "\n      residual: {}", c.residual)?;
            }
        }
        Ok(())
    }
}
