//! Verification reports shared by the algebraic verifiers.

use std::fmt;

use serde::Serialize;

use crate::exact_linear::{BasisLabel, LinComb, Rational, TensorKey};

/// Witnesses kept per check; the failure count is always exact.
pub const MAX_WITNESSES: usize = 5;

/// One evaluated side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluated {
    Vector(LinComb<BasisLabel>),
    Scalar(Rational),
    /// The side could not be evaluated (e.g. a map applied outside its domain).
    Undefined(String),
}

/// A failing instance: the basis tuple and both sides of the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    #[serde(skip)]
    pub indices: Vec<usize>,
    #[serde(skip)]
    pub lhs: Evaluated,
    #[serde(skip)]
    pub rhs: Evaluated,
    #[serde(rename = "lhs")]
    pub lhs_text: String,
    #[serde(rename = "rhs")]
    pub rhs_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    fn push(&mut self, w: Witness) {
        self.passed = false;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Compares two vectors keyed by basis indices (or tuples of them).
    pub fn compare<K: TensorKey>(
        &mut self,
        basis: &[BasisLabel],
        names: &[String],
        tuple: &[usize],
        lhs: &LinComb<K>,
        rhs: &LinComb<K>,
    ) -> bool {
        self.instances += 1;
        if lhs == rhs {
            return true;
        }
        self.push(Witness {
            tuple: tuple.iter().map(|&i| names[i].clone()).collect(),
            indices: tuple.to_vec(),
            lhs: Evaluated::Vector(lhs.to_labels(basis)),
            rhs: Evaluated::Vector(rhs.to_labels(basis)),
            lhs_text: lhs.render(names),
            rhs_text: rhs.render(names),
        });
        false
    }

    /// Like [`Check::compare`], for tuples drawn from a different basis than
    /// the one the compared vectors live in.
    pub fn compare_with<K: TensorKey>(
        &mut self,
        tuple_names: impl FnOnce() -> Vec<String>,
        tuple: &[usize],
        basis: &[BasisLabel],
        names: &[String],
        lhs: &LinComb<K>,
        rhs: &LinComb<K>,
    ) -> bool {
        self.instances += 1;
        if lhs == rhs {
            return true;
        }
        self.push(Witness {
            tuple: tuple_names(),
            indices: tuple.to_vec(),
            lhs: Evaluated::Vector(lhs.to_labels(basis)),
            rhs: Evaluated::Vector(rhs.to_labels(basis)),
            lhs_text: lhs.render(names),
            rhs_text: rhs.render(names),
        });
        false
    }

    pub fn compare_scalar(
        &mut self,
        tuple_names: Vec<String>,
        tuple: &[usize],
        lhs: &Rational,
        rhs: &Rational,
    ) -> bool {
        self.instances += 1;
        if lhs == rhs {
            return true;
        }
        self.push(Witness {
            tuple: tuple_names,
            indices: tuple.to_vec(),
            lhs: Evaluated::Scalar(lhs.clone()),
            rhs: Evaluated::Scalar(rhs.clone()),
            lhs_text: lhs.to_string(),
            rhs_text: rhs.to_string(),
        });
        false
    }

    /// Records a pass/fail outcome whose sides are only available as text.
    pub fn expect(
        &mut self,
        ok: bool,
        tuple_names: Vec<String>,
        tuple: &[usize],
        lhs: impl FnOnce() -> String,
        rhs: impl FnOnce() -> String,
    ) -> bool {
        self.instances += 1;
        if ok {
            return true;
        }
        let (l, r) = (lhs(), rhs());
        self.push(Witness {
            tuple: tuple_names,
            indices: tuple.to_vec(),
            lhs: Evaluated::Undefined(l.clone()),
            rhs: Evaluated::Undefined(r.clone()),
            lhs_text: l,
            rhs_text: r,
        });
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Report {
            title: title.into(),
            passed,
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Appends the checks of another report.
    pub fn extend(&mut self, other: Report) {
        self.passed &= other.passed;
        self.checks.extend(other.checks);
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.title,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            if c.passed {
                writeln!(f, "  ok    {} ({} instances)", c.name, c.instances)?;
            } else {
                writeln!(
                    f,
                    "  FAIL  {} ({} of {} instances)",
                    c.name, c.failures, c.instances
                )?;
                for w in &c.witnesses {
                    writeln!(f, "        at ({}):", w.tuple.join(", "))?;
                    writeln!(f, "          lhs = {}", w.lhs_text)?;
                    writeln!(f, "          rhs = {}", w.rhs_text)?;
                }
            }
        }
        Ok(())
    }
}
