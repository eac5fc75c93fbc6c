//! Check reports: a list of named identities with verdicts and witnesses.

use std::fmt;

use serde::Serialize;

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// The identity in formula form.
    pub statement: String,
    pub passed: bool,
    /// First failing input under the fixed enumeration, if any.
    pub witness: Option<String>,
    /// Nonzero residual at the witness.
    pub residual: Option<String>,
    /// Test degree for action-based verdicts.
    pub degree: Option<usize>,
    /// Free-form remark, e.g. whether raw tensor equality also held.
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn pass(name: impl Into<String>, statement: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            statement: statement.into(),
            passed: true,
            witness: None,
            residual: None,
            degree: None,
            note: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        statement: impl Into<String>,
        witness: impl Into<String>,
        residual: impl Into<String>,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            statement: statement.into(),
            passed: false,
            witness: Some(witness.into()),
            residual: Some(residual.into()),
            degree: None,
            note: None,
        }
    }

    pub fn with_degree(mut self, d: usize) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Something that can be the difference of two sides of an identity.
pub trait Residual {
    fn vanishes(&self) -> bool;
    fn describe(&self) -> String;
}

impl Residual for bool {
    fn vanishes(&self) -> bool {
        *self
    }
    fn describe(&self) -> String {
        "condition violated".into()
    }
}

/// A named collection of check records.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), records: Vec::new() }
    }

    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Records one identity over a family of instances; stops at the first
    /// instance whose residual does not vanish.
    pub fn check_all<I, R>(&mut self, name: &str, statement: &str, cases: I) -> bool
    where
        I: IntoIterator<Item = (String, R)>,
        R: Residual,
    {
        for (w, r) in cases {
            if !r.vanishes() {
                self.push(CheckRecord::fail(name, statement, w, r.describe()));
                return false;
            }
        }
        self.push(CheckRecord::pass(name, statement));
        true
    }

    /// Records an equality check `lhs == rhs`; `witness` describes the instance.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        name: &str,
        statement: &str,
        witness: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) {
        if lhs == rhs {
            self.push(CheckRecord::pass(name, statement));
        } else {
            self.push(CheckRecord::fail(name, statement, witness(), format!("lhs = {lhs}; rhs = {rhs}")));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for r in &self.records {
            let tag = if r.passed { "PASS" } else { "FAIL" };
            write!(f, "  {tag} {}: {}", r.name, r.statement)?;
            if let Some(d) = r.degree {
                write!(f, " [degree {d}]")?;
            }
            if let Some(n) = &r.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
            if let Some(w) = &r.witness {
                writeln!(f, "      witness: {w}")?;
            }
            if let Some(res) = &r.residual {
                writeln!(f, "      residual: {res}")?;
            }
        }
        let failed = self.failures().count();
        write!(f, "  {} checks, {} failed", self.records.len(), failed)
    }
}
