//! Per-identity pass/fail records with basis-tuple witnesses.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::error::Result;
use crate::linmap::{unflatten, LinearMap, SparseVec};

pub const DEFAULT_WITNESS_CAP: usize = 16;

static WITNESS_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_WITNESS_CAP);

/// Upper bound on witnesses recorded per failing identity.
pub fn witness_cap() -> usize {
    WITNESS_CAP.load(Ordering::Relaxed)
}

pub fn set_witness_cap(cap: usize) {
    WITNESS_CAP.store(cap, Ordering::Relaxed);
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub index: Vec<usize>,
    pub value: String,
}

/// A failing input basis tuple with both sides evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub passed: bool,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    /// A yes/no fact that is not a tensor identity (invertibility, membership, ...).
    pub fn fact(id: &str, anchor: &str, statement: &str, passed: bool, note: Option<String>) -> Self {
        CheckEntry {
            id: id.to_string(),
            anchor: anchor.to_string(),
            statement: statement.to_string(),
            passed,
            failures: usize::from(!passed),
            witnesses: Vec::new(),
            note,
        }
    }

    /// Compares two maps column by column; each differing domain basis vector is a failure.
    pub fn compare(id: &str, anchor: &str, statement: &str, lhs: &LinearMap, rhs: &LinearMap) -> Result<Self> {
        let cols = lhs.differing_columns(rhs)?;
        let cap = witness_cap();
        let (lc, rc) = if cols.is_empty() { (Vec::new(), Vec::new()) } else { (lhs.columns(), rhs.columns()) };
        let witnesses = cols
            .iter()
            .take(cap)
            .map(|&c| Witness { tuple: unflatten(c, lhs.domain()), lhs: terms(&lc[c], lhs.codomain()), rhs: terms(&rc[c], rhs.codomain()) })
            .collect();
        Ok(CheckEntry {
            id: id.to_string(),
            anchor: anchor.to_string(),
            statement: statement.to_string(),
            passed: cols.is_empty(),
            failures: cols.len(),
            witnesses,
            note: None,
        })
    }

    /// Membership failures: `tuples` are the offending inputs, `vectors` their images.
    pub fn membership(id: &str, anchor: &str, statement: &str, failures: Vec<(Vec<usize>, Vec<Term>)>) -> Self {
        let n = failures.len();
        let witnesses = failures.into_iter().take(witness_cap()).map(|(tuple, lhs)| Witness { tuple, lhs, rhs: Vec::new() }).collect();
        CheckEntry {
            id: id.to_string(),
            anchor: anchor.to_string(),
            statement: statement.to_string(),
            passed: n == 0,
            failures: n,
            witnesses,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub(crate) fn terms(v: &SparseVec, shape: &[usize]) -> Vec<Term> {
    v.iter().map(|(i, x)| Term { index: unflatten(*i, shape), value: x.to_string() }).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub subject: String,
    pub entries: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub deviations: Vec<String>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport { subject: subject.into(), entries: Vec::new(), deviations: Vec::new() }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn deviation(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.deviations.contains(&text) {
            self.deviations.push(text);
        }
    }

    /// Appends another report's entries, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            e.id = format!("{prefix}/{}", e.id);
            self.entries.push(e);
        }
        for d in other.deviations {
            self.deviation(d);
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.failed().next()
    }

    pub fn truncate_witnesses(&mut self, cap: usize) {
        for e in &mut self.entries {
            e.witnesses.truncate(cap);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "PASS" } else { "FAIL" })?;
        for e in &self.entries {
            write!(f, "  {} {:<28} [{}] {}", if e.passed { "ok  " } else { "FAIL" }, e.id, e.anchor, e.statement)?;
            if !e.passed {
                write!(f, " ({} failing)", e.failures)?;
            }
            writeln!(f)?;
            if let Some(n) = &e.note {
                writeln!(f, "         note: {n}")?;
            }
            for w in &e.witnesses {
                writeln!(f, "         at {:?}: lhs = {} rhs = {}", w.tuple, show(&w.lhs), show(&w.rhs))?;
            }
        }
        for d in &self.deviations {
            writeln!(f, "  deviation: {d}")?;
        }
        Ok(())
    }
}

fn show(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.iter().map(|t| format!("{}·{:?}", t.value, t.index)).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn diag(values: &[i64]) -> LinearMap {
        let f = Field::Rational;
        LinearMap::from_entries(f, &[values.len()], &[values.len()], values.iter().enumerate().map(|(i, &v)| (i, i, f.int(v)))).unwrap()
    }

    #[test]
    fn compare_lists_differing_columns_as_witnesses() {
        let e = CheckEntry::compare("x", "t", "a = b", &diag(&[1, 2, 3]), &diag(&[1, 5, 0])).unwrap();
        assert!(!e.passed);
        assert_eq!(e.failures, 2);
        assert_eq!(e.witnesses[0].tuple, vec![1]);
        assert_eq!(e.witnesses[0].lhs, vec![Term { index: vec![1], value: "2".into() }]);
        assert!(e.witnesses[1].rhs.is_empty());
    }

    #[test]
    fn absorbed_entries_are_prefixed_and_deviations_deduplicated() {
        let mut inner = CheckReport::new("inner");
        inner.push(CheckEntry::fact("a", "t", "s", true, None));
        inner.deviation("d");
        let mut outer = CheckReport::new("outer");
        outer.deviation("d");
        outer.absorb("in", inner);
        assert_eq!(outer.entries[0].id, "in/a");
        assert_eq!(outer.deviations, vec!["d".to_string()]);
        assert!(outer.passed());
    }

    #[test]
    fn display_shows_zero_for_empty_sides() {
        let mut r = CheckReport::new("s");
        r.push(CheckEntry::compare("x", "t", "f = 0", &diag(&[4]), &diag(&[0])).unwrap());
        let text = r.to_string();
        assert!(text.starts_with("s: FAIL"));
        assert!(text.contains("at [0]: lhs = 4·[0] rhs = 0"));
    }
}
