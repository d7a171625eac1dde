//! Verification results and the JSON run report.
//!
//! A failed identity is data, not an error: every `verify_*` operation
//! returns a [`Verification`] listing named checks plus any structured
//! notes about printed formulas that do not hold as stated.

use serde::Serialize;
use serde_json::Value;

use crate::arith::Ring;
use crate::matrix::SquareMatrix;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A printed formula or claim that the verifier found not to hold as
/// stated, together with what does hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperNote {
    pub id: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub checks: Vec<Check>,
    pub notes: Vec<PaperNote>,
}

impl Verification {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check; `detail` is only evaluated on failure.
    pub fn check(&mut self, name: &str, pass: bool, detail: impl FnOnce() -> String) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: (!pass).then(detail),
        });
    }

    /// Records a passing check that carries an informational detail.
    pub fn info(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass: true, detail: Some(detail.into()) });
    }

    /// Exact matrix equality, reporting the first differing entry (1-based).
    pub fn check_matrix<T: Ring>(&mut self, name: &str, lhs: &SquareMatrix<T>, rhs: &SquareMatrix<T>) {
        let mismatch = lhs.first_mismatch(rhs);
        self.check(name, mismatch.is_none(), || match mismatch {
            Some((i, j)) if lhs.order() == rhs.order() => format!(
                "first mismatch at ({}, {}): {} vs {}",
                i + 1,
                j + 1,
                lhs.get(i, j),
                rhs.get(i, j)
            ),
            _ => format!("order {} vs {}", lhs.order(), rhs.order()),
        });
    }

    pub fn note(&mut self, id: &str, detail: impl Into<String>) {
        self.notes.push(PaperNote { id: id.into(), detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn has_note(&self, id: &str) -> bool {
        self.notes.iter().any(|n| n.id == id)
    }

    pub fn merge(&mut self, other: Verification) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    /// `"ok"` or the failing checks joined by `"; "`.
    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .failures()
            .map(|c| match &c.detail {
                Some(d) => format!("{}: {}", c.name, d),
                None => c.name.clone(),
            })
            .collect();
        if failed.is_empty() {
            "ok".into()
        } else {
            failed.join("; ")
        }
    }
}

/// One verified parameter tuple.
#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub suite: String,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub pass: bool,
    pub detail: String,
    pub checks: Vec<Check>,
    pub paper_notes: Vec<PaperNote>,
    pub wall_time_us: u64,
}

impl CaseRecord {
    pub fn new(suite: &str, n: u64, e: Option<u64>, p: Option<u64>, v: Verification, wall_time_us: u64) -> Self {
        CaseRecord {
            suite: suite.into(),
            n,
            e,
            p,
            pass: v.passed(),
            detail: v.summary(),
            checks: v.checks,
            paper_notes: v.notes,
            wall_time_us,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub paper_notes: usize,
}

/// A suite run. The exit status is 0 iff every case passed.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(suite: &str, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
            paper_notes: cases.iter().map(|c| c.paper_notes.len()).sum(),
        };
        RunReport { schema: SCHEMA_VERSION, suite: suite.into(), cases, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn notes(&self) -> impl Iterator<Item = (&CaseRecord, &PaperNote)> {
        self.cases.iter().flat_map(|c| c.paper_notes.iter().map(move |n| (c, n)))
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    #[test]
    fn failed_checks_carry_details() {
        let mut v = Verification::new();
        v.check("a", true, || unreachable!());
        let i = SquareMatrix::identity(2, &Rational::one());
        let z = SquareMatrix::zeros(2, &Rational::one());
        v.check_matrix("b", &i, &z);
        assert!(!v.passed());
        assert_eq!(v.summary(), "b: first mismatch at (1, 1): 1 vs 0");
        assert_eq!(v.get("a").unwrap().detail, None);
    }

    #[test]
    fn report_counts_and_exit_code() {
        let mut bad = Verification::new();
        bad.check("x", false, || "boom".into());
        bad.note("n1", "something");
        let cases = vec![
            CaseRecord::new("s", 1, None, None, Verification::new(), 0),
            CaseRecord::new("s", 2, None, Some(3), bad, 0),
        ];
        let r = RunReport::new("s", cases);
        assert_eq!(r.summary, Summary { total: 2, passed: 1, failed: 1, paper_notes: 1 });
        assert_eq!(r.exit_code(), 1);
        let j = r.to_json();
        assert_eq!(j["schema"], 1);
        assert_eq!(j["cases"][1]["p"], 3);
        assert!(j["cases"][0].get("p").is_none());
        assert_eq!(j["cases"][1]["paper_notes"][0]["id"], "n1");
    }
}
