//! Verification reports shared by all check suites.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded observation; never counts as a failure.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    /// Records a pass/fail check; `witness` is the first counterexample.
    pub fn check(&mut self, name: impl Into<String>, witness: Option<String>) {
        let status = if witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            witness,
            detail: None,
        });
    }

    pub fn check_with(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        let status = if ok { Status::Pass } else { Status::Fail };
        let witness = (!ok).then(|| detail.clone());
        self.checks.push(Check {
            name: name.into(),
            status,
            witness,
            detail: Some(detail),
        });
    }

    pub fn finding(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Finding,
            witness: None,
            detail: Some(detail.into()),
        });
    }

    pub fn extend(&mut self, other: Report) {
        let prefix = other.name;
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}/{}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Runs `items` and returns the first failing item rendered as a witness.
pub fn first_failure<I, F>(items: I, mut ok: F) -> Option<String>
where
    I: IntoIterator,
    I::Item: std::fmt::Debug,
    F: FnMut(&I::Item) -> bool,
{
    items.into_iter().find(|x| !ok(x)).map(|x| format!("{x:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn findings_do_not_fail() {
        let mut r = Report::new("demo");
        r.check("ok", None);
        r.finding("note", "something");
        assert!(r.passed());
        r.check("bad", Some("x=3".into()));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(first_failure(1..10, |x| *x < 4), Some("4".into()));
    }
}
