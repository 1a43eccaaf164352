//! Machine-readable results of a check.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub holds: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    #[serde(default)]
    pub witness: Option<Value>,
    /// Informational clauses do not affect the certificate verdict.
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub required: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tally: Option<Tally>,
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl Clause {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Clause {
            name: name.into(),
            pass,
            witness: None,
            required: true,
            tally: None,
        }
    }

    /// Passes iff there is no counterexample.
    pub fn from_failure<W: Serialize>(name: impl Into<String>, failure: Option<W>) -> Self {
        let pass = failure.is_none();
        Clause::new(name, pass).with_witness(failure)
    }

    pub fn with_witness<W: Serialize>(mut self, witness: Option<W>) -> Self {
        self.witness = witness.map(|w| serde_json::to_value(w).expect("witness serializes"));
        self
    }

    pub fn with_tally(mut self, holds: usize, total: usize) -> Self {
        self.tally = Some(Tally { holds, total });
        self
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    #[serde(rename = "loop")]
    pub loop_name: String,
    pub params: Value,
    pub pass: bool,
    pub clauses: Vec<Clause>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new<P: Serialize>(check: impl Into<String>, params: P) -> Self {
        Certificate {
            check: check.into(),
            loop_name: String::new(),
            params: serde_json::to_value(params).expect("params serialize"),
            pass: true,
            clauses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_loop(mut self, name: impl Into<String>) -> Self {
        self.loop_name = name.into();
        self
    }

    pub fn push(&mut self, clause: Clause) {
        if clause.required && !clause.pass {
            self.pass = false;
        }
        self.clauses.push(clause);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    /// Required clauses that failed.
    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.required && !c.pass)
    }

    /// Folds per-instance certificates into one. Clauses are matched by name;
    /// a merged clause passes iff every instance passed, carries a tally, and
    /// keeps the first failing instance as its witness.
    pub fn merge<P, I>(check: impl Into<String>, params: P, parts: I) -> Certificate
    where
        P: Serialize,
        I: IntoIterator<Item = (Value, Certificate)>,
    {
        let mut merged: Vec<(Clause, usize, usize)> = Vec::new();
        let mut notes = Vec::new();
        for (at, part) in parts {
            for c in part.clauses {
                let slot = match merged.iter().position(|(m, _, _)| m.name == c.name) {
                    Some(i) => i,
                    None => {
                        let fresh = Clause {
                            pass: true,
                            witness: None,
                            tally: None,
                            ..c.clone()
                        };
                        merged.push((fresh, 0, 0));
                        merged.len() - 1
                    }
                };
                let (m, holds, total) = &mut merged[slot];
                *total += 1;
                if c.pass {
                    *holds += 1;
                } else if m.pass {
                    m.pass = false;
                    m.witness = Some(serde_json::json!({ "at": at, "witness": c.witness }));
                }
            }
            if notes.len() < 8 {
                notes.extend(part.notes.into_iter().map(|n| format!("{at}: {n}")));
            }
        }
        let mut out = Certificate::new(check, params);
        for (c, holds, total) in merged {
            out.push(c.with_tally(holds, total));
        }
        notes.truncate(8);
        out.notes = notes;
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = write!(out, "{verdict} {}", self.check);
        if !self.loop_name.is_empty() {
            let _ = write!(out, " on {}", self.loop_name);
        }
        if !self.params.is_null() {
            let _ = write!(out, " {}", self.params);
        }
        out.push('\n');
        for c in &self.clauses {
            let mark = match (c.pass, c.required) {
                (true, _) => "ok  ",
                (false, true) => "FAIL",
                (false, false) => "no  ",
            };
            let _ = write!(out, "  [{mark}] {}", c.name);
            if let Some(t) = c.tally {
                let _ = write!(out, " ({}/{})", t.holds, t.total);
            }
            if let Some(w) = &c.witness {
                let _ = write!(out, " witness {w}");
            }
            if !c.required {
                out.push_str(" (informational)");
            }
            out.push('\n');
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_ignores_informational_clauses() {
        let mut c = Certificate::new("demo", [1, 0, 0]);
        c.push(Clause::new("a", true));
        c.push(Clause::new("b", false).informational());
        assert!(c.pass);
        c.push(Clause::from_failure("c", Some((0, 1))));
        assert!(!c.pass);
        assert_eq!(c.failures().count(), 1);
    }

    #[test]
    fn json_round_trip() {
        let mut c = Certificate::new("demo", serde_json::json!({"x": 1})).with_loop("z3");
        c.push(Clause::new("a", true).with_tally(3, 3));
        c.push(Clause::from_failure("b", Some([1, 2])).informational());
        let text = c.to_json();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["loop"], "z3");
        assert!(v["clauses"][0].get("required").is_none());
        assert_eq!(v["clauses"][1]["required"], false);
    }
}
