//! Verification reports and their JSON, CSV and plain-text renderings.
//!
//! Reports are reproducible byte for byte: records follow graph enumeration
//! order and timing fields stay `null` unless timing was requested.

use std::fmt::Write as _;

use serde::Serialize;

use crate::game::Configuration;
use crate::graph::VertexId;
use crate::solver::ExtendedCount;

/// Both pebbling numbers of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    /// `None` when the computation failed; see the report's failures.
    pub pi: Option<ExtendedCount>,
    pub pi_s: Option<ExtendedCount>,
    pub equal: bool,
    /// A configuration of `pi - 1` pebbles that cannot reach its target.
    pub witness_config: Option<Configuration>,
    pub witness_target: Option<VertexId>,
    pub elapsed_ms: Option<u64>,
    /// Inequality here is a known, expected outcome (`K2`).
    #[serde(skip)]
    pub expected_exception: bool,
    #[serde(skip)]
    pub problems: Vec<String>,
}

impl GraphRecord {
    pub fn passed(&self) -> bool {
        self.problems.is_empty() && (self.equal != self.expected_exception)
    }
}

/// Outcome of one exhaustive property check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub scope: String,
    pub cases: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, scope: impl Into<String>) -> CheckReport {
        CheckReport {
            name: name.into(),
            scope: scope.into(),
            cases: 0,
            passed: true,
            counterexample: None,
        }
    }

    /// Records a failure; only the first counterexample is kept.
    pub fn fail(&mut self, counterexample: impl Into<String>) {
        if self.passed {
            self.passed = false;
            self.counterexample = Some(counterexample.into());
        }
    }

    /// Folds `other` in, keeping this report's name and scope.
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        if let Some(c) = other.counterexample.filter(|_| !other.passed) {
            self.fail(c);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub scope: String,
    pub pass: bool,
    pub records: Vec<GraphRecord>,
    pub checks: Vec<CheckReport>,
    pub failures: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    /// Recomputes `failures` and `pass` from the records and checks.
    pub fn finalize(&mut self) {
        let mut failures = Vec::new();
        for r in &self.records {
            for p in &r.problems {
                failures.push(format!("{}: {p}", r.graph6));
            }
            if r.problems.is_empty() && !r.passed() {
                let (pi, pis) = (fmt_opt(r.pi), fmt_opt(r.pi_s));
                failures.push(if r.expected_exception {
                    format!("{}: expected pi_s != pi, got {pis} = {pi}", r.graph6)
                } else {
                    format!("{}: pi_s = {pis} differs from pi = {pi}", r.graph6)
                });
            }
        }
        for c in self.checks.iter().filter(|c| !c.passed) {
            let example = c
                .counterexample
                .as_deref()
                .unwrap_or("no counterexample recorded");
            failures.push(format!("{} failed: {example}", c.name));
        }
        self.pass = failures.is_empty();
        self.failures = failures;
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per graph record, header included.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "graph6",
            "n",
            "pi",
            "pi_s",
            "equal",
            "witness_config",
            "witness_target",
            "elapsed_ms",
        ])
        .expect("in-memory write");
        for r in &self.records {
            w.write_record([
                r.graph6.clone(),
                r.n.to_string(),
                fmt_opt(r.pi),
                fmt_opt(r.pi_s),
                r.equal.to_string(),
                r.witness_config
                    .as_ref()
                    .map(|c| c.to_string())
                    .unwrap_or_default(),
                r.witness_target.map(|v| v.to_string()).unwrap_or_default(),
                r.elapsed_ms.map(|t| t.to_string()).unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scope: {}", self.scope);
        let _ = writeln!(
            out,
            "{:<10} {:>2} {:>9} {:>9}  {:<6} blocking",
            "graph6", "n", "pi", "pi_s", "equal"
        );
        for r in &self.records {
            let blocking = match (&r.witness_config, r.witness_target) {
                (Some(c), Some(v)) => format!("{c} -> {v}"),
                _ => "-".to_string(),
            };
            let note = if r.expected_exception {
                "  (expected exception)"
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "{:<10} {:>2} {:>9} {:>9}  {:<6} {blocking}{note}",
                r.graph6,
                r.n,
                fmt_opt(r.pi),
                fmt_opt(r.pi_s),
                r.equal
            );
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "[{status}] {} ({}, {} cases)",
                c.name, c.scope, c.cases
            );
            if let Some(ex) = c.counterexample.as_ref().filter(|_| !c.passed) {
                let _ = writeln!(out, "       counterexample: {ex}");
            }
        }
        for f in &self.failures {
            let _ = writeln!(out, "failure: {f}");
        }
        let _ = writeln!(out, "overall: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

fn fmt_opt(v: Option<ExtendedCount>) -> String {
    v.map_or_else(|| "error".to_string(), |v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(pi: u64, pi_s: u64, expected_exception: bool) -> GraphRecord {
        GraphRecord {
            graph6: "A_".into(),
            n: 2,
            pi: Some(ExtendedCount::Finite(pi)),
            pi_s: Some(ExtendedCount::Finite(pi_s)),
            equal: pi == pi_s,
            witness_config: Some(Configuration::new(vec![0, 1]).unwrap()),
            witness_target: Some(VertexId(0)),
            elapsed_ms: None,
            expected_exception,
            problems: vec![],
        }
    }

    fn report(records: Vec<GraphRecord>) -> VerificationReport {
        let mut r = VerificationReport {
            scope: "test".into(),
            pass: false,
            records,
            checks: vec![],
            failures: vec![],
            elapsed_ms: None,
        };
        r.finalize();
        r
    }

    #[test]
    fn exceptions_pass_only_when_unequal() {
        assert!(report(vec![record(2, 3, true)]).pass);
        assert!(!report(vec![record(2, 2, true)]).pass);
        assert!(!report(vec![record(4, 5, false)]).pass);
    }

    #[test]
    fn json_field_names() {
        let json = report(vec![record(2, 3, true)]).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let rec = &v["records"][0];
        let mut keys: Vec<&str> = rec
            .as_object()
            .unwrap()
            .keys()
            .map(|k| k.as_str())
            .collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            [
                "elapsed_ms",
                "equal",
                "graph6",
                "n",
                "pi",
                "pi_s",
                "witness_config",
                "witness_target"
            ]
        );
        assert_eq!(rec["witness_config"], "0,1");
        assert_eq!(rec["pi_s"], 3);
    }

    #[test]
    fn csv_quotes_configurations() {
        let csv = report(vec![record(2, 3, true)]).to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("graph6,n,pi,pi_s,equal,witness_config,witness_target,elapsed_ms")
        );
        assert_eq!(lines.next(), Some("A_,2,2,3,false,\"0,1\",0,"));
    }

    #[test]
    fn absorb_keeps_first_counterexample() {
        let mut total = CheckReport::new("x", "all");
        let mut a = CheckReport::new("x", "a");
        a.cases = 3;
        let mut b = CheckReport::new("x", "b");
        b.cases = 2;
        b.fail("first");
        let mut c = CheckReport::new("x", "c");
        c.fail("second");
        total.absorb(a);
        total.absorb(b);
        total.absorb(c);
        assert_eq!(total.cases, 5);
        assert!(!total.passed);
        assert_eq!(total.counterexample.as_deref(), Some("first"));
    }
}
