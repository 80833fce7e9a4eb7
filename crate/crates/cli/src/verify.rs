//! The verification harness: the published tables, pinch numbers and closed
//! forms, the two corollaries relating family members, and the full
//! counterexample reports. Failures are collected as data.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use torus_pinch::{
    closed_form_step, counterexample_report, family_knot, pinch_sequence, verify_corollary_j_to_k,
    verify_k_independence, Family, FamilyId, TorusKnot,
};

use crate::report::{ReportDocument, Status};
use crate::tables::{J_ROWS, K_ROWS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Tables,
    Corollaries,
    All,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Tables => "tables",
            Target::Corollaries => "corollaries",
            Target::All => "all",
        }
    }

    pub fn default_max_n(self) -> u64 {
        match self {
            Target::Tables => 5,
            Target::Corollaries | Target::All => 50,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub name: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
    pub summary: String,
}

impl Section {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            violations: Vec::new(),
            summary: String::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(detail());
        }
    }

    fn finish(mut self) -> Self {
        if self.summary.is_empty() {
            self.summary = format!(
                "{}/{} checks pass",
                self.checked - self.violations.len(),
                self.checked
            );
        }
        self
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "checked": self.checked,
            "violations": self.violations,
            "summary": self.summary,
        })
    }
}

fn member(family: Family, n: u64) -> Option<TorusKnot> {
    FamilyId::new(family, n)
        .ok()
        .and_then(|id| family_knot(id).ok())
}

fn row_matches(family: Family, n: u64, chain: &[(i128, i128)]) -> Result<(), String> {
    let start = member(family, n).ok_or_else(|| format!("{family}_{n}: cannot build knot"))?;
    let seq = pinch_sequence(&start).map_err(|e| format!("{family}_{n}: {e}"))?;
    let got: Vec<(i128, i128)> = seq.knots().map(|k| (*k.p(), *k.q())).collect();
    if got == chain {
        Ok(())
    } else {
        Err(format!("{family}_{n}: expected {chain:?}, got {got:?}"))
    }
}

/// Compares every published row with `n <= max_n` against the engine.
pub fn verify_tables(max_n: u64) -> Section {
    let mut section = Section::new("tables");
    let mut counts = Vec::new();
    for (family, rows) in [(Family::K, K_ROWS), (Family::J, J_ROWS)] {
        let (mut matched, mut total) = (0, 0);
        for &(n, chain) in rows.iter().filter(|(n, _)| *n <= max_n) {
            total += 1;
            let outcome = row_matches(family, n, chain);
            if outcome.is_ok() {
                matched += 1;
            }
            section.record(outcome.is_ok(), || outcome.unwrap_err());
        }
        counts.push(format!("{family}: {matched}/{total} rows match"));
    }
    section.summary = counts.join(", ");
    section.finish()
}

fn family_members(max_n: u64) -> impl Iterator<Item = (Family, u64)> {
    [Family::K, Family::J]
        .into_iter()
        .flat_map(move |family| (family.min_nontrivial_n()..=max_n).map(move |n| (family, n)))
}

/// Pinch number `2n` for each member, and the closed form for the `k`-th
/// knot agreeing with the engine at every `0 <= k <= 2n`.
pub fn verify_pinch_numbers_and_closed_form(max_n: u64) -> (Section, Section) {
    let mut numbers = Section::new("pinch_numbers");
    let mut closed = Section::new("closed_form");
    for (family, n) in family_members(max_n) {
        let Some(start) = member(family, n) else {
            numbers.record(false, || format!("{family}_{n}: cannot build knot"));
            continue;
        };
        let seq = match pinch_sequence(&start) {
            Ok(seq) => seq,
            Err(e) => {
                numbers.record(false, || format!("{family}_{n}: {e}"));
                continue;
            }
        };
        let expected = 2 * n as usize;
        numbers.record(seq.pinch_number() == expected, || {
            format!(
                "{family}_{n}: pinch number {}, expected {expected}",
                seq.pinch_number()
            )
        });
        for (k, knot) in seq.knots().enumerate() {
            let formula = closed_form_step::<i128>(family, n, k as u64);
            closed.record(formula.as_ref().is_ok_and(|f| f.same_knot(knot)), || {
                format!("{family}_{n} step {k}: engine {knot}, closed form {formula:?}")
            });
        }
    }
    (numbers.finish(), closed.finish())
}

pub fn verify_j_to_k(max_n: u64) -> Section {
    let mut section = Section::new("corollary_j_to_k");
    for n in 2..=max_n {
        let outcome = verify_corollary_j_to_k::<i128>(n);
        section.record(outcome == Ok(true), || {
            format!(
                "four pinches on J_{n} do not reach K_{}: {outcome:?}",
                n - 2
            )
        });
    }
    section.finish()
}

pub fn verify_independence(max_n: u64) -> Section {
    let mut section = Section::new("k_independence");
    match verify_k_independence::<i128>(max_n) {
        Ok(violations) => {
            section.checked = max_n as usize;
            section.violations = violations
                .into_iter()
                .map(|(m, n)| format!("K_{n} appears in the pinch sequence of K_{m}"))
                .collect();
        }
        Err(e) => section.record(false, || e.to_string()),
    }
    section.finish()
}

pub fn verify_reports(max_n: u64) -> Section {
    let mut section = Section::new("counterexample_reports");
    for (family, n) in family_members(max_n) {
        let outcome = FamilyId::new(family, n).and_then(counterexample_report::<i128>);
        section.record(outcome.is_ok(), || {
            format!("{family}_{n}: {}", outcome.unwrap_err())
        });
    }
    section.finish()
}

pub fn run_target(target: Target, max_n: u64) -> Vec<Section> {
    match target {
        Target::Tables => vec![verify_tables(max_n)],
        Target::Corollaries => vec![verify_j_to_k(max_n), verify_independence(max_n)],
        Target::All => {
            let (numbers, closed) = verify_pinch_numbers_and_closed_form(max_n);
            vec![
                verify_tables(max_n),
                numbers,
                closed,
                verify_j_to_k(max_n),
                verify_independence(max_n),
                verify_reports(max_n),
            ]
        }
    }
}

pub fn sections_document(target: Target, max_n: u64, sections: &[Section]) -> ReportDocument {
    let violation_count: usize = sections.iter().map(|s| s.violations.len()).sum();
    let status = if violation_count == 0 {
        Status::Ok
    } else {
        Status::Violation
    };
    let mut inputs = BTreeMap::new();
    inputs.insert("target".to_string(), json!(target.name()));
    inputs.insert("max_n".to_string(), json!(max_n));
    let results = json!({
        "sections": sections.iter().map(Section::to_json).collect::<Vec<_>>(),
        "violation_count": violation_count,
    });
    ReportDocument::new("verify", inputs, results, status)
}

/// Every check up to `max_n`, aggregated into one document.
pub fn verify_all(max_n: u64) -> ReportDocument {
    sections_document(Target::All, max_n, &run_target(Target::All, max_n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_summary() {
        let s = verify_tables(5);
        assert!(s.violations.is_empty(), "{:?}", s.violations);
        assert_eq!(s.summary, "K: 5/5 rows match, J: 4/4 rows match");
        assert_eq!(
            verify_tables(2).summary,
            "K: 2/2 rows match, J: 1/1 rows match"
        );
    }

    #[test]
    fn small_ranges_pass() {
        for max_n in [2, 5] {
            let doc = verify_all(max_n);
            assert_eq!(doc.status, Status::Ok, "{}", doc.to_json());
        }
    }

    #[test]
    fn violations_map_to_exit_code_one() {
        let broken = Section {
            name: "tables",
            checked: 1,
            violations: vec!["K_1: mismatch".to_string()],
            summary: String::new(),
        };
        let doc = sections_document(Target::Tables, 5, &[broken]);
        assert_eq!(doc.status, Status::Violation);
        assert_eq!(doc.status.exit_code(), 1);
        assert_eq!(doc.results["violation_count"], 1);
    }

    #[test]
    fn a_wrong_row_is_a_violation() {
        assert!(row_matches(Family::K, 1, &[(4, 9), (2, 5), (0, 1)]).is_ok());
        assert!(row_matches(Family::K, 1, &[(4, 9), (2, 7), (0, 1)]).is_err());
        assert!(row_matches(Family::K, 1, &[(4, 9), (5, 2), (0, 1)]).is_err());
    }
}
