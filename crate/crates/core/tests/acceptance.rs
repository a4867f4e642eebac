//! Runs AC1–AC7 and prints PASS/FAIL for each.
//!
//! AC2 compares against published H² counts that disagree with exact
//! computation. It is expected to print FAIL; the run only fails if the set
//! of disagreeing rows differs from the one predicted by an independent
//! `dim Z² - dim A²` count.

use dualmock::algcore::fingerprint;
use dualmock::shell::catalog;
use dualmock::shell::claimed::H2_GENERATORS;
use dualmock::shell::report::Verdict;
use dualmock::shell::verify::{criteria, naive_cocycle_dim, verify_all};
use std::process::ExitCode;

fn predicted_ac2_mismatches() -> Vec<String> {
    H2_GENERATORS
        .iter()
        .filter(|(id, gens)| {
            let a = catalog::get(id).unwrap().algebra;
            naive_cocycle_dim(&a) - fingerprint(&a).lcs_dim(2) != gens.len()
        })
        .map(|(id, _)| format!("{id} dim H2"))
        .collect()
}

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for (name, run) in criteria() {
        let s = run();
        let title = s.title.trim_start_matches(name).trim();
        println!("{name}: {} ({title})", if s.passed { "PASS" } else { "FAIL" });
        for f in s.findings.iter().filter(|f| !f.verdict.ok()) {
            let claimed = f.claimed.as_deref().map(|c| format!(" (claimed {c})")).unwrap_or_default();
            println!("    {} = {}{claimed}  {}", f.label, f.computed, f.verdict);
        }
        if name == "AC2" {
            let counts: Vec<String> = s
                .findings
                .iter()
                .filter(|f| f.label.ends_with("dim H2") && f.verdict != Verdict::Match)
                .map(|f| f.label.clone())
                .collect();
            if s.passed || counts != predicted_ac2_mismatches() {
                unexpected.push(name);
            }
        } else if !s.passed {
            unexpected.push(name);
        }
    }
    let a = verify_all().to_text();
    let b = verify_all().to_text();
    println!("verify-all deterministic: {}", if a == b { "PASS" } else { "FAIL" });
    if a != b {
        unexpected.push("determinism");
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcomes: {unexpected:?}");
        ExitCode::FAILURE
    }
}
