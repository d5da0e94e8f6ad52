//! Runs the bundled claim manifest and prints one line per acceptance
//! criterion. A criterion passes when all of its claims hold and each one
//! finishes inside its time limit.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use monophonic_cli::claims::{run_manifest, ClaimResult, Manifest, RunOptions, Verdict};
use monophonic_core::engine::DEFAULT_BUDGET;

fn claim_ok(c: &ClaimResult) -> Result<(), String> {
    if c.verdict != Verdict::Holds {
        return Err(format!(
            "{}: {} (expected {}, observed {}, witness {})",
            c.claim_id,
            c.verdict,
            c.expected,
            c.observed,
            c.witness.as_ref().map_or("-".into(), |w| w.to_string())
        ));
    }
    match c.time_limit_s {
        Some(limit) if c.runtime_ms as f64 > limit * 1000.0 => {
            Err(format!("{}: took {} ms, limit {limit} s", c.claim_id, c.runtime_ms))
        }
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("claims/paper-claims.toml");
    let manifest = Manifest::load(&path).expect("bundled manifest loads");
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let start = Instant::now();
    let report = run_manifest(&manifest, "paper-claims", &RunOptions { jobs, budget: DEFAULT_BUDGET, cache: None })
        .expect("manifest runs");

    let mut by_criterion: BTreeMap<u32, Vec<&ClaimResult>> = BTreeMap::new();
    for c in &report.claims {
        by_criterion.entry(c.criterion.expect("every bundled claim names a criterion")).or_default().push(c);
    }
    let mut failed = 0;
    for ac in 1..=15 {
        let claims = by_criterion.get(&ac).map(Vec::as_slice).unwrap_or_default();
        let problems: Vec<String> = claims.iter().filter_map(|c| claim_ok(c).err()).collect();
        let ms: u64 = claims.iter().map(|c| c.runtime_ms).sum();
        if claims.is_empty() {
            failed += 1;
            println!("[FAIL] AC {ac}: no claims in the manifest");
        } else if problems.is_empty() {
            let checked: u64 = claims.iter().map(|c| c.checked).sum();
            println!("[PASS] AC {ac}: {} claim(s), {checked} instance(s) checked, {ms} ms", claims.len());
        } else {
            failed += 1;
            println!("[FAIL] AC {ac}: {}", problems.join("; "));
        }
    }
    println!("{} of 15 criteria passed on {jobs} worker(s) in {:.1} s", 15 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
