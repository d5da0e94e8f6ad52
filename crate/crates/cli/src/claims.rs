//! Claim manifests: TOML files of `[[claim]]` tables, each naming a graph,
//! an operation with arguments, and the value the operation should yield.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cache::{cache_key, graph_hash, Cache};
use crate::error::{CliError, Result};
use crate::ops::{run_op, Observation, OPERATIONS};
use crate::report::{ReportDocument, Summary};
use crate::spec::GraphSpec;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimSpec {
    pub id: String,
    /// Acceptance criterion this claim contributes to, if any.
    pub criterion: Option<u32>,
    pub statement: String,
    /// A graph descriptor; corpus operations leave it out.
    pub graph: Option<String>,
    pub op: String,
    #[serde(default)]
    pub args: toml::Table,
    pub expect: toml::Value,
    pub time_limit_s: Option<f64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(rename = "claim", default)]
    pub claims: Vec<ClaimSpec>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        let m: Manifest = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    /// Unknown operations, duplicate ids and bad descriptors are rejected
    /// before anything runs.
    fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for c in &self.claims {
            if !seen.insert(c.id.as_str()) {
                return Err(CliError::Config(format!("duplicate claim id {:?}", c.id)));
            }
            if !OPERATIONS.contains(&c.op.as_str()) {
                return Err(CliError::Config(format!("claim {:?}: unknown operation {:?}", c.id, c.op)));
            }
            if let Some(g) = &c.graph {
                g.parse::<GraphSpec>().map_err(|e| CliError::Config(format!("claim {:?}: {e}", c.id)))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    BudgetExceeded,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub criterion: Option<u32>,
    pub statement: String,
    pub graph: Option<String>,
    pub operation: String,
    pub arguments: Value,
    pub expected: Value,
    pub observed: Value,
    pub verdict: Verdict,
    pub witness: Option<Value>,
    pub checked: u64,
    pub details: Option<Value>,
    pub time_limit_s: Option<f64>,
    pub runtime_ms: u64,
}

pub struct RunOptions<'a> {
    pub jobs: usize,
    pub budget: u64,
    pub cache: Option<&'a Cache>,
}

fn observe(claim: &ClaimSpec, budget: u64, cache: Option<&Cache>) -> Result<Observation> {
    let spec = claim.graph.as_deref().map(str::parse::<GraphSpec>).transpose()?;
    let graph = spec.as_ref().map(GraphSpec::build).transpose()?;
    let key_args = json!({ "graph": claim.graph, "args": claim.args, "budget": budget });
    let key = cache_key(graph.as_ref().map(graph_hash).as_deref(), &claim.op, &key_args);
    if let Some(hit) = cache.and_then(|c| c.get(&key)) {
        if let Ok(obs) = serde_json::from_value::<Observation>(hit) {
            return Ok(obs);
        }
    }
    let obs = run_op(&claim.op, spec.as_ref(), graph.as_ref(), &claim.args, budget)?;
    if let Some(c) = cache {
        c.insert(&key, serde_json::to_value(&obs).expect("observations serialize"))?;
    }
    Ok(obs)
}

pub fn run_claim(claim: &ClaimSpec, budget: u64, cache: Option<&Cache>) -> Result<ClaimResult> {
    let start = Instant::now();
    let obs = observe(claim, budget, cache)?;
    let expected = serde_json::to_value(&claim.expect).expect("TOML values serialize");
    let verdict = if obs.budget_exceeded {
        Verdict::BudgetExceeded
    } else if obs.value == expected {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let witness = match (verdict, obs.witness) {
        (Verdict::Fails, None) => Some(json!({ "observed": obs.value })),
        (_, w) => w,
    };
    Ok(ClaimResult {
        claim_id: claim.id.clone(),
        criterion: claim.criterion,
        statement: claim.statement.clone(),
        graph: claim.graph.clone(),
        operation: claim.op.clone(),
        arguments: serde_json::to_value(&claim.args).expect("TOML values serialize"),
        expected,
        observed: obs.value,
        verdict,
        witness,
        checked: obs.checked,
        details: obs.details,
        time_limit_s: claim.time_limit_s,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every claim on a pool of `jobs` threads (sweeps inside a claim use
/// the same pool) and returns the results in manifest order.
pub fn run_manifest(manifest: &Manifest, label: &str, opts: &RunOptions) -> Result<ReportDocument> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} worker threads: {e}", opts.jobs)))?;
    let results: Vec<Result<ClaimResult>> =
        pool.install(|| manifest.claims.par_iter().map(|c| run_claim(c, opts.budget, opts.cache)).collect());
    let claims = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_owned(),
        manifest: label.to_owned(),
        summary: Summary::of(&claims),
        claims,
    })
}
