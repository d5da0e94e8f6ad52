//! Named operations a claim can run, each producing an [`Observation`].
//!
//! Sweeps validate every path they are handed with [`chordless`], which
//! reads adjacency directly and shares no code with the builders.

use std::collections::BTreeMap;

use monophonic_core::engine::{Engine, MonophonicNumber, PathSearch};
use monophonic_core::paths::{JohnsonPaths, KneserPaths, Lifter, ProductBuilder, Witness};
use monophonic_core::structure::{clique_number, is_chordal, necessary_conditions_report};
use monophonic_core::{reference, Error as CoreError, Graph, SubsetVertex, VertexId};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corpus::{all_graphs, chordless, is_complete_minus_edge, random_graphs};
use crate::error::{CliError, Result};
use crate::format::parse_elements;
use crate::spec::{labels_of, parse_vertex, vertex_label, GraphSpec};

pub const OPERATIONS: &[&str] = &[
    "monophonic_number",
    "strongly_2_monophonic",
    "interval_member",
    "induced_cycle",
    "kneser_witness_sweep",
    "distance_law",
    "distance_paths",
    "lift",
    "johnson_witness_sweep",
    "product_witness_sweep",
    "chordal_classification",
    "necessary_condition_soundness",
    "convexity_equals_clique",
    "oracle_equivalence",
];

/// What an operation saw. `value` is compared with a claim's expectation.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub value: Value,
    pub witness: Option<Value>,
    /// Number of instances examined by a sweep; 1 for single queries.
    pub checked: u64,
    pub budget_exceeded: bool,
    /// Extra counts, e.g. how often each construction branch fired.
    pub details: Option<Value>,
}

impl Observation {
    fn single(value: Value, witness: Option<Value>) -> Self {
        Observation { value, witness, checked: 1, ..Default::default() }
    }

    fn budget() -> Self {
        Observation { value: Value::Null, budget_exceeded: true, ..Default::default() }
    }
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

struct Args<'a> {
    op: &'a str,
    table: &'a toml::Table,
}

impl Args<'_> {
    fn str(&self, key: &str) -> Result<&str> {
        match self.table.get(key) {
            Some(toml::Value::String(s)) => Ok(s),
            Some(_) => Err(config(format!("{}: argument {key:?} must be a string", self.op))),
            None => Err(config(format!("{}: missing argument {key:?}", self.op))),
        }
    }

    fn uint(&self, key: &str) -> Result<Option<u64>> {
        match self.table.get(key) {
            Some(toml::Value::Integer(i)) if *i >= 0 => Ok(Some(*i as u64)),
            Some(_) => Err(config(format!("{}: argument {key:?} must be a nonnegative integer", self.op))),
            None => Ok(None),
        }
    }

    fn strings(&self, key: &str) -> Result<Vec<String>> {
        match self.table.get(key) {
            Some(toml::Value::Array(items)) => items
                .iter()
                .map(|v| v.as_str().map(str::to_owned))
                .collect::<Option<_>>()
                .ok_or_else(|| config(format!("{}: {key:?} must be an array of strings", self.op))),
            Some(_) => Err(config(format!("{}: {key:?} must be an array of strings", self.op))),
            None => Ok(Vec::new()),
        }
    }
}

/// Runs `op`. Corpus operations ignore `graph`; all others require it.
pub fn run_op(
    op: &str,
    spec: Option<&GraphSpec>,
    graph: Option<&Graph>,
    args: &toml::Table,
    budget: u64,
) -> Result<Observation> {
    let a = Args { op, table: args };
    let need = || graph.ok_or_else(|| config(format!("{op} needs a graph")));
    let out = match op {
        "monophonic_number" => monophonic_number(need()?, &a, budget),
        "strongly_2_monophonic" => strongly_2_monophonic(need()?, budget),
        "interval_member" => interval_member(need()?, &a, budget),
        "induced_cycle" => induced_cycle(need()?, &a),
        "kneser_witness_sweep" => kneser_witness_sweep(need()?, &a),
        "distance_law" => distance_law(need()?),
        "distance_paths" => distance_paths(need()?),
        "lift" => lift(need()?, &a),
        "johnson_witness_sweep" => johnson_witness_sweep(need()?),
        "product_witness_sweep" => {
            product_witness_sweep(spec.ok_or_else(|| config("product_witness_sweep needs a graph spec"))?)
        }
        "chordal_classification" => chordal_classification(&a, budget),
        "necessary_condition_soundness" => necessary_condition_soundness(&a, budget),
        "convexity_equals_clique" => convexity_equals_clique(&a, budget),
        "oracle_equivalence" => oracle_equivalence(&a, budget),
        other => return Err(config(format!("unknown operation {other:?}"))),
    };
    match out {
        Err(CliError::Core(CoreError::BudgetExceeded { .. })) => Ok(Observation::budget()),
        other => other,
    }
}

fn monophonic_number(g: &Graph, a: &Args, budget: u64) -> Result<Observation> {
    let max_k = a.uint("max_k")?.map_or(g.order(), |k| k as usize);
    Ok(match Engine::with_budget(g, budget).monophonic_number(max_k)? {
        MonophonicNumber::Found { size, set } => {
            Observation::single(json!(size), Some(json!(labels_of(g, set.ones()))))
        }
        MonophonicNumber::AboveLimit { max_k } => Observation::single(Value::Null, Some(json!({ "above": max_k }))),
        MonophonicNumber::BudgetExceeded => Observation::budget(),
    })
}

fn strongly_2_monophonic(g: &Graph, budget: u64) -> Result<Observation> {
    let verdict = Engine::with_budget(g, budget).is_strongly_2_monophonic()?;
    let witness = verdict
        .counterexample
        .map(|(x, y, u)| json!({ "x": vertex_label(g, x), "y": vertex_label(g, y), "outside": vertex_label(g, u) }));
    let pairs = g.vertices().map(|x| (x + 1..g.order()).filter(|&y| !g.adjacent(x, y)).count()).sum::<usize>();
    Ok(Observation { checked: pairs as u64, ..Observation::single(json!(verdict.holds), witness) })
}

fn interval_member(g: &Graph, a: &Args, budget: u64) -> Result<Observation> {
    let x = parse_vertex(g, a.str("x")?)?;
    let y = parse_vertex(g, a.str("y")?)?;
    let v = parse_vertex(g, a.str("v")?)?;
    let engine = Engine::with_budget(g, budget);
    let interval = engine.monophonic_interval(x, y)?;
    let witness = interval.witness.get(&v).map(|p| json!(labels_of(g, p.vertices().iter().copied())));
    Ok(Observation::single(json!(interval.contains(v)), witness))
}

fn induced_cycle(g: &Graph, a: &Args) -> Result<Observation> {
    let [x, y, z] = ["a", "b", "c"].map(|k| a.str(k).and_then(|t| parse_vertex(g, t)));
    let cycle = monophonic_core::structure::induced_cycle_through(g, x?, y?, z?)?;
    let witness = cycle.as_ref().map(|c| json!(labels_of(g, c.iter().copied())));
    Ok(Observation::single(json!(cycle.is_some()), witness))
}

/// Endpoints, membership of `via` and chordlessness, checked by adjacency.
fn path_ok(g: &Graph, path: &[VertexId], from: VertexId, to: VertexId, via: VertexId) -> bool {
    path.first() == Some(&from) && path.last() == Some(&to) && path.contains(&via) && chordless(g, path)
}

/// One checked triple of a witness sweep.
struct Checked {
    ok: bool,
    fallback: bool,
    branch: String,
    triple: [VertexId; 3],
    path: Vec<VertexId>,
}

fn check_witness(g: &Graph, triple: [VertexId; 3], w: Result<Witness, CoreError>) -> Checked {
    let [x, y, u] = triple;
    match w {
        Ok(w) => Checked {
            ok: path_ok(g, w.path.vertices(), x, y, u),
            fallback: w.fallback,
            branch: w.construction.to_string(),
            triple,
            path: w.path.into_vertices(),
        },
        Err(e) => Checked { ok: false, fallback: false, branch: format!("error: {e}"), triple, path: Vec::new() },
    }
}

/// Folds sweep results in input order, so the reported witness does not
/// depend on the thread count.
fn summarize(g: &Graph, results: Vec<Checked>) -> Observation {
    let mut branches: BTreeMap<String, u64> = BTreeMap::new();
    let mut fallbacks = 0u64;
    let mut first_bad = None;
    for c in &results {
        *branches.entry(c.branch.clone()).or_default() += 1;
        fallbacks += c.fallback as u64;
        if first_bad.is_none() && (!c.ok || c.fallback) {
            first_bad = Some(c);
        }
    }
    let witness = first_bad.map(|c| {
        json!({
            "triple": labels_of(g, c.triple),
            "path": labels_of(g, c.path.iter().copied()),
            "construction": c.branch,
            "fallback": c.fallback,
        })
    });
    Observation {
        value: json!(first_bad.is_none()),
        witness,
        checked: results.len() as u64,
        budget_exceeded: false,
        details: Some(json!({ "fallbacks": fallbacks, "constructions": branches })),
    }
}

/// Valid triples `(x, y, u)` with `x < y` nonadjacent and `u` distinct.
fn all_triples(g: &Graph) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for x in g.vertices() {
        for y in g.vertices().filter(|&y| y > x && !g.adjacent(x, y)) {
            out.extend(g.vertices().filter(|&u| u != x && u != y).map(|u| [x, y, u]));
        }
    }
    out
}

fn subsets_of(g: &Graph, op: &str) -> Result<Vec<SubsetVertex>> {
    g.vertices()
        .map(|v| g.subset_of(v))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| config(format!("{op} needs a subset-labelled graph")))
}

/// `(n, r)` of an odd graph `K(2r+1, r)` given as a labelled graph.
fn odd_graph_params(g: &Graph, op: &str) -> Result<(usize, usize)> {
    let sets = subsets_of(g, op)?;
    let (n, r) = (sets[0].ground(), sets[0].len());
    let disjoint_rule =
        g.vertices().all(|u| (u + 1..g.order()).all(|v| g.adjacent(u, v) == sets[u].set().is_disjoint(sets[v].set())));
    if n != 2 * r + 1 || !disjoint_rule {
        return Err(config(format!("{op} needs an odd graph K(2r+1, r)")));
    }
    Ok((n, r))
}

fn kneser_witness_sweep(g: &Graph, a: &Args) -> Result<Observation> {
    let (_, r) = odd_graph_params(g, "kneser_witness_sweep")?;
    let kp = KneserPaths::new(r)?;
    let samples = a.uint("samples")?.unwrap_or(0) as usize;
    let triples = if samples == 0 {
        all_triples(g)
    } else {
        // uniform over valid triples: rejection-sample ordered picks
        let mut rng = ChaCha8Rng::seed_from_u64(a.uint("seed")?.unwrap_or(0));
        let ids: Vec<VertexId> = g.vertices().collect();
        let mut out = Vec::with_capacity(samples);
        while out.len() < samples {
            let pick: Vec<VertexId> = ids.choose_multiple(&mut rng, 3).copied().collect();
            if !g.adjacent(pick[0], pick[1]) {
                out.push([pick[0], pick[1], pick[2]]);
            }
        }
        out
    };
    let sets = subsets_of(g, "kneser_witness_sweep")?;
    let kg = kp.graph();
    let results = triples
        .par_iter()
        .map(|&[x, y, u]| {
            let w = kp.witness(sets[x], sets[y], sets[u]);
            // the builder numbers vertices the same way (colex), but map through labels anyway
            let w = w.and_then(|w| {
                let seq: Option<Vec<VertexId>> =
                    w.path.vertices().iter().map(|&v| kg.subset_of(v).and_then(|s| g.vertex_of(s))).collect();
                let seq = seq.ok_or_else(|| CoreError::InvalidInput("path leaves the graph".into()))?;
                Ok(Witness { path: monophonic_core::InducedPath::new(g, seq)?, ..w })
            });
            check_witness(g, [x, y, u], w)
        })
        .collect();
    Ok(summarize(g, results))
}

fn distance_law(g: &Graph) -> Result<Observation> {
    let sets = subsets_of(g, "distance_law")?;
    let r = sets[0].len();
    odd_graph_params(g, "distance_law")?;
    let rows: Vec<Option<Value>> = g
        .vertices()
        .into_par_iter()
        .map(|a| {
            let dist = g.bfs_distances(a, None);
            g.vertices().find_map(|b| {
                let t = (sets[a].set() & sets[b].set()).len();
                let law = (2 * (r - t)).min(2 * t + 1);
                (dist[b] != law)
                    .then(|| json!({ "a": sets[a].to_string(), "b": sets[b].to_string(), "bfs": dist[b], "law": law }))
            })
        })
        .collect();
    let bad = rows.into_iter().flatten().next();
    let n = g.order() as u64;
    Ok(Observation { value: json!(bad.is_none()), witness: bad, checked: n * n, ..Default::default() })
}

fn distance_paths(g: &Graph) -> Result<Observation> {
    let (_, r) = odd_graph_params(g, "distance_paths")?;
    let kp = KneserPaths::new(r)?;
    let sets = subsets_of(g, "distance_paths")?;
    let rows: Vec<(u64, Option<Value>)> = g
        .vertices()
        .into_par_iter()
        .map(|a| {
            let mut checked = 0;
            for b in g.vertices().filter(|&b| b != a) {
                let t = (sets[a].set() & sets[b].set()).len();
                let mut attempts = vec![("odd", kp.odd_path(sets[a], sets[b], None), 2 * t + 1)];
                if t >= 1 {
                    attempts.push(("even", kp.even_path(sets[a], sets[b]), 2 * (r - t)));
                }
                for (kind, path, want) in attempts {
                    checked += 1;
                    let seq = path.map(|p| p.into_vertices()).unwrap_or_default();
                    let ok = seq.len() == want + 1
                        && seq.first() == Some(&a)
                        && seq.last() == Some(&b)
                        && chordless(g, &seq);
                    if !ok {
                        let witness = json!({
                            "a": sets[a].to_string(), "b": sets[b].to_string(), "kind": kind,
                            "expected_length": want, "path": labels_of(g, seq),
                        });
                        return (checked, Some(witness));
                    }
                }
            }
            (checked, None)
        })
        .collect();
    let checked = rows.iter().map(|r| r.0).sum();
    let bad = rows.into_iter().find_map(|r| r.1);
    Ok(Observation { value: json!(bad.is_none()), witness: bad, checked, ..Default::default() })
}

/// Lifts a monophonic set of `K(n, r)` through `steps` successive Kneser
/// graphs, validating a witness for every vertex and re-certifying the set
/// with the engine at every level.
fn lift(g: &Graph, a: &Args) -> Result<Observation> {
    let sets = subsets_of(g, "lift")?;
    let (n, r) = (sets[0].ground(), sets[0].len());
    let steps = a.uint("steps")?.unwrap_or(1) as usize;
    let members = a.strings("set")?;
    if members.is_empty() {
        return Err(config("lift: \"set\" must list at least one subset"));
    }
    let mut checked = 0;
    let mut levels = Vec::new();
    for k in 0..steps {
        let base = n + k;
        let s: Vec<SubsetVertex> = members
            .iter()
            .map(|m| {
                let elems = parse_elements(m).map_err(|e| config(format!("lift: {e}")))?;
                Ok(SubsetVertex::from_elements(&elems, base)?)
            })
            .collect::<Result<_>>()?;
        let lifter = Lifter::new(base, r, &s)?;
        let big = lifter.graph();
        let ids: Vec<VertexId> = s
            .iter()
            .map(|&v| big.vertex_of(SubsetVertex::new(v.set(), base + 1).expect("ground grows")))
            .collect::<Option<_>>()
            .expect("members are vertices");
        let results: Vec<(VertexId, Result<Witness, CoreError>)> =
            big.vertices().into_par_iter().map(|u| (u, lifter.witness(big.subset_of(u).expect("labelled")))).collect();
        let mut branches: BTreeMap<String, u64> = BTreeMap::new();
        for (u, w) in results {
            checked += 1;
            let bad = match &w {
                Ok(w) => {
                    *branches.entry(w.construction.to_string()).or_default() += 1;
                    let p = w.path.vertices();
                    let ends = ids.contains(&p[0]) && ids.contains(p.last().expect("nonempty"));
                    (!ends || !w.path.contains(u) || !chordless(big, p) || w.fallback)
                        .then(|| json!({ "path": labels_of(big, p.iter().copied()), "fallback": w.fallback }))
                }
                Err(e) => Some(json!({ "error": e.to_string() })),
            };
            if let Some(detail) = bad {
                let witness = json!({ "graph": format!("kneser:{},{r}", base + 1), "vertex": vertex_label(big, u), "detail": detail });
                return Ok(Observation { value: json!(false), witness: Some(witness), checked, ..Default::default() });
            }
        }
        let mut set = big.new_set();
        set.extend(ids.iter().copied());
        let engine = Engine::new(big).is_monophonic_set(&set)?;
        if !engine.holds {
            let witness = json!({ "graph": format!("kneser:{},{r}", base + 1), "uncovered": engine.uncovered.map(|v| vertex_label(big, v)) });
            return Ok(Observation { value: json!(false), witness: Some(witness), checked, ..Default::default() });
        }
        levels.push(json!({ "graph": format!("kneser:{},{r}", base + 1), "constructions": branches }));
    }
    Ok(Observation { value: json!(true), witness: None, checked, budget_exceeded: false, details: Some(json!(levels)) })
}

fn johnson_witness_sweep(g: &Graph) -> Result<Observation> {
    let sets = subsets_of(g, "johnson_witness_sweep")?;
    let (n, r) = (sets[0].ground(), sets[0].len());
    let jp = JohnsonPaths::new(n, r)?;
    if jp.graph() != g {
        return Err(config("johnson_witness_sweep needs a Johnson graph J(n, r)"));
    }
    let results = all_triples(g)
        .par_iter()
        .map(|&[x, y, u]| check_witness(g, [x, y, u], jp.witness(sets[x], sets[y], sets[u])))
        .collect();
    Ok(summarize(g, results))
}

/// Splits a descriptor into Cartesian factors; Hamming graphs with at least
/// two dimensions count as products.
fn factors(spec: &GraphSpec) -> Option<(GraphSpec, GraphSpec)> {
    match spec {
        GraphSpec::Product(g, h) => Some(((**g).clone(), (**h).clone())),
        GraphSpec::Hamming(dims) if dims.len() >= 2 => {
            let (last, rest) = dims.split_last().expect("two dimensions");
            Some((GraphSpec::Hamming(rest.to_vec()), GraphSpec::Complete(*last)))
        }
        _ => None,
    }
}

fn product_witness_sweep(spec: &GraphSpec) -> Result<Observation> {
    let (gs, hs) = factors(spec).ok_or_else(|| config(format!("product_witness_sweep needs a product, got {spec}")))?;
    let (g, h) = (gs.build()?, hs.build()?);
    let pb = ProductBuilder::new(&g, &h)?;
    let prod = pb.graph();
    let nh = h.order();
    let pair = |v: VertexId| (v / nh, v % nh);
    let results = all_triples(prod)
        .par_iter()
        .map(|&[s, t, m]| check_witness(prod, [s, t, m], pb.witness(pair(s), pair(t), pair(m))))
        .collect();
    Ok(summarize(prod, results))
}

fn edge_list(g: &Graph) -> Value {
    json!({ "order": g.order(), "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>() })
}

/// Graphs named by `graphs` (descriptors), then every labelled graph on
/// `all_n` vertices, then `random` seeded graphs on 6 to 8 vertices.
fn corpus(a: &Args) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for s in a.strings("graphs")? {
        let spec: GraphSpec = s.parse().map_err(|e| config(format!("{}: {e}", a.op)))?;
        out.push(spec.build()?);
    }
    if let Some(n) = a.uint("all_n")? {
        if n > 7 {
            return Err(config(format!("{}: all_n = {n} is too large to enumerate", a.op)));
        }
        out.extend(all_graphs(n as usize));
    }
    if let Some(count) = a.uint("random")? {
        out.extend(random_graphs(count as usize, 6..=8, a.uint("seed")?.unwrap_or(0)));
    }
    if out.is_empty() {
        return Err(config(format!("{}: empty corpus; give graphs, all_n or random", a.op)));
    }
    Ok(out)
}

/// Runs `check` over the corpus in parallel; the first `Some` in corpus
/// order becomes the witness. `check` returns `None` for graphs it skips.
fn corpus_sweep<F>(a: &Args, check: F) -> Result<Observation>
where
    F: Fn(&Graph) -> Result<Option<Option<Value>>> + Sync,
{
    let graphs = corpus(a)?;
    let results: Vec<Result<Option<Option<Value>>>> = graphs.par_iter().map(&check).collect();
    let mut checked = 0;
    for r in results {
        match r? {
            None => {}
            Some(None) => checked += 1,
            Some(Some(bad)) => {
                return Ok(Observation {
                    value: json!(false),
                    witness: Some(bad),
                    checked: checked + 1,
                    ..Default::default()
                });
            }
        }
    }
    Ok(Observation { value: json!(true), witness: None, checked, ..Default::default() })
}

fn s2m(g: &Graph, budget: u64) -> Result<bool> {
    Ok(Engine::with_budget(g, budget).is_strongly_2_monophonic()?.holds)
}

fn chordal_classification(a: &Args, budget: u64) -> Result<Observation> {
    corpus_sweep(a, |g| {
        if g.order() < 3 || !g.is_connected()? || !is_chordal(g) {
            return Ok(None);
        }
        let (engine, shape) = (s2m(g, budget)?, is_complete_minus_edge(g));
        Ok(Some(
            (engine != shape).then(|| json!({ "graph": edge_list(g), "s2m": engine, "complete_minus_edge": shape })),
        ))
    })
}

fn necessary_condition_soundness(a: &Args, budget: u64) -> Result<Observation> {
    corpus_sweep(a, |g| {
        let report = necessary_conditions_report(g);
        if report.all_hold() {
            return Ok(None);
        }
        let violated = s2m(g, budget)?;
        Ok(Some(violated.then(|| json!({ "graph": edge_list(g), "conditions": format!("{report:?}") }))))
    })
}

fn convexity_equals_clique(a: &Args, budget: u64) -> Result<Observation> {
    corpus_sweep(a, |g| {
        if g.order() < 2 || g.order() > 20 || !s2m(g, budget)? {
            return Ok(None);
        }
        let (cm, omega) = (Engine::with_budget(g, budget).convexity_number()?, clique_number(g)?);
        Ok(Some(
            (cm != omega).then(|| json!({ "graph": edge_list(g), "convexity_number": cm, "clique_number": omega })),
        ))
    })
}

fn oracle_equivalence(a: &Args, budget: u64) -> Result<Observation> {
    corpus_sweep(a, |g| {
        let engine = Engine::with_budget(g, budget);
        let n = g.order();
        for x in 0..n {
            for y in x + 1..n {
                for u in (0..n).filter(|&u| u != x && u != y) {
                    let slow = reference::induced_path_through(g, x, y, u);
                    let agree = match engine.induced_path_through(x, y, u)? {
                        PathSearch::Found(p) => slow.is_some() && path_ok(g, p.vertices(), x, y, u),
                        PathSearch::NoPath => slow.is_none(),
                        PathSearch::BudgetExceeded => return Err(CoreError::BudgetExceeded { budget }.into()),
                    };
                    if !agree {
                        return Ok(Some(Some(json!({ "graph": edge_list(g), "triple": [x, y, u], "oracle": slow }))));
                    }
                }
            }
        }
        Ok(Some(None))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(op: &str, spec: &str, args: &str) -> Observation {
        let spec: GraphSpec = spec.parse().unwrap();
        let g = spec.build().unwrap();
        run_op(op, Some(&spec), Some(&g), &args.parse().unwrap(), monophonic_core::engine::DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn petersen_monophonic_number() {
        let obs = run("monophonic_number", "kneser:5,2", "");
        assert_eq!(obs.value, json!(3));
        assert_eq!(obs.witness.unwrap().as_array().unwrap().len(), 3);
    }

    #[test]
    fn path_is_not_s2m_and_says_why() {
        let obs = run("strongly_2_monophonic", "product:path:3*complete:2", "");
        assert_eq!(obs.value, json!(false));
        assert!(obs.witness.is_some());
    }

    #[test]
    fn small_sweeps_pass() {
        let sweep = run("kneser_witness_sweep", "kneser:7,3", "samples = 500\nseed = 1");
        assert_eq!((sweep.value, sweep.checked), (json!(true), 500));
        // the odd-graph construction needs r >= 3; the Petersen graph is not even strongly 2-monophonic
        assert_eq!(run("kneser_witness_sweep", "kneser:5,2", "").value, json!(false));
        assert_eq!(run("distance_law", "kneser:7,3", "").value, json!(true));
        assert_eq!(run("distance_paths", "kneser:5,2", "").value, json!(true));
        assert_eq!(run("johnson_witness_sweep", "johnson:5,2", "").value, json!(true));
        assert_eq!(run("product_witness_sweep", "hamming:3,2", "").value, json!(true));
        let lift = run("lift", "kneser:5,2", "set = [\"1,2\", \"1,3\", \"2,3\"]\nsteps = 2");
        assert_eq!(lift.value, json!(true), "{:?}", lift.witness);
    }

    #[test]
    fn sweeps_reject_the_wrong_family() {
        let spec: GraphSpec = "johnson:5,2".parse().unwrap();
        let g = spec.build().unwrap();
        let err = run_op("kneser_witness_sweep", Some(&spec), Some(&g), &toml::Table::new(), 10).unwrap_err();
        assert!(matches!(err, CliError::Config(_)));
    }

    #[test]
    fn unknown_operations_are_config_errors() {
        let err = run_op("frobnicate", None, None, &toml::Table::new(), 10).unwrap_err();
        assert!(matches!(err, CliError::Config(_)));
    }

    #[test]
    fn tiny_budgets_are_reported_not_raised() {
        let obs = run_op(
            "strongly_2_monophonic",
            None,
            Some(&"kneser:7,3".parse::<GraphSpec>().unwrap().build().unwrap()),
            &toml::Table::new(),
            1,
        );
        assert!(obs.unwrap().budget_exceeded);
    }
}
