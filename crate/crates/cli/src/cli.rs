//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monophonic_core::engine::{Engine, MonophonicNumber, DEFAULT_BUDGET};
use monophonic_core::paths::{JohnsonPaths, KneserPaths, Lifter, ProductBuilder, Witness};
use monophonic_core::structure::{
    clique_number, cut_analysis, domination_report, is_chordal, is_dismantlable, necessary_conditions_report,
    reduce_by_universals_and_twins, simplicial_vertices, sufficient_condition,
};
use monophonic_core::{Graph, SubsetVertex, VertexId};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::claims::{run_manifest, Manifest, RunOptions};
use crate::error::{CliError, Result};
use crate::format::{emit_graph, parse_elements};
use crate::spec::{labels_of, parse_vertex, vertex_label, GraphSpec};

#[derive(Parser, Debug)]
#[command(name = "monophonic", version, about = "Monophonic intervals, sets and witness paths on graph families")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Extension steps allowed per induced-path search.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Directory for the persistent result cache.
    #[arg(long, env = "MONOPHONIC_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Args, Debug, Default, Clone)]
pub struct GraphArgs {
    /// A descriptor such as `kneser:7,3` or `product:cycle:5*complete:2`.
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    /// Hamming dimensions, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<usize>,
    /// Matching size for complete-minus-matching.
    #[arg(long)]
    pub m: Option<usize>,
    /// A graph in the text edge-list format.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl GraphArgs {
    pub fn spec(&self) -> Result<GraphSpec> {
        if let Some(s) = &self.graph {
            return s.parse();
        }
        if let Some(p) = &self.file {
            return Ok(GraphSpec::File(p.clone()));
        }
        let family = self.family.as_deref().ok_or_else(|| usage("give --graph, --file or --family"))?;
        let params: Vec<usize> = match family {
            "hamming" => self.dims.clone(),
            "generalized-johnson" | "gj" => vec![req(self.n, "n")?, req(self.r, "r")?, req(self.i, "i")?],
            "complete-minus-matching" | "kmm" => vec![req(self.n, "n")?, req(self.m, "m")?],
            "complete" | "path" | "cycle" => vec![req(self.n, "n")?],
            _ => vec![req(self.n, "n")?, req(self.r, "r")?],
        };
        GraphSpec::from_family(family, &params)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn req(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| usage(format!("--{name} is required for this family")))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a graph in the text edge-list format.
    Generate {
        /// Family name followed by its parameters, e.g. `kneser 5 2`.
        #[arg(num_args = 0..)]
        positional: Vec<String>,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The monophonic interval of two vertices, with one witness path per member.
    Interval {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// The monophonic number and a minimum monophonic set.
    MonoNumber {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        max_k: Option<usize>,
        /// Exit 1 unless the number equals this.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Whether every nonadjacent pair is a monophonic set.
    S2mCheck {
        #[command(flatten)]
        graph: GraphArgs,
        /// Exit 1 unless the verdict equals this.
        #[arg(long)]
        expect: Option<bool>,
    },
    /// Run a constructive witness-path builder.
    Path {
        #[command(subcommand)]
        builder: PathCommand,
    },
    /// Structural report: chordality, cut sets, domination, necessary conditions.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Run a claim manifest and emit a report.
    VerifyClaims {
        manifest: PathBuf,
        /// Also write the machine-readable report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PathCommand {
    /// Odd graph K(2r+1, r).
    Kneser {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        via: String,
    },
    /// Johnson graph J(n, r).
    Johnson {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        via: String,
    },
    /// Cartesian product G □ H; vertices are pairs `g,h`.
    Product {
        /// Descriptor of the first factor.
        #[arg(long)]
        left: String,
        /// Descriptor of the second factor.
        #[arg(long)]
        right: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        via: String,
    },
    /// Lift a monophonic set of K(n, r) to K(n+1, r).
    Lift {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// A member of the set; repeat for each member.
        #[arg(long = "set", required = true)]
        set: Vec<String>,
        /// Vertex of K(n+1, r) the witness must pass through.
        #[arg(long)]
        via: String,
    },
}

/// Parses `argv` and runs the command; clap handles its own usage errors
/// (exit 2) and `--help`.
pub fn main_with<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::parse_from(argv);
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

struct Out {
    format: Format,
}

impl Out {
    fn emit(&self, text: String, machine: Value) -> Result<()> {
        let s = match self.format {
            Format::Text => text,
            Format::Machine => serde_json::to_string_pretty(&machine).expect("values serialize") + "\n",
        };
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(s.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    let out = Out { format: cli.global.format };
    let budget = cli.global.budget;
    let jobs = cli.global.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    match &cli.command {
        Command::Generate { positional, graph, out: dest } => generate(positional, graph, dest.as_deref()),
        Command::Interval { graph, x, y } => interval(&out, graph, x, y, budget),
        Command::MonoNumber { graph, max_k, expect } => mono_number(&out, graph, *max_k, *expect, budget),
        Command::S2mCheck { graph, expect } => s2m_check(&out, graph, *expect, budget, jobs),
        Command::Path { builder } => path(&out, builder),
        Command::Analyze { graph } => analyze(&out, graph),
        Command::VerifyClaims { manifest, out: dest } => {
            verify_claims(&out, manifest, dest.as_deref(), budget, jobs, cli.global.cache_dir.as_deref())
        }
    }
}

fn generate(positional: &[String], args: &GraphArgs, dest: Option<&Path>) -> Result<u8> {
    let spec = match positional.split_first() {
        Some((family, params)) => {
            let params = params
                .iter()
                .map(|p| p.parse::<usize>().map_err(|_| usage(format!("bad parameter {p:?}"))))
                .collect::<Result<Vec<_>>>()?;
            GraphSpec::from_family(family, &params)?
        }
        None => args.spec()?,
    };
    let text = emit_graph(&spec.build()?);
    match dest {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn path_labels(g: &Graph, p: &[VertexId]) -> Vec<String> {
    labels_of(g, p.iter().copied())
}

fn interval(out: &Out, args: &GraphArgs, x: &str, y: &str, budget: u64) -> Result<u8> {
    let spec = args.spec()?;
    let g = spec.build()?;
    let (x, y) = (parse_vertex(&g, x)?, parse_vertex(&g, y)?);
    let engine = Engine::with_budget(&g, budget);
    let j = engine.monophonic_interval(x, y)?;
    let mut text = format!(
        "J({}, {}) in {spec}: {} of {} vertices\n",
        vertex_label(&g, x),
        vertex_label(&g, y),
        j.len(),
        g.order()
    );
    let mut members = Vec::new();
    for v in j.members.ones() {
        let path = j.witness.get(&v).map(|p| path_labels(&g, p.vertices()));
        match &path {
            Some(p) => text += &format!("  {}  via {}\n", vertex_label(&g, v), p.join(" ")),
            None => text += &format!("  {}\n", vertex_label(&g, v)),
        }
        members.push(json!({ "vertex": vertex_label(&g, v), "witness": path }));
    }
    let machine = json!({
        "graph": spec.to_string(),
        "x": vertex_label(&g, x),
        "y": vertex_label(&g, y),
        "size": j.len(),
        "members": members,
    });
    out.emit(text, machine)?;
    Ok(0)
}

fn mono_number(out: &Out, args: &GraphArgs, max_k: Option<usize>, expect: Option<usize>, budget: u64) -> Result<u8> {
    let spec = args.spec()?;
    let g = spec.build()?;
    let result = Engine::with_budget(&g, budget).monophonic_number(max_k.unwrap_or(g.order()))?;
    let (value, set) = match &result {
        MonophonicNumber::Found { size, set } => (Some(*size), Some(labels_of(&g, set.ones()))),
        MonophonicNumber::AboveLimit { .. } => (None, None),
        MonophonicNumber::BudgetExceeded => {
            return Err(CliError::Core(monophonic_core::Error::BudgetExceeded { budget }));
        }
    };
    let text = match (&value, &set) {
        (Some(m), Some(s)) => format!("{m}\nset: {}\n", s.join(" ")),
        _ => format!("above {}\n", max_k.unwrap_or(g.order())),
    };
    let met = expect.map_or(true, |e| value == Some(e));
    out.emit(
        text,
        json!({ "graph": spec.to_string(), "monophonic_number": value, "set": set, "expectation_met": met }),
    )?;
    Ok(if met { 0 } else { 1 })
}

fn s2m_check(out: &Out, args: &GraphArgs, expect: Option<bool>, budget: u64, jobs: usize) -> Result<u8> {
    let spec = args.spec()?;
    let g = spec.build()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| usage(format!("cannot start {jobs} worker threads: {e}")))?;
    let verdict = pool.install(|| Engine::with_budget(&g, budget).is_strongly_2_monophonic())?;
    let counter = verdict.counterexample.map(|(x, y, u)| [x, y, u].map(|v| vertex_label(&g, v)));
    let mut text = format!("{}\n", verdict.holds);
    if let Some([x, y, u]) = &counter {
        text += &format!("counterexample: {u} lies on no induced {x},{y}-path\n");
    }
    let met = expect.map_or(true, |e| e == verdict.holds);
    out.emit(
        text,
        json!({ "graph": spec.to_string(), "strongly_2_monophonic": verdict.holds, "counterexample": counter, "expectation_met": met }),
    )?;
    Ok(if met { 0 } else { 1 })
}

fn subset(text: &str, ground: usize) -> Result<SubsetVertex> {
    let elems = parse_elements(text.trim().trim_start_matches('{').trim_end_matches('}')).map_err(usage)?;
    Ok(SubsetVertex::from_elements(&elems, ground)?)
}

fn pair(text: &str) -> Result<(VertexId, VertexId)> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = t.split(',').collect();
    let [a, b] = parts[..] else {
        return Err(usage(format!("{text:?} is not a pair g,h")));
    };
    let p = |s: &str| s.trim().parse::<VertexId>().map_err(|_| usage(format!("{text:?} is not a pair g,h")));
    Ok((p(a)?, p(b)?))
}

fn emit_witness(out: &Out, g: &Graph, w: &Witness) -> Result<u8> {
    let labels = path_labels(g, w.path.vertices());
    let mut text = format!("{}\n", labels.join(" "));
    text += &format!("length {}, construction {}", w.path.len(), w.construction);
    text += if w.fallback { ", found by search\n" } else { "\n" };
    let machine = json!({
        "path": labels,
        "length": w.path.len(),
        "construction": w.construction.to_string(),
        "fallback": w.fallback,
        "induced": g.is_induced_path(w.path.vertices())?,
    });
    out.emit(text, machine)?;
    Ok(0)
}

fn path(out: &Out, builder: &PathCommand) -> Result<u8> {
    match builder {
        PathCommand::Kneser { r, x, y, via } => {
            let kp = KneserPaths::new(*r)?;
            let n = kp.n();
            let w = kp.witness(subset(x, n)?, subset(y, n)?, subset(via, n)?)?;
            emit_witness(out, kp.graph(), &w)
        }
        PathCommand::Johnson { n, r, x, y, via } => {
            let jp = JohnsonPaths::new(*n, *r)?;
            let w = jp.witness(subset(x, *n)?, subset(y, *n)?, subset(via, *n)?)?;
            emit_witness(out, jp.graph(), &w)
        }
        PathCommand::Product { left, right, x, y, via } => {
            let g = left.parse::<GraphSpec>()?.build()?;
            let h = right.parse::<GraphSpec>()?.build()?;
            let pb = ProductBuilder::new(&g, &h)?;
            let w = pb.witness(pair(x)?, pair(y)?, pair(via)?)?;
            emit_witness(out, pb.graph(), &w)
        }
        PathCommand::Lift { n, r, set, via } => {
            let s = set.iter().map(|m| subset(m, *n)).collect::<Result<Vec<_>>>()?;
            let lifter = Lifter::new(*n, *r, &s)?;
            let w = lifter.witness(subset(via, n + 1)?)?;
            emit_witness(out, lifter.graph(), &w)
        }
    }
}

fn analyze(out: &Out, args: &GraphArgs) -> Result<u8> {
    let spec = args.spec()?;
    let g = spec.build()?;
    let connected = g.is_connected()?;
    let chordal = is_chordal(&g);
    let omega = clique_number(&g)?;
    let simplicial = labels_of(&g, simplicial_vertices(&g).ones());
    let cuts = if connected { Some(cut_analysis(&g)?) } else { None };
    let dom = domination_report(&g);
    let (dismantlable, _) = is_dismantlable(&g)?;
    let necessary = necessary_conditions_report(&g);
    let (sufficient, failing_triple) = sufficient_condition(&g)?;
    let (core, log, _) = reduce_by_universals_and_twins(&g);
    let names = ["no cut vertex", "no closed-neighbourhood cut", "open domination", "closed domination"];
    let conditions: Vec<Value> = names
        .iter()
        .zip(necessary.conditions())
        .map(|(name, c)| json!({ "condition": name, "holds": c.holds, "witness": c.witness.map(|w| format!("{w:?}")) }))
        .collect();
    let pairs = |ps: &[(VertexId, VertexId)]| -> Vec<[String; 2]> {
        ps.iter().map(|&(a, b)| [vertex_label(&g, a), vertex_label(&g, b)]).collect()
    };
    let machine = json!({
        "graph": spec.to_string(),
        "order": g.order(),
        "size": g.size(),
        "connected": connected,
        "chordal": chordal,
        "clique_number": omega,
        "simplicial": simplicial,
        "cut_vertices": cuts.as_ref().map(|c| labels_of(&g, c.cut_vertices.ones())),
        "closed_neighborhood_cuts": cuts.as_ref().map(|c| labels_of(&g, c.closed_neighborhood_cuts.ones())),
        "universal": labels_of(&g, dom.universal.iter().copied()),
        "open_twins": pairs(&dom.open_twins),
        "dismantlable": dismantlable,
        "necessary_conditions": conditions,
        "induced_cycle_condition": sufficient,
        "induced_cycle_failure": failing_triple.map(|(x, y, u)| [x, y, u].map(|v| vertex_label(&g, v))),
        "reduced_order": core.order(),
        "reductions": log.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>(),
    });
    let mut text = format!("{spec}: {} vertices, {} edges\n", g.order(), g.size());
    text += &format!("connected {connected}, chordal {chordal}, clique number {omega}, dismantlable {dismantlable}\n");
    text += &format!("simplicial: {}\n", machine["simplicial"]);
    if let Some(c) = &cuts {
        text += &format!("cut vertices: {}\n", json!(labels_of(&g, c.cut_vertices.ones())));
    }
    text += &format!("universal: {}, open twins: {}\n", machine["universal"], machine["open_twins"]);
    for (name, c) in names.iter().zip(necessary.conditions()) {
        match c.witness {
            Some(w) => text += &format!("necessary condition '{name}': fails ({w:?})\n"),
            None => text += &format!("necessary condition '{name}': holds\n"),
        }
    }
    text += &format!("induced-cycle sufficient condition: {sufficient}\n");
    text += &format!("after deleting universal vertices and twins: {} vertices\n", core.order());
    out.emit(text, machine)?;
    Ok(0)
}

fn verify_claims(
    out: &Out,
    manifest: &Path,
    dest: Option<&Path>,
    budget: u64,
    jobs: usize,
    cache_dir: Option<&Path>,
) -> Result<u8> {
    let m = Manifest::load(manifest)?;
    let cache = cache_dir.map(Cache::open).transpose()?;
    let label = m.name.clone().unwrap_or_else(|| manifest.display().to_string());
    let report = run_manifest(&m, &label, &RunOptions { jobs, budget, cache: cache.as_ref() })?;
    if let Some(p) = dest {
        std::fs::write(p, report.to_machine()).map_err(|e| CliError::io(p, e))?;
    }
    let text = report.to_text();
    let machine = serde_json::to_value(&report).expect("reports serialize");
    out.emit(text, machine)?;
    Ok(if report.summary.all_hold() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn family_flags_resolve() {
        let cli =
            Cli::try_parse_from(["monophonic", "s2m-check", "--family", "kneser", "--n", "7", "--r", "3"]).unwrap();
        let Command::S2mCheck { graph, .. } = cli.command else { panic!() };
        assert_eq!(graph.spec().unwrap(), GraphSpec::Kneser { n: 7, r: 3 });
        let g = GraphArgs { family: Some("hamming".into()), dims: vec![3, 2], ..Default::default() };
        assert_eq!(g.spec().unwrap(), GraphSpec::Hamming(vec![3, 2]));
        let missing = GraphArgs { family: Some("gj".into()), n: Some(6), r: Some(4), ..Default::default() };
        assert!(matches!(missing.spec(), Err(CliError::Usage(_))));
    }

    #[test]
    fn pairs_parse_with_or_without_parentheses() {
        assert_eq!(pair("(1,2)").unwrap(), (1, 2));
        assert_eq!(pair("0, 1").unwrap(), (0, 1));
        assert!(pair("1,2,3").is_err());
    }
}
