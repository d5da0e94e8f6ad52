//! Constructive induced paths: each builder assembles a path from explicit
//! set formulas, re-validates it, and only falls back to exact search when
//! the validation fails (reported through [`Witness::fallback`]).

mod johnson;
mod kneser;
mod lift;
mod product;

use alloc::vec::Vec;
use core::fmt;

use crate::engine::{Engine, PathSearch};
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, InducedPath, VertexId};
use crate::subset::{ElementSet, OrderedBlock, SubsetVertex};

pub use johnson::{johnson_witness_path, JohnsonPaths};
pub use kneser::{even_path, kneser_witness_path, odd_path, venn_partition, KneserPaths, VennPartition};
pub use lift::{lift_witness, Lifter};
pub use product::{disjoint_path_pair, product_witness_path, DisjointPaths, ProductBuilder};

/// Which branch of which construction produced a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    /// `u` is disjoint from `x ∪ y`: the path `x, u, y`.
    KneserDirect,
    /// One of the five cases for odd graphs.
    KneserCase(u8),
    /// Lifting from `K(2r, r)`, where the monophonic set is everything.
    LiftHalfGround,
    /// Lifting by splicing `u` into a witness path of the smaller graph.
    LiftSplice,
    /// Lifting by the explicit four-edge detour.
    LiftDetour,
    /// The vertex already lives in the smaller graph.
    LiftInherited,
    Johnson,
    /// Both ends in one layer of the product.
    ProductLayer,
    ProductCase1,
    ProductCase2,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::KneserDirect => f.write_str("kneser/direct"),
            Construction::KneserCase(c) => write!(f, "kneser/case-{c}"),
            Construction::LiftHalfGround => f.write_str("lift/half-ground"),
            Construction::LiftSplice => f.write_str("lift/splice"),
            Construction::LiftDetour => f.write_str("lift/detour"),
            Construction::LiftInherited => f.write_str("lift/inherited"),
            Construction::Johnson => f.write_str("johnson"),
            Construction::ProductLayer => f.write_str("product/layer"),
            Construction::ProductCase1 => f.write_str("product/case-1"),
            Construction::ProductCase2 => f.write_str("product/case-2"),
        }
    }
}

/// A validated induced path together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub path: InducedPath,
    pub construction: Construction,
    /// The formula output failed validation and exact search supplied the path.
    pub fallback: bool,
}

/// The alternating sequence shared by both distance paths: for `i = 0..=m`,
/// `x_{2i} = Q_{≤i} ∪ P_{≥m-i} ∪ even` and, for `i = 1..=m`,
/// `x_{2i-1} = P_{≤i-1} ∪ Q_{≥m-i} ∪ odd`.
pub(crate) fn ladder(
    p: &OrderedBlock,
    q: &OrderedBlock,
    even: ElementSet,
    odd: ElementSet,
    m: usize,
) -> Vec<ElementSet> {
    debug_assert!(p.len() >= m && q.len() >= m);
    let mut out = Vec::with_capacity(2 * m + 1);
    out.push(q.prefix(0) | p.suffix(m) | even);
    for i in 1..=m {
        out.push(p.prefix(i - 1) | q.suffix(m - i) | odd);
        out.push(q.prefix(i) | p.suffix(m - i) | even);
    }
    out
}

/// Maps subsets to vertex ids of a labelled graph.
pub(crate) fn to_ids(g: &Graph, ground: usize, sets: &[ElementSet]) -> Result<Vec<VertexId>> {
    sets.iter()
        .map(|&s| {
            let v = SubsetVertex::new(s, ground)?;
            g.vertex_of(v).ok_or_else(|| precondition!("{v} is not a vertex of the graph"))
        })
        .collect()
}

/// Accepts `seq` when it is an induced `from,to`-path through `via`;
/// otherwise asks the engine for one.
pub(crate) fn validate_or_search(
    g: &Graph,
    seq: Vec<VertexId>,
    from: VertexId,
    to: VertexId,
    via: VertexId,
    construction: Construction,
) -> Result<Witness> {
    let ok = seq.first() == Some(&from)
        && seq.last() == Some(&to)
        && seq.contains(&via)
        && g.is_induced_path(&seq).unwrap_or(false);
    if ok {
        return Ok(Witness { path: InducedPath::trusted(seq), construction, fallback: false });
    }
    match Engine::new(g).induced_path_through(from, to, via)? {
        PathSearch::Found(path) => Ok(Witness { path, construction, fallback: true }),
        PathSearch::NoPath => Err(precondition!("no induced {from},{to}-path through {via} exists")),
        PathSearch::BudgetExceeded => Err(Error::BudgetExceeded { budget: crate::engine::DEFAULT_BUDGET }),
    }
}
