//! Immutable simple graphs over dense vertex ids with a packed adjacency
//! matrix, plus the primitive queries everything else is built on.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{invalid, precondition, Error, Result};
use crate::subset::SubsetVertex;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// A set of vertices of one graph, one bit per vertex.
pub type VertexSet = FixedBitSet;

/// Largest order the packed adjacency matrix is built for.
pub const MAX_ORDER: usize = 4096;

/// Optional vertex labels carried by generated families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Labels {
    /// Vertex `v` is the subset `sets[v]`.
    Subsets(SubsetLabels),
    /// Vertex `v` of a Cartesian product is the factor pair `pairs[v]`.
    Pairs(Vec<(VertexId, VertexId)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetLabels {
    sets: Vec<SubsetVertex>,
    index: BTreeMap<SubsetVertex, VertexId>,
}

impl SubsetLabels {
    pub fn new(sets: Vec<SubsetVertex>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (v, s) in sets.iter().enumerate() {
            if index.insert(*s, v).is_some() {
                return Err(invalid!("subset label {s} is assigned to two vertices"));
            }
        }
        Ok(SubsetLabels { sets, index })
    }

    pub fn get(&self, v: VertexId) -> Option<SubsetVertex> {
        self.sets.get(v).copied()
    }

    pub fn vertex_of(&self, s: SubsetVertex) -> Option<VertexId> {
        self.index.get(&s).copied()
    }

    pub fn as_slice(&self) -> &[SubsetVertex] {
        &self.sets
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edges: usize,
    labels: Option<Labels>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(invalid!("graph order {n} exceeds the supported maximum of {MAX_ORDER}"));
        }
        Ok(Graph { rows: vec![FixedBitSet::with_capacity(n); n], edges: 0, labels: None })
    }

    /// Builds a graph from an undirected edge list. Repeated edges (in either
    /// orientation) are merged; loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(invalid!("self-loop at vertex {u}"));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph whose adjacency is decided by `adjacent(u, v)` for each
    /// pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(VertexId, VertexId) -> bool) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: VertexId, v: VertexId) {
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.edges += 1;
        }
    }

    /// Attaches labels; their number must match the order.
    pub fn with_labels(mut self, labels: Labels) -> Result<Self> {
        let len = match &labels {
            Labels::Subsets(s) => s.sets.len(),
            Labels::Pairs(p) => p.len(),
        };
        if len != self.order() {
            return Err(invalid!("{len} labels supplied for a graph of order {}", self.order()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    pub fn subset_labels(&self) -> Option<&SubsetLabels> {
        match &self.labels {
            Some(Labels::Subsets(s)) => Some(s),
            _ => None,
        }
    }

    pub fn subset_of(&self, v: VertexId) -> Option<SubsetVertex> {
        self.subset_labels().and_then(|l| l.get(v))
    }

    pub fn vertex_of(&self, s: SubsetVertex) -> Option<VertexId> {
        self.subset_labels().and_then(|l| l.vertex_of(s))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: VertexId) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn vertices(&self) -> core::ops::Range<VertexId> {
        0..self.order()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| self.rows[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.order());
        s.insert_range(..);
        s
    }

    pub fn new_set(&self) -> VertexSet {
        FixedBitSet::with_capacity(self.order())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edges == n * n.saturating_sub(1) / 2
    }

    /// `v` is universal when `N[v] = V(G)`.
    pub fn is_universal(&self, v: VertexId) -> bool {
        self.degree(v) + 1 == self.order()
    }

    /// Whether `set` induces a complete subgraph.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.ones().all(|v| {
            let mut rest = set.clone();
            rest.set(v, false);
            rest.is_subset(&self.rows[v])
        })
    }

    /// The subgraph induced by `keep`, together with the map from new ids to
    /// old ids. Labels are carried over.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<VertexId>) {
        let old: Vec<VertexId> = keep.ones().filter(|&v| v < self.order()).collect();
        let mut g = Graph::empty(old.len()).expect("subgraph is no larger than its parent");
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g.labels = match &self.labels {
            Some(Labels::Subsets(s)) => {
                SubsetLabels::new(old.iter().map(|&v| s.sets[v]).collect()).ok().map(Labels::Subsets)
            }
            Some(Labels::Pairs(p)) => Some(Labels::Pairs(old.iter().map(|&v| p[v]).collect())),
            None => None,
        };
        (g, old)
    }

    /// `G - S`, with the id map as in [`Graph::induced_subgraph`].
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, Vec<VertexId>) {
        let mut keep = self.vertex_set();
        keep.difference_with(removed);
        self.induced_subgraph(&keep)
    }

    /// Whether `seq` is an induced path: distinct vertices, consecutive ones
    /// adjacent, all other pairs non-adjacent. A single vertex is an induced
    /// path of length zero; the empty sequence is not a path.
    pub fn is_induced_path(&self, seq: &[VertexId]) -> Result<bool> {
        for &v in seq {
            self.check_vertex(v)?;
        }
        if seq.is_empty() {
            return Ok(false);
        }
        let mut seen = self.new_set();
        for (i, &v) in seq.iter().enumerate() {
            if seen.put(v) {
                return Ok(false);
            }
            for (j, &w) in seq.iter().enumerate().skip(i + 1) {
                if self.adjacent(v, w) != (j == i + 1) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Breadth-first distances from `source` restricted to `allowed` (or the
    /// whole graph); `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: VertexId, allowed: Option<&VertexSet>) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for w in self.rows[v].ones() {
                if dist[w] == usize::MAX && allowed.map_or(true, |a| a.contains(w)) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest `u,v`-path, or `None` when they lie in different
    /// components.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let d = self.bfs_distances(u, None)[v];
        Ok((d != usize::MAX).then_some(d))
    }

    /// A shortest `u,v`-path using only vertices of `allowed` (endpoints
    /// included), with ties broken towards smaller ids. Shortest paths are
    /// always induced.
    pub fn shortest_path(&self, u: VertexId, v: VertexId, allowed: Option<&VertexSet>) -> Option<InducedPath> {
        let dist = self.bfs_distances(v, allowed);
        if dist[u] == usize::MAX {
            return None;
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = self.rows[cur]
                .ones()
                .find(|&w| dist[w] != usize::MAX && dist[w] + 1 == dist[cur])
                .expect("BFS layers are consecutive");
            path.push(cur);
        }
        Some(InducedPath::trusted(path))
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(invalid!("connectivity of the empty graph is undefined"));
        }
        Ok(self.bfs_distances(0, None).iter().all(|&d| d != usize::MAX))
    }

    /// Connected components of the subgraph induced by `within` (or the whole
    /// graph), each as a vertex set, ordered by smallest member.
    pub fn components(&self, within: Option<&VertexSet>) -> Vec<VertexSet> {
        let all = self.vertex_set();
        let within = within.unwrap_or(&all);
        let mut seen = self.new_set();
        let mut out = Vec::new();
        for s in within.ones() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = self.new_set();
            comp.insert(s);
            seen.insert(s);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.rows[v].ones() {
                    if within.contains(w) && !seen.put(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// A vertex sequence whose induced subgraph is exactly the path through it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedPath {
    vertices: Vec<VertexId>,
}

impl InducedPath {
    /// Validates `seq` against `graph`.
    pub fn new(graph: &Graph, seq: Vec<VertexId>) -> Result<Self> {
        if graph.is_induced_path(&seq)? {
            Ok(InducedPath { vertices: seq })
        } else {
            Err(precondition!("{seq:?} is not an induced path"))
        }
    }

    /// For sequences that are induced by construction; checked in debug builds
    /// only by callers that hold the graph.
    pub(crate) fn trusted(vertices: Vec<VertexId>) -> Self {
        InducedPath { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn target(&self) -> VertexId {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        InducedPath { vertices: v }
    }
}
