//! Exact monophonic quantities by search: intervals, monophonic sets and
//! numbers, the strongly 2-monophonic property and m-convexity.
//!
//! [`Engine`] memoizes intervals per ordered pair, so one engine should be
//! reused across queries on the same graph. It is `Sync`; with the `std`
//! feature the strongly 2-monophonic sweep runs on the rayon pool.

mod search;

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, InducedPath, VertexId, VertexSet};
use crate::structure::simplicial_vertices;

pub use search::PathSearch;

/// Extension steps allowed per induced-path search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// `J(x, y)` with one witness path per member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalResult {
    pub pair: (VertexId, VertexId),
    pub members: VertexSet,
    /// Witnesses run from `x` to `y`. When `x` and `y` lie in different
    /// components no path exists and the map is empty.
    pub witness: BTreeMap<VertexId, InducedPath>,
}

impl IntervalResult {
    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(v)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonophonicVerdict {
    pub set: VertexSet,
    pub holds: bool,
    /// Smallest vertex outside every interval of the set.
    pub uncovered: Option<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonophonicNumber {
    Found {
        size: usize,
        set: VertexSet,
    },
    /// Every set of size at most `max_k` was checked and none is monophonic.
    AboveLimit {
        max_k: usize,
    },
    BudgetExceeded,
}

impl MonophonicNumber {
    pub fn size(&self) -> Option<usize> {
        match self {
            MonophonicNumber::Found { size, .. } => Some(*size),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct S2mVerdict {
    pub holds: bool,
    /// Lexicographically smallest `(x, y, u)` with `x < y` nonadjacent and
    /// `u` outside `J(x, y)`.
    pub counterexample: Option<(VertexId, VertexId, VertexId)>,
}

type Row = Vec<OnceBox<IntervalResult>>;

pub struct Engine<'g> {
    graph: &'g Graph,
    budget: u64,
    memo: Vec<OnceBox<Row>>,
}

impl<'g> Engine<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_budget(graph, DEFAULT_BUDGET)
    }

    pub fn with_budget(graph: &'g Graph, budget: u64) -> Self {
        let memo = (0..graph.order()).map(|_| OnceBox::new()).collect();
        Engine { graph, budget, memo }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// An induced `x,y`-path through `u`, or a certified [`PathSearch::NoPath`].
    pub fn induced_path_through(&self, x: VertexId, y: VertexId, u: VertexId) -> Result<PathSearch> {
        let g = self.graph;
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        g.check_vertex(u)?;
        if x == y || u == x || u == y {
            return Err(invalid!("induced_path_through needs distinct x, y, u; got ({x}, {y}, {u})"));
        }
        Ok(search::Search::run(g, x, y, u, self.budget).0)
    }

    /// `J(x, y)`, computed once per ordered pair.
    pub fn monophonic_interval(&self, x: VertexId, y: VertexId) -> Result<&IntervalResult> {
        let g = self.graph;
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        if x == y {
            return Err(invalid!("monophonic interval needs distinct endpoints, got {x} twice"));
        }
        let row = self.memo[x].get_or_init(|| Box::new((0..g.order()).map(|_| OnceBox::new()).collect()));
        if let Some(done) = row[y].get() {
            return Ok(done);
        }
        let fresh = self.compute_interval(x, y)?;
        // a racing thread may have won; both results are identical
        Ok(row[y].get_or_init(|| Box::new(fresh)))
    }

    fn compute_interval(&self, x: VertexId, y: VertexId) -> Result<IntervalResult> {
        let g = self.graph;
        let mut members = g.new_set();
        members.insert(x);
        members.insert(y);
        let mut witness = BTreeMap::new();
        let Some(shortest) = g.shortest_path(x, y, None) else {
            return Ok(IntervalResult { pair: (x, y), members, witness });
        };
        record(&mut members, &mut witness, &shortest);
        if !g.adjacent(x, y) {
            for u in g.vertices() {
                if members.contains(u) {
                    continue;
                }
                match search::Search::run(g, x, y, u, self.budget).0 {
                    PathSearch::Found(p) => record(&mut members, &mut witness, &p),
                    PathSearch::NoPath => {}
                    PathSearch::BudgetExceeded => return Err(Error::BudgetExceeded { budget: self.budget }),
                }
            }
        }
        Ok(IntervalResult { pair: (x, y), members, witness })
    }

    /// Whether the intervals of `set` (and `set` itself) cover the graph.
    pub fn is_monophonic_set(&self, set: &VertexSet) -> Result<MonophonicVerdict> {
        let g = self.graph;
        if set.is_clear() {
            return Err(invalid!("a monophonic set must be nonempty"));
        }
        if let Some(v) = set.ones().find(|&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
        }
        let mut covered = self.cover_of(set)?;
        covered.grow(g.order());
        let uncovered = g.vertices().find(|&v| !covered.contains(v));
        Ok(MonophonicVerdict { set: set.clone(), holds: uncovered.is_none(), uncovered })
    }

    fn cover_of(&self, set: &VertexSet) -> Result<VertexSet> {
        let mut covered = set.clone();
        let full = self.graph.order();
        let vs: Vec<VertexId> = set.ones().collect();
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                if covered.count_ones(..) == full {
                    return Ok(covered);
                }
                covered.union_with(&self.monophonic_interval(x, y)?.members);
            }
        }
        Ok(covered)
    }

    /// `m(G)` by ascending size, with simplicial vertices forced into every
    /// candidate set.
    pub fn monophonic_number(&self, max_k: usize) -> Result<MonophonicNumber> {
        let g = self.graph;
        let n = g.order();
        if n == 0 {
            return Err(invalid!("the monophonic number of the empty graph is undefined"));
        }
        if max_k == 0 {
            return Err(invalid!("max_k must be at least 1"));
        }
        let forced = simplicial_vertices(g);
        let free: Vec<VertexId> = g.vertices().filter(|&v| !forced.contains(v)).collect();
        let base = forced.count_ones(..);
        let mut evaluated = 0u64;
        for k in base.max(1)..=max_k.min(n) {
            let extra = k - base;
            let mut picks: Vec<usize> = (0..extra).collect();
            loop {
                evaluated += 1;
                if evaluated > self.budget {
                    return Ok(MonophonicNumber::BudgetExceeded);
                }
                let mut set = forced.clone();
                for &i in &picks {
                    set.insert(free[i]);
                }
                match self.cover_of(&set) {
                    Ok(c) if c.count_ones(..) == n => return Ok(MonophonicNumber::Found { size: k, set }),
                    Ok(_) => {}
                    Err(Error::BudgetExceeded { .. }) => return Ok(MonophonicNumber::BudgetExceeded),
                    Err(e) => return Err(e),
                }
                if !next_combination(&mut picks, free.len()) {
                    break;
                }
            }
        }
        Ok(MonophonicNumber::AboveLimit { max_k })
    }

    /// Every nonadjacent pair is a monophonic set. Graphs of order at most 1
    /// and complete graphs other than `K_2` are not strongly 2-monophonic.
    pub fn is_strongly_2_monophonic(&self) -> Result<S2mVerdict> {
        let g = self.graph;
        let n = g.order();
        if n <= 1 || (g.is_complete() && n != 2) {
            return Ok(S2mVerdict { holds: false, counterexample: None });
        }
        let pairs: Vec<(VertexId, VertexId)> =
            g.vertices().flat_map(|x| (x + 1..n).filter(move |&y| !g.adjacent(x, y)).map(move |y| (x, y))).collect();
        let check = |&(x, y): &(VertexId, VertexId)| -> Result<Option<(VertexId, VertexId, VertexId)>> {
            let j = self.monophonic_interval(x, y)?;
            Ok(g.vertices().find(|&v| !j.contains(v)).map(|u| (x, y, u)))
        };
        let first_bad = {
            #[cfg(feature = "std")]
            {
                use rayon::prelude::*;
                pairs.par_iter().map(check).find_first(|r| !matches!(r, Ok(None)))
            }
            #[cfg(not(feature = "std"))]
            {
                pairs.iter().map(check).find(|r| !matches!(r, Ok(None)))
            }
        };
        match first_bad {
            None => Ok(S2mVerdict { holds: true, counterexample: None }),
            Some(Ok(c)) => Ok(S2mVerdict { holds: false, counterexample: c }),
            Some(Err(e)) => Err(e),
        }
    }

    /// Every interval between members of `set` stays inside `set`.
    pub fn is_m_convex(&self, set: &VertexSet) -> Result<bool> {
        let g = self.graph;
        let vs: Vec<VertexId> = set.ones().collect();
        for &v in &vs {
            g.check_vertex(v)?;
        }
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                if !g.adjacent(x, y) && !self.monophonic_interval(x, y)?.members.is_subset(set) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The smallest m-convex superset of `set`.
    pub fn hull(&self, set: &VertexSet) -> Result<VertexSet> {
        let g = self.graph;
        let mut hull = set.clone();
        hull.grow(g.order());
        if let Some(v) = hull.ones().find(|&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
        }
        loop {
            let before = hull.count_ones(..);
            let vs: Vec<VertexId> = hull.ones().collect();
            for (i, &x) in vs.iter().enumerate() {
                for &y in &vs[i + 1..] {
                    if !g.adjacent(x, y) {
                        hull.union_with(&self.monophonic_interval(x, y)?.members);
                    }
                }
            }
            if hull.count_ones(..) == before {
                return Ok(hull);
            }
        }
    }

    /// `c_m(G)`: the size of a largest proper m-convex set, by branch and
    /// bound over hull-closed sets seeded with a maximum clique.
    pub fn convexity_number(&self) -> Result<usize> {
        let g = self.graph;
        let n = g.order();
        if n < 2 {
            return Err(invalid!("convexity number needs at least 2 vertices, got {n}"));
        }
        if g.is_complete() {
            return Ok(n - 1);
        }
        let mut best = crate::structure::clique_number(g)?;
        let order: Vec<VertexId> = g.vertices().collect();
        self.grow_convex(&g.new_set(), &g.new_set(), &order, 0, &mut best)?;
        Ok(best)
    }

    fn grow_convex(
        &self,
        inside: &VertexSet,
        outside: &VertexSet,
        order: &[VertexId],
        next: usize,
        best: &mut usize,
    ) -> Result<()> {
        let n = self.graph.order();
        let size = inside.count_ones(..);
        *best = (*best).max(size);
        let open = order[next..].iter().filter(|&&v| !inside.contains(v) && !outside.contains(v)).count();
        if size + open <= *best {
            return Ok(());
        }
        let Some(pos) = (next..order.len()).find(|&i| !inside.contains(order[i]) && !outside.contains(order[i])) else {
            return Ok(());
        };
        let v = order[pos];
        let mut with = inside.clone();
        with.insert(v);
        let closed = self.hull(&with)?;
        if closed.count_ones(..) < n && closed.is_disjoint(outside) {
            self.grow_convex(&closed, outside, order, pos + 1, best)?;
        }
        let mut without = outside.clone();
        without.insert(v);
        self.grow_convex(inside, &without, order, pos + 1, best)
    }
}

fn record(members: &mut VertexSet, witness: &mut BTreeMap<VertexId, InducedPath>, path: &InducedPath) {
    for &v in path.vertices() {
        members.insert(v);
        witness.entry(v).or_insert_with(|| path.clone());
    }
}

/// Advances `picks` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order.
pub(crate) fn next_combination(picks: &mut [usize], n: usize) -> bool {
    let k = picks.len();
    for i in (0..k).rev() {
        if picks[i] < n - k + i {
            picks[i] += 1;
            for j in i + 1..k {
                picks[j] = picks[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// One-shot convenience wrappers around a fresh [`Engine`].
pub fn induced_path_through(g: &Graph, x: VertexId, y: VertexId, u: VertexId) -> Result<PathSearch> {
    Engine::new(g).induced_path_through(x, y, u)
}

pub fn monophonic_interval(g: &Graph, x: VertexId, y: VertexId) -> Result<IntervalResult> {
    Engine::new(g).monophonic_interval(x, y).cloned()
}

pub fn is_monophonic_set(g: &Graph, set: &VertexSet) -> Result<MonophonicVerdict> {
    Engine::new(g).is_monophonic_set(set)
}

pub fn monophonic_number(g: &Graph, max_k: usize) -> Result<MonophonicNumber> {
    Engine::new(g).monophonic_number(max_k)
}

pub fn is_strongly_2_monophonic(g: &Graph) -> Result<S2mVerdict> {
    Engine::new(g).is_strongly_2_monophonic()
}

pub fn is_m_convex(g: &Graph, set: &VertexSet) -> Result<bool> {
    Engine::new(g).is_m_convex(set)
}

pub fn convexity_number(g: &Graph) -> Result<usize> {
    Engine::new(g).convexity_number()
}
