//! Structural predicates: simplicial vertices, chordality, cliques, cut
//! structure, domination, dismantlability, the necessary and sufficient
//! conditions for the strongly 2-monophonic property, and the universal
//! vertex / open twin reductions.

use alloc::vec::Vec;

use crate::engine::DEFAULT_BUDGET;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Vertices whose closed neighbourhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let mut out = g.new_set();
    for v in g.vertices() {
        if g.is_clique(g.neighbors(v)) {
            out.insert(v);
        }
    }
    out
}

/// Chordality by repeated elimination of simplicial vertices.
pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

/// A perfect elimination ordering, if one exists.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<VertexId>> {
    let mut left = g.vertex_set();
    let mut order = Vec::with_capacity(g.order());
    while order.len() < g.order() {
        let v = left.ones().find(|&v| {
            let mut nb = g.neighbors(v).clone();
            nb.intersect_with(&left);
            g.is_clique(&nb)
        })?;
        left.set(v, false);
        order.push(v);
    }
    Some(order)
}

/// `ω(G)` by branch and bound over candidate sets.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(invalid!("clique number of the empty graph is undefined"));
    }
    Ok(maximum_clique(g).count_ones(..))
}

/// One maximum clique, smallest ids preferred among ties found first.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    fn grow(g: &Graph, current: &mut Vec<VertexId>, mut cand: VertexSet, best: &mut Vec<VertexId>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        while let Some(v) = cand.ones().next() {
            if current.len() + cand.count_ones(..) <= best.len() {
                return;
            }
            cand.set(v, false);
            let mut next = cand.clone();
            next.intersect_with(g.neighbors(v));
            current.push(v);
            grow(g, current, next, best);
            current.pop();
        }
    }
    let mut best = Vec::new();
    grow(g, &mut Vec::new(), g.vertex_set(), &mut best);
    let mut out = g.new_set();
    out.extend(best);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutAnalysis {
    pub cut_vertices: VertexSet,
    /// Vertices `x` with `G - N[x]` nonempty and disconnected.
    pub closed_neighborhood_cuts: VertexSet,
}

pub fn cut_analysis(g: &Graph) -> Result<CutAnalysis> {
    if !g.is_connected()? {
        return Err(invalid!("cut analysis needs a connected graph"));
    }
    let mut cut_vertices = g.new_set();
    let mut closed_neighborhood_cuts = g.new_set();
    for v in g.vertices() {
        let mut rest = g.vertex_set();
        rest.set(v, false);
        if g.components(Some(&rest)).len() > 1 {
            cut_vertices.insert(v);
        }
        rest.difference_with(g.neighbors(v));
        if g.components(Some(&rest)).len() > 1 {
            closed_neighborhood_cuts.insert(v);
        }
    }
    Ok(CutAnalysis { cut_vertices, closed_neighborhood_cuts })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DominationReport {
    pub universal: Vec<VertexId>,
    /// `(y, x)` with `y != x` and `N[y] ⊆ N[x]`.
    pub closed_dominated_pairs: Vec<(VertexId, VertexId)>,
    /// `(y, x)` with `y != x` and `N(y) ⊆ N(x)`.
    pub open_dominated_pairs: Vec<(VertexId, VertexId)>,
    /// `(u, v)` with `u < v` and `N(u) = N(v)`.
    pub open_twins: Vec<(VertexId, VertexId)>,
}

pub fn domination_report(g: &Graph) -> DominationReport {
    let mut report = DominationReport::default();
    let closed: Vec<VertexSet> = g.vertices().map(|v| g.closed_neighbors(v)).collect();
    for y in g.vertices() {
        if g.is_universal(y) {
            report.universal.push(y);
        }
        for x in g.vertices().filter(|&x| x != y) {
            if closed[y].is_subset(&closed[x]) {
                report.closed_dominated_pairs.push((y, x));
            }
            if g.neighbors(y).is_subset(g.neighbors(x)) {
                report.open_dominated_pairs.push((y, x));
                if y < x && g.neighbors(y) == g.neighbors(x) {
                    report.open_twins.push((y, x));
                }
            }
        }
    }
    report
}

/// Greedy removal of closed-dominated vertices. Returns whether the graph
/// dismantles to `K_1` and the removal order (ending with the survivor when
/// it does).
pub fn is_dismantlable(g: &Graph) -> Result<(bool, Vec<VertexId>)> {
    if g.is_empty() {
        return Err(invalid!("dismantlability of the empty graph is undefined"));
    }
    let mut left = g.vertex_set();
    let mut order = Vec::new();
    let closed_within = |v: VertexId, left: &VertexSet| {
        let mut s = g.closed_neighbors(v);
        s.intersect_with(left);
        s
    };
    while left.count_ones(..) > 1 {
        let dominated = left.ones().find(|&y| {
            let ny = closed_within(y, &left);
            left.ones().any(|x| x != y && ny.is_subset(&closed_within(x, &left)))
        });
        match dominated {
            Some(y) => {
                left.set(y, false);
                order.push(y);
            }
            None => return Ok((false, order)),
        }
    }
    order.extend(left.ones());
    Ok((true, order))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionWitness {
    /// The graph has at least 3 vertices and is disconnected.
    Disconnected,
    CutVertex(VertexId),
    /// `G - N[x]` is disconnected; `u` and `y` lie in different components.
    ClosedNeighborhoodCut {
        x: VertexId,
        u: VertexId,
        y: VertexId,
    },
    /// `N(y) ⊆ N(x)` but `N[x] != V(G) - {y}`.
    OpenDomination {
        y: VertexId,
        x: VertexId,
    },
    /// `N[y] ⊆ N[x]` but `x` is not universal.
    ClosedDomination {
        y: VertexId,
        x: VertexId,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Condition {
    pub holds: bool,
    pub witness: Option<ConditionWitness>,
}

impl Condition {
    fn from_witness(witness: Option<ConditionWitness>) -> Self {
        Condition { holds: witness.is_none(), witness }
    }
}

/// The four necessary conditions for a strongly 2-monophonic graph. Any
/// failing condition certifies that the graph is not strongly 2-monophonic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NecessaryConditions {
    /// No cut vertex unless the graph is `P_3`; disconnected graphs of order
    /// at least 3 fail here too.
    pub no_cut_vertex: Condition,
    /// No `N[x]` is a cut set.
    pub no_closed_neighborhood_cut: Condition,
    pub open_domination: Condition,
    pub closed_domination: Condition,
}

impl NecessaryConditions {
    pub fn all_hold(&self) -> bool {
        self.conditions().iter().all(|c| c.holds)
    }

    pub fn conditions(&self) -> [Condition; 4] {
        [self.no_cut_vertex, self.no_closed_neighborhood_cut, self.open_domination, self.closed_domination]
    }
}

pub fn necessary_conditions_report(g: &Graph) -> NecessaryConditions {
    let n = g.order();
    let connected = g.is_connected().unwrap_or(true);
    let first_cut = if !connected && n >= 3 {
        Some(ConditionWitness::Disconnected)
    } else if connected && !is_p3(g) {
        g.vertices()
            .find(|&v| {
                let mut rest = g.vertex_set();
                rest.set(v, false);
                g.components(Some(&rest)).len() > 1
            })
            .map(ConditionWitness::CutVertex)
    } else {
        None
    };

    let neighborhood_cut = g.vertices().find_map(|x| {
        let mut rest = g.vertex_set();
        rest.difference_with(&g.closed_neighbors(x));
        let comps = g.components(Some(&rest));
        (comps.len() > 1).then(|| {
            let u = comps[0].ones().next().expect("components are nonempty");
            let y = comps[1].ones().next().expect("components are nonempty");
            ConditionWitness::ClosedNeighborhoodCut { x, u, y }
        })
    });

    let mut open = None;
    let mut closed = None;
    for y in g.vertices() {
        for x in g.vertices().filter(|&x| x != y) {
            if open.is_none() && g.neighbors(y).is_subset(g.neighbors(x)) {
                let mut expected = g.vertex_set();
                expected.set(y, false);
                if g.closed_neighbors(x) != expected {
                    open = Some(ConditionWitness::OpenDomination { y, x });
                }
            }
            if closed.is_none() && g.closed_neighbors(y).is_subset(&g.closed_neighbors(x)) && !g.is_universal(x) {
                closed = Some(ConditionWitness::ClosedDomination { y, x });
            }
        }
    }

    NecessaryConditions {
        no_cut_vertex: Condition::from_witness(first_cut),
        no_closed_neighborhood_cut: Condition::from_witness(neighborhood_cut),
        open_domination: Condition::from_witness(open),
        closed_domination: Condition::from_witness(closed),
    }
}

fn is_p3(g: &Graph) -> bool {
    g.order() == 3 && g.size() == 2
}

/// An induced cycle through `a`, `b` and `c`, as a vertex sequence starting
/// at `a`; `None` when no such cycle exists.
pub fn induced_cycle_through(g: &Graph, a: VertexId, b: VertexId, c: VertexId) -> Result<Option<Vec<VertexId>>> {
    for v in [a, b, c] {
        g.check_vertex(v)?;
    }
    if a == b || b == c || a == c {
        return Err(invalid!("induced_cycle_through needs three distinct vertices, got ({a}, {b}, {c})"));
    }
    let mut search = CycleSearch { g, a, need: [b, c], path: Vec::from([a]), steps: 0 };
    let blocked = g.new_set();
    match search.extend(&blocked) {
        Some(true) => Ok(Some(search.path)),
        Some(false) => Ok(None),
        None => Err(Error::BudgetExceeded { budget: DEFAULT_BUDGET }),
    }
}

struct CycleSearch<'g> {
    g: &'g Graph,
    a: VertexId,
    need: [VertexId; 2],
    path: Vec<VertexId>,
    steps: u64,
}

impl CycleSearch<'_> {
    /// `blocked` holds the closed neighbourhoods of path vertices strictly
    /// between `a` and the tip. `None` signals an exhausted budget.
    fn extend(&mut self, blocked: &VertexSet) -> Option<bool> {
        self.steps += 1;
        if self.steps > DEFAULT_BUDGET {
            return None;
        }
        let g = self.g;
        let tip = *self.path.last().expect("path starts at a");
        if self.path.len() >= 3 && g.adjacent(tip, self.a) {
            // the cycle closes here whether we like it or not
            return Some(self.need.iter().all(|v| self.path.contains(v)));
        }
        if self.need.iter().any(|&v| blocked.contains(v) && !self.path.contains(&v)) {
            return Some(false);
        }
        let mut next_blocked = blocked.clone();
        if self.path.len() >= 2 {
            next_blocked.union_with(g.neighbors(tip));
            next_blocked.insert(tip);
        }
        let candidates: Vec<VertexId> = g
            .neighbors(tip)
            .ones()
            .filter(|&v| v != self.a && !blocked.contains(v) && !self.path.contains(&v))
            .collect();
        for v in candidates {
            self.path.push(v);
            if self.extend(&next_blocked)? {
                return Some(true);
            }
            self.path.pop();
        }
        Some(false)
    }
}

/// Whether every triple in which one vertex is nonadjacent to the other two
/// lies on an induced cycle; the first failing triple otherwise.
pub fn sufficient_condition(g: &Graph) -> Result<(bool, Option<Triple>)> {
    if g.is_complete() {
        return Ok((false, None));
    }
    for x in g.vertices() {
        for y in g.vertices().filter(|&y| y != x && !g.adjacent(x, y)) {
            for u in g.vertices().filter(|&u| u != x && u != y && !g.adjacent(x, u) && y < u) {
                if induced_cycle_through(g, x, y, u)?.is_none() {
                    return Ok((false, Some((x, y, u))));
                }
            }
        }
    }
    Ok((true, None))
}

/// `(x, y, u)`, with `x` nonadjacent to `y` and to `u`.
pub type Triple = (VertexId, VertexId, VertexId);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// A universal vertex was deleted (original id).
    Universal(VertexId),
    /// Open twins `u`, `v` were deleted, `u` being universal in `G - v`.
    Twins(VertexId, VertexId),
}

/// Deletes universal vertices (while the graph is not complete) and open twin
/// pairs `{u, v}` with `u` universal in `G - v` (while no universal vertex
/// exists and more than two vertices remain). Ids in the log and the returned
/// map refer to the input graph.
pub fn reduce_by_universals_and_twins(g: &Graph) -> (Graph, Vec<Reduction>, Vec<VertexId>) {
    let mut current = g.clone().without_labels();
    let mut ids: Vec<VertexId> = g.vertices().collect();
    let mut log = Vec::new();
    loop {
        let n = current.order();
        let universal = current.vertices().find(|&v| current.is_universal(v));
        let mut removed = current.new_set();
        if let Some(v) = universal {
            if current.is_complete() {
                break;
            }
            removed.insert(v);
            log.push(Reduction::Universal(ids[v]));
        } else if n > 2 {
            let twins = current.vertices().find_map(|u| {
                (u + 1..n).find_map(|v| {
                    let pair_twins = current.neighbors(u) == current.neighbors(v);
                    let mut others = current.vertex_set();
                    others.set(u, false);
                    others.set(v, false);
                    (pair_twins && *current.neighbors(u) == others).then_some((u, v))
                })
            });
            let Some((u, v)) = twins else { break };
            removed.insert(u);
            removed.insert(v);
            log.push(Reduction::Twins(ids[u], ids[v]));
        } else {
            break;
        }
        let (next, map) = current.remove_vertices(&removed);
        ids = map.into_iter().map(|i| ids[i]).collect();
        current = next;
    }
    (current, log, ids)
}
