//! Depth-first search for an induced `x,y`-path through a required vertex.

use alloc::vec::Vec;

use crate::graph::{Graph, InducedPath, VertexId, VertexSet};

/// Outcome of one induced-path search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathSearch {
    Found(InducedPath),
    /// The search space was exhausted: no such path exists.
    NoPath,
    BudgetExceeded,
}

impl PathSearch {
    pub fn found(&self) -> Option<&InducedPath> {
        match self {
            PathSearch::Found(p) => Some(p),
            _ => None,
        }
    }
}

enum Step {
    Found,
    Dead,
    Budget,
}

pub(crate) struct Search<'g> {
    g: &'g Graph,
    y: VertexId,
    u: VertexId,
    path: Vec<VertexId>,
    steps: u64,
    budget: u64,
}

impl<'g> Search<'g> {
    /// Callers guarantee `x`, `y`, `u` are valid and pairwise distinct.
    pub(crate) fn run(g: &'g Graph, x: VertexId, y: VertexId, u: VertexId, budget: u64) -> (PathSearch, u64) {
        let mut s = Search { g, y, u, path: Vec::from([x]), steps: 0, budget };
        let blocked = g.new_set();
        let outcome = match s.extend(&blocked, false) {
            Step::Found => PathSearch::Found(InducedPath::trusted(s.path)),
            Step::Dead => PathSearch::NoPath,
            Step::Budget => PathSearch::BudgetExceeded,
        };
        (outcome, s.steps)
    }

    /// `blocked` is the union of closed neighbourhoods of every path vertex
    /// except the tip; the next vertex must be a neighbour of the tip outside it.
    fn extend(&mut self, blocked: &VertexSet, u_seen: bool) -> Step {
        self.steps += 1;
        if self.steps > self.budget {
            return Step::Budget;
        }
        let g = self.g;
        let (y, u) = (self.y, self.u);
        let tip = *self.path.last().expect("path starts at x");

        if blocked.contains(y) || (!u_seen && blocked.contains(u)) {
            return Step::Dead;
        }
        // y next to the tip: stopping is the only way to keep y usable later
        if g.adjacent(tip, y) {
            if u_seen {
                self.path.push(y);
                return Step::Found;
            }
            return Step::Dead;
        }

        let mut free = g.vertex_set();
        free.difference_with(blocked);
        free.set(tip, false);
        let mut candidates = g.neighbors(tip).clone();
        candidates.difference_with(blocked);

        let order: Vec<VertexId> = if !u_seen && candidates.contains(u) {
            // skipping u now would block it for good
            Vec::from([u])
        } else {
            if !u_seen {
                let mut around_u = g.neighbors(u).clone();
                around_u.intersect_with(&free);
                if around_u.count_ones(..) + usize::from(g.adjacent(u, tip)) < 2 {
                    return Step::Dead;
                }
                if !reaches(g, u, y, &free) {
                    return Step::Dead;
                }
            }
            let target = if u_seen { y } else { u };
            let Some(order) = ranked_candidates(g, target, &candidates, &free) else {
                return Step::Dead;
            };
            order
        };

        let mut next_blocked = blocked.clone();
        next_blocked.union_with(g.neighbors(tip));
        next_blocked.insert(tip);
        for c in order {
            self.path.push(c);
            match self.extend(&next_blocked, u_seen || c == u) {
                Step::Dead => {
                    self.path.pop();
                }
                done => return done,
            }
        }
        Step::Dead
    }
}

/// Whether `to` is reachable from `from` through vertices of `within`.
fn reaches(g: &Graph, from: VertexId, to: VertexId, within: &VertexSet) -> bool {
    let mut seen = g.new_set();
    seen.insert(from);
    let mut frontier = Vec::from([from]);
    while let Some(v) = frontier.pop() {
        for w in g.neighbors(v).ones() {
            if w == to {
                return true;
            }
            if within.contains(w) && !seen.put(w) {
                frontier.push(w);
            }
        }
    }
    false
}

/// Candidates that can still reach `target` inside `within`, nearest first
/// (ties by id). `None` when no candidate can.
fn ranked_candidates(g: &Graph, target: VertexId, candidates: &VertexSet, within: &VertexSet) -> Option<Vec<VertexId>> {
    let mut ranked = Vec::new();
    let mut seen = g.new_set();
    seen.insert(target);
    let mut layer = g.new_set();
    layer.insert(target);
    let mut depth = 0usize;
    let mut remaining = candidates.count_ones(..);
    while remaining > 0 && !layer.is_clear() {
        for v in layer.intersection(candidates) {
            ranked.push((depth, v));
            remaining -= 1;
        }
        let mut next = g.new_set();
        for v in layer.ones() {
            next.union_with(g.neighbors(v));
        }
        next.intersect_with(within);
        next.difference_with(&seen);
        seen.union_with(&next);
        layer = next;
        depth += 1;
    }
    if ranked.is_empty() {
        return None;
    }
    ranked.sort_unstable();
    Some(ranked.into_iter().map(|(_, v)| v).collect())
}
