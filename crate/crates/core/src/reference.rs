//! Naive exponential oracles used to cross-check the pruned searches. They
//! enumerate every simple path and keep the induced ones, so they are only
//! usable on graphs with a handful of vertices.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexId, VertexSet};

/// Every induced `x,y`-path of `g`, in DFS order.
pub fn all_induced_paths(g: &Graph, x: VertexId, y: VertexId) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut path = Vec::from([x]);
    let mut on_path = g.new_set();
    on_path.insert(x);
    simple_paths(g, y, &mut path, &mut on_path, &mut |p| {
        if g.is_induced_path(p).unwrap_or(false) {
            out.push(p.to_vec());
        }
    });
    out
}

fn simple_paths(
    g: &Graph,
    y: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut VertexSet,
    visit: &mut dyn FnMut(&[VertexId]),
) {
    let tip = *path.last().expect("nonempty");
    if tip == y {
        visit(path);
        return;
    }
    for w in g.neighbors(tip).ones() {
        if !on_path.put(w) {
            path.push(w);
            simple_paths(g, y, path, on_path, visit);
            path.pop();
            on_path.set(w, false);
        }
    }
}

pub fn induced_path_through(g: &Graph, x: VertexId, y: VertexId, u: VertexId) -> Option<Vec<VertexId>> {
    all_induced_paths(g, x, y).into_iter().find(|p| p.contains(&u))
}

/// `J(x, y)` as the union of all induced `x,y`-paths (plus `x` and `y`).
pub fn interval(g: &Graph, x: VertexId, y: VertexId) -> VertexSet {
    let mut members = g.new_set();
    members.insert(x);
    members.insert(y);
    for p in all_induced_paths(g, x, y) {
        members.extend(p);
    }
    members
}

/// The strongly 2-monophonic property straight from the definition.
pub fn is_strongly_2_monophonic(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 || (g.is_complete() && n != 2) {
        return false;
    }
    (0..n).all(|x| (x + 1..n).all(|y| g.adjacent(x, y) || interval(g, x, y).count_ones(..) == n))
}
