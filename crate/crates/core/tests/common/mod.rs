//! Graph corpora and brute-force checks shared by the integration tests.
#![allow(dead_code)]

use monophonic_core::generators::{basic_graph, cartesian_product, hamming, johnson, kneser, BasicKind};
use monophonic_core::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every labelled graph on `n` vertices, one per edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// `count` seeded random graphs with 6 to 8 vertices and varying density.
pub fn random_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(6..=8);
            let p: f64 = rng.random_range(0.25..0.8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Products and families named in the claims, plus a few small classics.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    let basic = |k, n, m| basic_graph(k, n, m).unwrap();
    let (k2, k3) = (basic(BasicKind::Complete, 2, 0), basic(BasicKind::Complete, 3, 0));
    let (p3, c5) = (basic(BasicKind::Path, 3, 0), basic(BasicKind::Cycle, 5, 0));
    vec![
        ("Q2", hamming(&[2, 2]).unwrap()),
        ("Q3", hamming(&[2, 2, 2]).unwrap()),
        ("Q4", hamming(&[2, 2, 2, 2]).unwrap()),
        ("K3xK2", cartesian_product(&k3, &k2).unwrap()),
        ("K3xK3", cartesian_product(&k3, &k3).unwrap()),
        ("C5xK2", cartesian_product(&c5, &k2).unwrap()),
        ("P3xK2", cartesian_product(&p3, &k2).unwrap()),
        ("P3xP3", cartesian_product(&p3, &p3).unwrap()),
        ("K(5,2)", kneser(5, 2).unwrap()),
        ("J(5,2)", johnson(5, 2).unwrap()),
        ("J(6,2)", johnson(6, 2).unwrap()),
        ("C6", basic(BasicKind::Cycle, 6, 0)),
        ("C5", c5),
        ("P5", basic(BasicKind::Path, 5, 0)),
        ("K6-e", basic(BasicKind::CompleteMinusMatching, 6, 1)),
        ("K6-3e", basic(BasicKind::CompleteMinusMatching, 6, 3)),
        ("K5", basic(BasicKind::Complete, 5, 0)),
    ]
}

/// Chord check using nothing but adjacency lookups.
pub fn chordless(g: &Graph, seq: &[usize]) -> bool {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] || g.adjacent(seq[i], seq[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for (w, s) in seen.iter_mut().enumerate() {
            if g.adjacent(v, w) && !*s {
                *s = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Vertex subsets of a small graph as bitmasks.
pub fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0u32..1 << n
}

pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn is_clique(g: &Graph, mask: u32) -> bool {
    let vs = members(mask);
    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.adjacent(a, b)))
}

/// Whether some induced cycle of length at least 4 exists, by checking every
/// vertex subset for a connected 2-regular induced subgraph.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.order();
    subsets(n).filter(|m| m.count_ones() >= 4).any(|mask| {
        let vs = members(mask);
        let two_regular = vs.iter().all(|&v| vs.iter().filter(|&&w| g.adjacent(v, w)).count() == 2);
        if !two_regular {
            return false;
        }
        let (sub, _) = g.induced_subgraph(&vs.iter().copied().collect());
        is_connected(&sub)
    })
}

/// Brute-force clique number.
pub fn clique_number(g: &Graph) -> usize {
    subsets(g.order()).filter(|&m| is_clique(g, m)).map(|m| m.count_ones() as usize).max().unwrap_or(0)
}
