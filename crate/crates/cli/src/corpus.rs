//! Graph collections swept by the corpus-wide claims.

use monophonic_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every labelled graph on `n` vertices (`2^(n(n-1)/2)` of them), in order
/// of the edge-subset bitmask over the pairs `(u, v)`, `u < v`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("valid edge list")
    })
}

/// `count` seeded Erdős–Rényi graphs with order in `orders` and a random
/// edge probability between 0.25 and 0.8.
pub fn random_graphs(count: usize, orders: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(orders.clone());
            let p: f64 = rng.random_range(0.25..0.8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).expect("valid edge list")
        })
        .collect()
}

/// Chord check by adjacency lookups alone.
pub fn chordless(g: &Graph, seq: &[usize]) -> bool {
    (0..seq.len()).all(|i| (i + 1..seq.len()).all(|j| seq[i] != seq[j] && g.adjacent(seq[i], seq[j]) == (j == i + 1)))
}

/// `K_n` with exactly one edge removed.
pub fn is_complete_minus_edge(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.size() + 1 == n * (n - 1) / 2
}
