//! Constructors for the graph families: generalized Johnson graphs (Kneser
//! and Johnson as special cases), Cartesian products, Hamming graphs and a
//! few small named graphs.

use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::graph::{Graph, Labels, SubsetLabels, VertexId, MAX_ORDER};
use crate::subset::{binomial, colex_subsets, SubsetVertex, MAX_GROUND};

/// `J(n, r, i)`: the `r`-subsets of `[n]`, adjacent when they share exactly
/// `i` elements. Vertices are numbered in colex order of their subsets.
pub fn generalized_johnson(n: usize, r: usize, i: usize) -> Result<Graph> {
    if i > r || r > n {
        return Err(invalid!("J({n},{r},{i}) requires 0 <= i <= r <= n"));
    }
    if n > MAX_GROUND {
        return Err(invalid!("ground set [{n}] exceeds the supported maximum of {MAX_GROUND}"));
    }
    let order = binomial(n, r);
    if order > MAX_ORDER {
        return Err(invalid!("J({n},{r},{i}) has {order} vertices, more than the supported {MAX_ORDER}"));
    }
    let sets: Vec<_> = colex_subsets(n, r).collect();
    let g = Graph::from_fn(sets.len(), |u, v| (sets[u] & sets[v]).len() == i)?;
    let labels = sets.into_iter().map(|s| SubsetVertex::new(s, n)).collect::<Result<Vec<_>>>()?;
    g.with_labels(Labels::Subsets(SubsetLabels::new(labels)?))
}

/// Kneser graph `K(n, r)`: disjoint `r`-subsets are adjacent.
pub fn kneser(n: usize, r: usize) -> Result<Graph> {
    generalized_johnson(n, r, 0)
}

/// Johnson graph `J(n, r)`: subsets meeting in `r - 1` elements are adjacent.
pub fn johnson(n: usize, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(invalid!("J({n},0) is undefined; r must be at least 1"));
    }
    generalized_johnson(n, r, r - 1)
}

/// `G □ H`. Vertex `(g, h)` gets id `g * n(H) + h` and the pair label `(g, h)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.is_empty() || h.is_empty() {
        return Err(invalid!("Cartesian product factors must be nonempty"));
    }
    let nh = h.order();
    let order = g.order().saturating_mul(nh);
    if order > MAX_ORDER {
        return Err(invalid!("product of order {order} exceeds the supported maximum of {MAX_ORDER}"));
    }
    let pair = |v: VertexId| (v / nh, v % nh);
    let prod = Graph::from_fn(order, |u, v| {
        let ((g1, h1), (g2, h2)) = (pair(u), pair(v));
        (g1 == g2 && h.adjacent(h1, h2)) || (h1 == h2 && g.adjacent(g1, g2))
    })?;
    prod.with_labels(Labels::Pairs((0..order).map(pair).collect()))
}

/// `H_{m_1,...,m_k} = K_{m_1} □ ... □ K_{m_k}`; `hamming(&[2; k])` is `Q_k`.
pub fn hamming(dims: &[usize]) -> Result<Graph> {
    let (&first, rest) = dims.split_first().ok_or_else(|| invalid!("Hamming graph needs at least one dimension"))?;
    if dims.contains(&0) {
        return Err(invalid!("Hamming graph dimensions must be positive, got {dims:?}"));
    }
    let mut acc = basic_graph(BasicKind::Complete, first, 0)?;
    for &m in rest {
        acc = cartesian_product(&acc, &basic_graph(BasicKind::Complete, m, 0)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Complete,
    Path,
    Cycle,
    /// `K_n` minus the matching `{0,1}, {2,3}, ...` of the given size.
    CompleteMinusMatching,
}

/// The named small graphs. `m` is only read for
/// [`BasicKind::CompleteMinusMatching`].
pub fn basic_graph(kind: BasicKind, n: usize, m: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid!("{kind:?} graph needs at least one vertex"));
    }
    match kind {
        BasicKind::Complete => Graph::from_fn(n, |_, _| true),
        BasicKind::Path => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
        BasicKind::Cycle => {
            if n < 3 {
                return Err(invalid!("cycle needs at least 3 vertices, got {n}"));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        BasicKind::CompleteMinusMatching => {
            if m > n / 2 {
                return Err(invalid!("K_{n} has no matching of size {m}"));
            }
            Graph::from_fn(n, |u, v| !(v == u + 1 && u % 2 == 0 && u / 2 < m))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_and_octahedron() {
        let p = generalized_johnson(5, 2, 0).unwrap();
        assert_eq!((p.order(), p.size()), (10, 15));
        let o = generalized_johnson(4, 2, 1).unwrap();
        assert_eq!((o.order(), o.size()), (6, 12));
        assert_eq!(johnson(4, 2).unwrap(), o);
    }

    #[test]
    fn diagonal_family_is_edgeless() {
        let g = generalized_johnson(6, 3, 3).unwrap();
        assert_eq!((g.order(), g.size()), (20, 0));
    }

    #[test]
    fn kneser_counts() {
        let k42 = kneser(4, 2).unwrap();
        assert_eq!((k42.order(), k42.size()), (6, 3));
        let k73 = kneser(7, 3).unwrap();
        assert_eq!(k73.order(), 35);
        assert!(k73.vertices().all(|v| k73.degree(v) == 4));
    }

    #[test]
    fn generalized_johnson_rejects_bad_parameters() {
        assert!(generalized_johnson(5, 2, 3).is_err());
        assert!(generalized_johnson(3, 4, 0).is_err());
        assert!(johnson(5, 0).is_err());
    }

    #[test]
    fn degrees_follow_the_counting_formula() {
        for n in 1..=8 {
            for r in 0..=n {
                for i in 0..=r {
                    let g = generalized_johnson(n, r, i).unwrap();
                    assert_eq!(g.order(), binomial(n, r));
                    let mut expected = binomial(r, i) * binomial(n - r, r - i);
                    if i == r {
                        expected -= 1; // the vertex itself
                    }
                    for v in g.vertices() {
                        assert_eq!(g.degree(v), expected, "J({n},{r},{i}) vertex {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn hamming_and_products() {
        let q3 = hamming(&[2, 2, 2]).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        let fig2 = hamming(&[3, 2]).unwrap();
        assert_eq!((fig2.order(), fig2.size()), (6, 9));
        assert_eq!(hamming(&[4]).unwrap(), basic_graph(BasicKind::Complete, 4, 0).unwrap());
        assert!(hamming(&[]).is_err());
        assert!(hamming(&[2, 0]).is_err());

        let p3 = basic_graph(BasicKind::Path, 3, 0).unwrap();
        let k2 = basic_graph(BasicKind::Complete, 2, 0).unwrap();
        assert_eq!(cartesian_product(&p3, &k2).unwrap().size(), 7);
        assert_eq!(cartesian_product(&p3, &p3).unwrap().size(), 12);
        let k1 = basic_graph(BasicKind::Complete, 1, 0).unwrap();
        assert_eq!(cartesian_product(&k1, &p3).unwrap().without_labels(), p3);
    }

    #[test]
    fn basic_graphs() {
        let g = basic_graph(BasicKind::CompleteMinusMatching, 4, 1).unwrap();
        assert_eq!((g.order(), g.size()), (4, 5));
        assert!(!g.adjacent(0, 1));
        let two = basic_graph(BasicKind::CompleteMinusMatching, 2, 1).unwrap();
        assert_eq!((two.order(), two.size()), (2, 0));
        assert!(basic_graph(BasicKind::CompleteMinusMatching, 5, 3).is_err());
        let c5 = basic_graph(BasicKind::Cycle, 5, 0).unwrap();
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
        assert!(basic_graph(BasicKind::Cycle, 2, 0).is_err());
    }
}
