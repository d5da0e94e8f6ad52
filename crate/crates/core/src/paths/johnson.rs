//! Johnson graphs `J(n, r)`: two shortest paths glued at the required vertex.

use alloc::vec::Vec;

use super::kneser::VennPartition;
use super::{to_ids, validate_or_search, Construction, Witness};
use crate::error::{invalid, Result};
use crate::generators::johnson;
use crate::graph::Graph;
use crate::subset::{ElementSet, OrderedBlock, SubsetVertex};

#[derive(Clone, Debug)]
pub struct JohnsonPaths {
    n: usize,
    r: usize,
    graph: Graph,
}

impl JohnsonPaths {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 2 || 2 * r > n {
            return Err(invalid!("J({n},{r}) needs 2 <= r <= n/2"));
        }
        Ok(JohnsonPaths { n, r, graph: johnson(n, r)? })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn check(&self, v: SubsetVertex) -> Result<ElementSet> {
        if v.ground() != self.n || v.len() != self.r {
            return Err(invalid!("{v} is not a {}-subset of [{}]", self.r, self.n));
        }
        Ok(v.set())
    }

    /// An induced `x,y`-path through `u` of length `(r - |x∩u|) + (r - |y∩u|)`.
    pub fn witness(&self, x: SubsetVertex, y: SubsetVertex, u: SubsetVertex) -> Result<Witness> {
        let (xs, ys, us) = (self.check(x)?, self.check(y)?, self.check(u)?);
        if (xs & ys).len() + 2 > self.r {
            return Err(invalid!("{x} and {y} are equal or adjacent in J({},{})", self.n, self.r));
        }
        if us == xs || us == ys {
            return Err(invalid!("{u} is an end of the path"));
        }
        let sets = sequence(xs, ys, us, self.n, self.r);
        let g = &self.graph;
        let id = |v: SubsetVertex| g.vertex_of(v).expect("checked subset");
        validate_or_search(g, to_ids(g, self.n, &sets)?, id(x), id(y), id(u), Construction::Johnson)
    }
}

fn sequence(x: ElementSet, y: ElementSet, u: ElementSet, n: usize, r: usize) -> Vec<ElementSet> {
    let p = VennPartition::of(x, y, u, n);
    // shared elements sit first in X' and last in Y'; U sits first in B' and last in C'
    let xp = OrderedBlock::chain(&[p.A, p.X]);
    let yp = OrderedBlock::chain(&[p.Y, p.A]);
    let bp = OrderedBlock::chain(&[p.U, p.B]);
    let cp = OrderedBlock::chain(&[p.C, p.U]);
    let (m, k) = (r - p.t, r - p.s);
    let mut seq: Vec<ElementSet> = (0..=m).map(|i| bp.prefix(i) | xp.suffix(m - i) | p.C | p.D).collect();
    seq.extend((0..k).rev().map(|j| cp.suffix(j) | yp.prefix(k - j) | p.B | p.D));
    seq
}

/// [`JohnsonPaths::witness`] on `J(n, r)`.
pub fn johnson_witness_path(x: SubsetVertex, y: SubsetVertex, u: SubsetVertex, n: usize, r: usize) -> Result<Witness> {
    JohnsonPaths::new(n, r)?.witness(x, y, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(e: &[u8], n: usize) -> SubsetVertex {
        SubsetVertex::from_elements(e, n).unwrap()
    }

    #[test]
    fn small_examples() {
        let jp = JohnsonPaths::new(4, 2).unwrap();
        let w = jp.witness(sv(&[1, 2], 4), sv(&[3, 4], 4), sv(&[1, 3], 4)).unwrap();
        let g = jp.graph();
        let ids: Vec<_> = [[1, 2], [1, 3], [3, 4]].iter().map(|e| g.vertex_of(sv(e, 4)).unwrap()).collect();
        assert_eq!(w.path.vertices(), ids.as_slice());
        assert!(!w.fallback);

        let jp = JohnsonPaths::new(6, 3).unwrap();
        let u = sv(&[2, 4, 6], 6);
        let w = jp.witness(sv(&[1, 2, 3], 6), sv(&[1, 4, 5], 6), u).unwrap();
        assert_eq!(w.path.len(), 4);
        assert!(!w.fallback && w.path.contains(jp.graph().vertex_of(u).unwrap()));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(JohnsonPaths::new(5, 3).is_err());
        assert!(JohnsonPaths::new(5, 1).is_err());
        let jp = JohnsonPaths::new(6, 3).unwrap();
        assert!(jp.witness(sv(&[1, 2, 3], 6), sv(&[1, 2, 4], 6), sv(&[4, 5, 6], 6)).is_err());
        assert!(jp.witness(sv(&[1, 2, 3], 6), sv(&[4, 5, 6], 6), sv(&[4, 5, 6], 6)).is_err());
    }
}
