//! Cartesian products of strongly 2-monophonic graphs.

use alloc::vec::Vec;

use super::{validate_or_search, Construction, Witness};
use crate::engine::{Engine, PathSearch};
use crate::error::{invalid, precondition, Result};
use crate::generators::cartesian_product;
use crate::graph::{Graph, InducedPath, VertexId};

fn is_p3(g: &Graph) -> bool {
    g.order() == 3 && g.size() == 2
}

/// Pairs of induced paths `x..y`, `y..z` meeting only in `y`.
pub struct DisjointPaths<'g> {
    g: &'g Graph,
    engine: Engine<'g>,
}

impl<'g> DisjointPaths<'g> {
    /// Certifies that `g` is complete or strongly 2-monophonic, and not `P_3`.
    pub fn new(g: &'g Graph) -> Result<Self> {
        if is_p3(g) {
            return Err(precondition!("P_3 has no disjoint path pairs through its middle"));
        }
        let engine = Engine::new(g);
        if !g.is_complete() && !engine.is_strongly_2_monophonic()?.holds {
            return Err(precondition!("graph is neither complete nor strongly 2-monophonic"));
        }
        Ok(DisjointPaths { g, engine })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub(crate) fn through(&self, x: VertexId, y: VertexId, via: VertexId) -> Result<InducedPath> {
        match self.engine.induced_path_through(x, y, via)? {
            PathSearch::Found(p) => Ok(p),
            PathSearch::NoPath => Err(precondition!("no induced {x},{y}-path through {via}")),
            PathSearch::BudgetExceeded => Err(crate::Error::BudgetExceeded { budget: self.engine.budget() }),
        }
    }

    pub fn pair(&self, x: VertexId, y: VertexId, z: VertexId) -> Result<(InducedPath, InducedPath)> {
        let g = self.g;
        for v in [x, y, z] {
            g.check_vertex(v)?;
        }
        if x == y || y == z || x == z {
            return Err(invalid!("{x}, {y}, {z} must be distinct"));
        }
        let (p, q) = self.build(x, y, z)?;
        let p = InducedPath::new(g, p)?;
        let q = InducedPath::new(g, q)?;
        let shared = p.vertices().iter().filter(|v| q.contains(**v)).count();
        if shared != 1 || p.target() != y || q.source() != y || p.source() != x || q.target() != z {
            return Err(precondition!("path pair for {x},{y},{z} failed validation"));
        }
        Ok((p, q))
    }

    fn build(&self, x: VertexId, y: VertexId, z: VertexId) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
        let g = self.g;
        if !g.adjacent(x, z) {
            let r = self.through(x, z, y)?.into_vertices();
            let k = r.iter().position(|&v| v == y).expect("path contains y");
            return Ok((r[..=k].to_vec(), r[k..].to_vec()));
        }
        if g.adjacent(x, y) && g.adjacent(y, z) {
            return Ok((Vec::from([x, y]), Vec::from([y, z])));
        }
        if g.adjacent(y, z) {
            let (p, q) = self.build(z, y, x)?;
            return Ok((q.into_iter().rev().collect(), p.into_iter().rev().collect()));
        }
        let mut pivots = g.neighbors(x).clone();
        pivots.difference_with(&g.closed_neighbors(z));
        let Some(xp) = pivots.ones().next() else {
            return Err(precondition!("N[{x}] is inside N[{z}] although {z} is not universal"));
        };
        if xp == y {
            let mut allowed = g.vertex_set();
            allowed.set(x, false);
            let q = g.shortest_path(y, z, Some(&allowed)).ok_or_else(|| precondition!("{x} separates {y} from {z}"))?;
            return Ok((Vec::from([x, y]), q.into_vertices()));
        }
        let v = self.through(xp, z, y)?.into_vertices();
        let j = v.iter().position(|&w| w == y).expect("path contains y");
        let t = (0..=j).rev().find(|&i| g.adjacent(v[i], x)).expect("x' is adjacent to x");
        let mut p = Vec::from([x]);
        p.extend_from_slice(&v[t..=j]);
        Ok((p, v[j..].to_vec()))
    }
}

/// [`DisjointPaths::pair`] after certifying `g`.
pub fn disjoint_path_pair(g: &Graph, x: VertexId, y: VertexId, z: VertexId) -> Result<(InducedPath, InducedPath)> {
    DisjointPaths::new(g)?.pair(x, y, z)
}

/// Witness paths in `G □ H`; vertex `(g, h)` has id `g * n(H) + h`.
pub struct ProductBuilder<'a> {
    product: Graph,
    g: DisjointPaths<'a>,
    h: DisjointPaths<'a>,
}

impl<'a> ProductBuilder<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Result<Self> {
        for f in [g, h] {
            if !f.is_connected()? {
                return Err(precondition!("product factors must be connected"));
            }
        }
        Ok(ProductBuilder { product: cartesian_product(g, h)?, g: DisjointPaths::new(g)?, h: DisjointPaths::new(h)? })
    }

    pub fn graph(&self) -> &Graph {
        &self.product
    }

    pub fn id(&self, (x, a): (VertexId, VertexId)) -> VertexId {
        x * self.h.g.order() + a
    }

    fn row(&self, path: &[VertexId], a: VertexId) -> Vec<VertexId> {
        path.iter().map(|&x| self.id((x, a))).collect()
    }

    fn column(&self, x: VertexId, path: &[VertexId]) -> Vec<VertexId> {
        path.iter().map(|&a| self.id((x, a))).collect()
    }

    /// An induced `src,dst`-path of `G □ H` through `via`.
    pub fn witness(
        &self,
        src: (VertexId, VertexId),
        dst: (VertexId, VertexId),
        via: (VertexId, VertexId),
    ) -> Result<Witness> {
        let (gg, hh) = (self.g.g, self.h.g);
        for (v, w) in [src, dst, via] {
            gg.check_vertex(v)?;
            hh.check_vertex(w)?;
        }
        let (s, t, m) = (self.id(src), self.id(dst), self.id(via));
        if s == t || self.product.adjacent(s, t) {
            return Err(invalid!("{src:?} and {dst:?} must be distinct and nonadjacent"));
        }
        if m == s || m == t {
            return Err(invalid!("{via:?} is an end of the path"));
        }
        let ((x, a), (y, b), (z, c)) = (src, dst, via);
        let g_short = |u: VertexId, v: VertexId| gg.shortest_path(u, v, None).expect("connected").into_vertices();
        let h_short = |u: VertexId, v: VertexId| hh.shortest_path(u, v, None).expect("connected").into_vertices();
        let mut seq: Vec<VertexId> = Vec::new();

        let construction = if a == b {
            if c == a {
                seq.extend(self.row(self.g.through(x, y, z)?.vertices(), a));
            } else {
                let down = h_short(a, c);
                let across = if z == x || z == y { g_short(x, y) } else { self.g.through(x, y, z)?.into_vertices() };
                seq.extend(self.column(x, &down));
                seq.extend(self.row(&across, c).into_iter().skip(1));
                seq.extend(self.column(y, &down).into_iter().rev().skip(1));
            }
            Construction::ProductLayer
        } else if x == y {
            if z == x {
                seq.extend(self.column(x, self.h.through(a, b, c)?.vertices()));
            } else {
                let across = g_short(x, z);
                let down = if c == a || c == b { h_short(a, b) } else { self.h.through(a, b, c)?.into_vertices() };
                seq.extend(self.row(&across, a));
                seq.extend(self.column(z, &down).into_iter().skip(1));
                seq.extend(self.row(&across, b).into_iter().rev().skip(1));
            }
            Construction::ProductLayer
        } else if (z == x || z == y) && (c == a || c == b) {
            if (z, c) == (x, b) {
                seq.extend(self.column(x, &h_short(a, b)));
                seq.extend(self.row(&g_short(x, y), b).into_iter().skip(1));
            } else {
                seq.extend(self.row(&g_short(x, y), a));
                seq.extend(self.column(y, &h_short(a, b)).into_iter().skip(1));
            }
            Construction::ProductCase1
        } else if c == a || c == b {
            let (p1, p2) = self.g.pair(x, z, y)?;
            seq.extend(self.row(p1.vertices(), a));
            seq.extend(self.column(z, &h_short(a, b)).into_iter().skip(1));
            seq.extend(self.row(p2.vertices(), b).into_iter().skip(1));
            Construction::ProductCase1
        } else if z == x || z == y {
            let (q1, q2) = self.h.pair(a, c, b)?;
            seq.extend(self.column(x, q1.vertices()));
            seq.extend(self.row(&g_short(x, y), c).into_iter().skip(1));
            seq.extend(self.column(y, q2.vertices()).into_iter().skip(1));
            Construction::ProductCase1
        } else {
            let (p1, p2) = self.g.pair(x, z, y)?;
            let (q1, q2) = self.h.pair(a, c, b)?;
            seq.extend(self.row(p1.vertices(), a));
            seq.extend(self.column(z, q1.vertices()).into_iter().skip(1));
            seq.extend(self.row(p2.vertices(), c).into_iter().skip(1));
            seq.extend(self.column(y, q2.vertices()).into_iter().skip(1));
            Construction::ProductCase2
        };
        validate_or_search(&self.product, seq, s, t, m, construction)
    }
}

/// [`ProductBuilder::witness`] after certifying both factors.
pub fn product_witness_path(
    g: &Graph,
    h: &Graph,
    src: (VertexId, VertexId),
    dst: (VertexId, VertexId),
    via: (VertexId, VertexId),
) -> Result<Witness> {
    ProductBuilder::new(g, h)?.witness(src, dst, via)
}
