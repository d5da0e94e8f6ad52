//! Odd graphs `K(2r+1, r)`: the two distance paths and the five-case
//! witness construction.

use alloc::vec::Vec;

use super::{ladder, to_ids, validate_or_search, Construction, Witness};
use crate::error::{invalid, precondition, Result};
use crate::generators::kneser;
use crate::graph::{Graph, InducedPath};
use crate::subset::{ElementSet, OrderedBlock, SubsetVertex};

/// The eight regions of the Venn diagram of `x`, `y`, `u` inside `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[allow(non_snake_case)]
pub struct VennPartition {
    /// `x \ (y ∪ u)`
    pub X: ElementSet,
    /// `y \ (x ∪ u)`
    pub Y: ElementSet,
    /// `u \ (x ∪ y)`
    pub U: ElementSet,
    /// `(x ∩ y) \ u`
    pub A: ElementSet,
    /// `(y ∩ u) \ x`
    pub B: ElementSet,
    /// `(x ∩ u) \ y`
    pub C: ElementSet,
    /// `x ∩ y ∩ u`
    pub D: ElementSet,
    /// `[n] \ (x ∪ y ∪ u)`
    pub Z: ElementSet,
    /// `|C| + |D| = |x ∩ u|`
    pub t: usize,
    /// `|B| + |D| = |y ∩ u|`
    pub s: usize,
}

impl VennPartition {
    pub(crate) fn of(x: ElementSet, y: ElementSet, u: ElementSet, n: usize) -> Self {
        let d = x & y & u;
        let c = (x & u) - y;
        let b = (y & u) - x;
        VennPartition {
            X: x - (y | u),
            Y: y - (x | u),
            U: u - (x | y),
            A: (x & y) - u,
            B: b,
            C: c,
            D: d,
            Z: ElementSet::ground(n) - (x | y | u),
            t: c.len() + d.len(),
            s: b.len() + d.len(),
        }
    }
}

/// Splits `[n]` by membership in `x`, `y` and `u`.
pub fn venn_partition(x: SubsetVertex, y: SubsetVertex, u: SubsetVertex, n: usize) -> Result<VennPartition> {
    for v in [x, y, u] {
        if v.ground() != n {
            return Err(invalid!("{v} lives in [{}], expected [{n}]", v.ground()));
        }
    }
    let r = x.len();
    if y.len() != r || u.len() != r {
        return Err(invalid!("{x}, {y}, {u} do not all have the same size"));
    }
    if x == y || x == u || y == u {
        return Err(invalid!("{x}, {y}, {u} must be pairwise distinct"));
    }
    Ok(VennPartition::of(x.set(), y.set(), u.set(), n))
}

/// Builders on one odd graph `K(2r+1, r)`, sharing the generated graph.
#[derive(Clone, Debug)]
pub struct KneserPaths {
    r: usize,
    graph: Graph,
}

impl KneserPaths {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(invalid!("odd graph K(2r+1, r) needs r >= 1"));
        }
        Ok(KneserPaths { r, graph: kneser(2 * r + 1, r)? })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        2 * self.r + 1
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn check(&self, v: SubsetVertex) -> Result<ElementSet> {
        if v.ground() != self.n() || v.len() != self.r {
            return Err(invalid!("{v} is not a {}-subset of [{}]", self.r, self.n()));
        }
        Ok(v.set())
    }

    fn path_of(&self, sets: &[ElementSet]) -> Result<InducedPath> {
        InducedPath::new(&self.graph, to_ids(&self.graph, self.n(), sets)?)
    }

    /// The `a,b`-path of length `2(r - t)`, `t = |a ∩ b| >= 1`.
    pub fn even_path(&self, a: SubsetVertex, b: SubsetVertex) -> Result<InducedPath> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        let t = (a & b).len();
        if t == 0 {
            return Err(precondition!("{{{a}}} and {{{b}}} are disjoint; the edge is the path"));
        }
        let d = ElementSet::ground(self.n()) - (a | b);
        let p = OrderedBlock::ascending(a - b);
        let q = OrderedBlock::ascending(b - a);
        self.path_of(&ladder(&p, &q, a & b, d, self.r - t))
    }

    /// The `a,b`-path of length `2t + 1`, `t = |a ∩ b|`. `dprime` is a
    /// `t`-subset of `[n] \ (a ∪ b)`, by default its `t` smallest elements.
    pub fn odd_path(&self, a: SubsetVertex, b: SubsetVertex, dprime: Option<ElementSet>) -> Result<InducedPath> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        if a == b {
            return Err(invalid!("odd path needs distinct ends"));
        }
        let c = a & b;
        let t = c.len();
        let d = ElementSet::ground(self.n()) - (a | b);
        let dp = match dprime {
            Some(dp) if dp.len() != t || !dp.is_subset(d) => {
                return Err(invalid!("D' = {{{dp}}} must be a {t}-subset of {{{d}}}"));
            }
            Some(dp) => dp,
            None => OrderedBlock::ascending(d).prefix(t),
        };
        let mut seq = Vec::from([a]);
        seq.extend(ladder(&OrderedBlock::ascending(dp), &OrderedBlock::ascending(c), b - a, (a - b) | (d - dp), t));
        self.path_of(&seq)
    }

    /// An induced `x,y`-path through `u`, for nonadjacent `x`, `y` and `r >= 3`.
    pub fn witness(&self, x: SubsetVertex, y: SubsetVertex, u: SubsetVertex) -> Result<Witness> {
        if self.r < 3 {
            return Err(invalid!("the witness construction needs r >= 3, got {}", self.r));
        }
        let (xs, ys, us) = (self.check(x)?, self.check(y)?, self.check(u)?);
        if xs == ys {
            return Err(invalid!("ends must be distinct"));
        }
        if xs.is_disjoint(ys) {
            return Err(invalid!("{x} and {y} are adjacent"));
        }
        if us == xs || us == ys {
            return Err(invalid!("{u} is an end of the path"));
        }
        let (sets, case) = build(xs, ys, us, self.r, self.n());
        let g = &self.graph;
        let ids = to_ids(g, self.n(), &sets)?;
        let id = |v: SubsetVertex| g.vertex_of(v).expect("checked subset");
        let construction = if case == 0 { Construction::KneserDirect } else { Construction::KneserCase(case) };
        validate_or_search(g, ids, id(x), id(y), id(u), construction)
    }
}

fn build(x: ElementSet, y: ElementSet, u: ElementSet, r: usize, n: usize) -> (Vec<ElementSet>, u8) {
    if u.is_disjoint(x | y) {
        return (Vec::from([x, u, y]), 0);
    }
    if u.is_disjoint(x) {
        let (mut seq, case) = build(y, x, u, r, n);
        seq.reverse();
        return (seq, case);
    }
    let p = VennPartition::of(x, y, u, n);
    let asc = OrderedBlock::ascending;
    let single = |e: u8| ElementSet::singleton(e);

    if p.B.is_empty() && p.D.is_empty() {
        let mut seq = ladder(&OrderedBlock::chain(&[p.X, p.A]), &asc(p.U), p.C, p.Y | p.Z, r - p.t);
        seq.push(y);
        return (seq, 1);
    }

    let (w, v, case) = if p.D.is_empty() && p.Z.len() <= 1 {
        if p.Z.is_empty() {
            let y1 = p.Y.iter().next().expect("|Y| = t + 1");
            let x1 = p.X.iter().next().expect("|X| = s + 1");
            let w = ladder(&asc(p.Y - single(y1)), &asc(p.C), p.U | p.B, p.X | p.A | single(y1), p.t);
            let v = ladder(&asc(p.X - single(x1)), &asc(p.B), p.U | p.C, p.Y | p.A | single(x1), p.s);
            (w, v, 2)
        } else {
            let w = ladder(&asc(p.Y), &asc(p.C), p.U | p.B, p.X | p.A | p.Z, p.t);
            let v = ladder(&asc(p.X), &asc(p.B), p.U | p.C, p.Y | p.A | p.Z, p.s);
            (w, v, 3)
        }
    } else if p.X.is_empty() && p.Y.is_empty() {
        let z = asc(p.Z);
        let (zt, zt1) = (z.nth(p.t).expect("|Z| = t + 1"), z.nth(p.t + 1).expect("|Z| = t + 1"));
        let w = ladder(&z.without(zt), &OrderedBlock::chain(&[p.C, p.D]), p.B | p.U, p.A | single(zt), p.t);
        let v = ladder(&z.without(zt1), &OrderedBlock::chain(&[p.B, p.D]), p.C | p.U, p.A | single(zt1), p.s);
        (w, v, 4)
    } else {
        let w =
            ladder(&OrderedBlock::chain(&[p.A, p.X]), &OrderedBlock::chain(&[p.U, p.B]), p.C | p.D, p.Y | p.Z, r - p.t);
        let v =
            ladder(&OrderedBlock::chain(&[p.A, p.Y]), &OrderedBlock::chain(&[p.U, p.C]), p.B | p.D, p.X | p.Z, r - p.s);
        let mut seq = w;
        seq.extend(v.into_iter().rev().skip(1));
        return (seq, 5);
    };
    // the odd-length cases run x, w_0..w_{2t} = u, v_{2s-1}..v_0, y
    let mut seq = Vec::with_capacity(w.len() + v.len() + 1);
    seq.push(x);
    seq.extend(w);
    seq.extend(v.into_iter().rev().skip(1));
    seq.push(y);
    (seq, case)
}

/// [`KneserPaths::even_path`] on `K(n, r)`, `n = 2r + 1`.
pub fn even_path(a: SubsetVertex, b: SubsetVertex, n: usize) -> Result<InducedPath> {
    KneserPaths::new(odd_rank(n)?)?.even_path(a, b)
}

/// [`KneserPaths::odd_path`] on `K(n, r)`, `n = 2r + 1`.
pub fn odd_path(a: SubsetVertex, b: SubsetVertex, n: usize, dprime: Option<ElementSet>) -> Result<InducedPath> {
    KneserPaths::new(odd_rank(n)?)?.odd_path(a, b, dprime)
}

/// [`KneserPaths::witness`] on `K(2r+1, r)`.
pub fn kneser_witness_path(x: SubsetVertex, y: SubsetVertex, u: SubsetVertex, r: usize) -> Result<Witness> {
    KneserPaths::new(r)?.witness(x, y, u)
}

fn odd_rank(n: usize) -> Result<usize> {
    if n % 2 == 0 || n < 3 {
        return Err(invalid!("distance paths live in K(2r+1, r); n = {n} is not of that form"));
    }
    Ok(n / 2)
}
