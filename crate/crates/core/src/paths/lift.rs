//! Lifting a monophonic set of `K(n, r)` to `K(n+1, r)`.

use alloc::vec::Vec;

use super::{validate_or_search, Construction, Witness};
use crate::engine::{Engine, PathSearch};
use crate::error::{invalid, precondition, Result};
use crate::generators::kneser;
use crate::graph::{Graph, InducedPath, VertexId};
use crate::subset::{ElementSet, SubsetVertex};

/// A set `S` certified monophonic in `K(n, r)`, producing witnesses for
/// every vertex of `K(n+1, r)`.
#[derive(Clone, Debug)]
pub struct Lifter {
    n: usize,
    r: usize,
    small: Graph,
    big: Graph,
    members: Vec<ElementSet>,
}

impl Lifter {
    pub fn new(n: usize, r: usize, set: &[SubsetVertex]) -> Result<Self> {
        if r == 0 || n < 2 * r {
            return Err(invalid!("lifting needs n >= 2r and r >= 1, got n = {n}, r = {r}"));
        }
        let small = kneser(n, r)?;
        let big = kneser(n + 1, r)?;
        let mut members: Vec<ElementSet> = Vec::new();
        for v in set {
            if v.len() != r || !v.set().is_subset(ElementSet::ground(n)) {
                return Err(invalid!("{v} is not a {r}-subset of [{n}]"));
            }
            if !members.contains(&v.set()) {
                members.push(v.set());
            }
        }
        members.sort_unstable();
        let mut ids = small.new_set();
        for &s in &members {
            ids.insert(id_in(&small, s, n));
        }
        if !Engine::new(&small).is_monophonic_set(&ids)?.holds {
            return Err(precondition!("the given set is not monophonic in K({n},{r})"));
        }
        Ok(Lifter { n, r, small, big, members })
    }

    /// The lifted graph `K(n+1, r)`.
    pub fn graph(&self) -> &Graph {
        &self.big
    }

    fn big_id(&self, s: ElementSet) -> VertexId {
        id_in(&self.big, s, self.n + 1)
    }

    /// An induced path of `K(n+1, r)` between two members of `S` through `u`.
    pub fn witness(&self, u: SubsetVertex) -> Result<Witness> {
        let (n, r) = (self.n, self.r);
        let us = u.set();
        if u.len() != r || !us.is_subset(ElementSet::ground(n + 1)) {
            return Err(invalid!("{u} is not a {r}-subset of [{}]", n + 1));
        }
        let top = (n + 1) as u8;
        let uid = self.big_id(us);
        if !us.contains(top) {
            return self.inherited(us, uid);
        }
        let base = us - ElementSet::singleton(top);
        let outside: Vec<u8> = (ElementSet::ground(n) - base).iter().collect();

        let (seq, construction) = if n == 2 * r {
            let x = ElementSet::from_elements(outside[..r].iter().copied());
            let y = ElementSet::from_elements(outside[1..].iter().copied());
            (Vec::from([self.big_id(x), uid, self.big_id(y)]), Construction::LiftHalfGround)
        } else if let Some(up) =
            outside.iter().map(|&e| base | ElementSet::singleton(e)).find(|s| !self.members.contains(s))
        {
            let Some(path) = self.small_witness(up)? else {
                return Err(precondition!("no member pair of S has an induced path through {{{up}}}"));
            };
            let a: Vec<VertexId> = path.vertices().iter().map(|&v| self.lift_id(v)).collect();
            let i = a.iter().position(|&v| self.big.adjacent(v, uid)).expect("u' has a path neighbour");
            let j = a.iter().rposition(|&v| self.big.adjacent(v, uid)).expect("u' has a path neighbour");
            let mut seq = a[..=i].to_vec();
            seq.push(uid);
            seq.extend_from_slice(&a[j..]);
            (seq, Construction::LiftSplice)
        } else {
            let (i, j) = (outside[0], outside[1]);
            let rest = ElementSet::from_elements(outside[2..].iter().copied().take(r - 1));
            let (si, sj) = (ElementSet::singleton(i), ElementSet::singleton(j));
            let seq = [base | si, sj | rest, us, si | rest, base | sj].map(|s| self.big_id(s));
            (seq.to_vec(), Construction::LiftDetour)
        };

        let (from, to) = (seq[0], *seq.last().expect("nonempty"));
        let in_s = |v: VertexId| self.members.contains(&self.big.subset_of(v).expect("labelled").set());
        if from != to && in_s(from) && in_s(to) {
            return validate_or_search(&self.big, seq, from, to, uid, construction);
        }
        self.search(&self.big, uid, construction)
    }

    fn inherited(&self, us: ElementSet, uid: VertexId) -> Result<Witness> {
        if self.members.contains(&us) {
            return Ok(Witness {
                path: InducedPath::trusted(Vec::from([uid])),
                construction: Construction::LiftInherited,
                fallback: false,
            });
        }
        let path = self
            .small_witness(us)?
            .ok_or_else(|| precondition!("no member pair of S has an induced path through {{{us}}}"))?;
        let lifted = path.vertices().iter().map(|&v| self.lift_id(v)).collect();
        Ok(Witness { path: InducedPath::trusted(lifted), construction: Construction::LiftInherited, fallback: false })
    }

    fn lift_id(&self, v: VertexId) -> VertexId {
        self.big_id(self.small.subset_of(v).expect("labelled").set())
    }

    /// First member pair (in order) with an induced path through `via` in `K(n, r)`.
    fn small_witness(&self, via: ElementSet) -> Result<Option<InducedPath>> {
        let engine = Engine::new(&self.small);
        let v = id_in(&self.small, via, self.n);
        for (k, &a) in self.members.iter().enumerate() {
            for &b in &self.members[k + 1..] {
                let (a, b) = (id_in(&self.small, a, self.n), id_in(&self.small, b, self.n));
                if let PathSearch::Found(p) = engine.induced_path_through(a, b, v)? {
                    return Ok(Some(p));
                }
            }
        }
        Ok(None)
    }

    fn search(&self, g: &Graph, via: VertexId, construction: Construction) -> Result<Witness> {
        let engine = Engine::new(g);
        for (k, &a) in self.members.iter().enumerate() {
            for &b in &self.members[k + 1..] {
                if let PathSearch::Found(path) = engine.induced_path_through(self.big_id(a), self.big_id(b), via)? {
                    return Ok(Witness { path, construction, fallback: true });
                }
            }
        }
        Err(precondition!("no member pair of S has an induced path through vertex {via}"))
    }
}

fn id_in(g: &Graph, s: ElementSet, ground: usize) -> VertexId {
    let v = SubsetVertex::new(s, ground).expect("subset of the ground set");
    g.vertex_of(v).expect("vertex of the family")
}

/// [`Lifter::witness`] for a single vertex.
pub fn lift_witness(n: usize, r: usize, set: &[SubsetVertex], u: SubsetVertex) -> Result<Witness> {
    Lifter::new(n, r, set)?.witness(u)
}
