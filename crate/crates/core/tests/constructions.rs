//! Exhaustive and sampled sweeps of the constructive builders, checked
//! against plain subset arithmetic rather than the library's own graph code.

use std::collections::BTreeMap;

use monophonic_core::generators::{basic_graph, hamming, BasicKind};
use monophonic_core::paths::{Construction, JohnsonPaths, KneserPaths, Lifter, ProductBuilder};
use monophonic_core::subset::colex_subsets;
use monophonic_core::{ElementSet, Graph, SubsetVertex};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent induced-path check on subsets: consecutive members relate by
/// `adjacent`, nonconsecutive ones do not, all distinct.
fn subset_path_ok(sets: &[ElementSet], adjacent: impl Fn(ElementSet, ElementSet) -> bool) -> bool {
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] == sets[j] || adjacent(sets[i], sets[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

fn sets_of(g: &Graph, path: &[usize]) -> Vec<ElementSet> {
    path.iter().map(|&v| g.subset_of(v).unwrap().set()).collect()
}

fn disjoint(a: ElementSet, b: ElementSet) -> bool {
    a.is_disjoint(b)
}

fn kneser_sweep(
    r: usize,
    triples: impl Iterator<Item = (ElementSet, ElementSet, ElementSet)>,
) -> BTreeMap<Construction, usize> {
    let kp = KneserPaths::new(r).unwrap();
    let n = 2 * r + 1;
    let mut cases = BTreeMap::new();
    for (x, y, u) in triples {
        let sv = |s| SubsetVertex::new(s, n).unwrap();
        let w = kp.witness(sv(x), sv(y), sv(u)).unwrap();
        assert!(!w.fallback, "fallback for x={x} y={y} u={u} ({})", w.construction);
        let sets = sets_of(kp.graph(), w.path.vertices());
        assert_eq!((sets[0], *sets.last().unwrap()), (x, y));
        assert!(sets.contains(&u));
        assert!(subset_path_ok(&sets, disjoint), "x={x} y={y} u={u}");
        *cases.entry(w.construction).or_insert(0) += 1;
    }
    cases
}

#[test]
fn odd_graph_seven_three_every_triple() {
    let all: Vec<_> = colex_subsets(7, 3).collect();
    let mut triples = Vec::new();
    for &x in &all {
        for &y in &all {
            if x < y && !x.is_disjoint(y) {
                for &u in &all {
                    if u != x && u != y {
                        triples.push((x, y, u));
                    }
                }
            }
        }
    }
    let cases = kneser_sweep(3, triples.into_iter());
    // D = Z = ∅ forces r = 1 + |A| + s + t >= 4, so that branch waits for K(9,4)
    for c in [1, 3, 4, 5] {
        assert!(cases.contains_key(&Construction::KneserCase(c)), "case {c} never hit: {cases:?}");
    }
}

#[test]
fn odd_graph_nine_four_random_triples() {
    let all: Vec<_> = colex_subsets(9, 4).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(9_4);
    let triples = std::iter::from_fn(|| loop {
        let picks: Vec<_> = all.choose_multiple(&mut rng, 3).copied().collect();
        let (x, y, u) = (picks[0], picks[1], picks[2]);
        if !x.is_disjoint(y) {
            return Some((x, y, u));
        }
    });
    let cases = kneser_sweep(4, triples.take(10_000));
    assert!(cases.contains_key(&Construction::KneserCase(2)), "{cases:?}");
}

#[test]
fn distance_paths_match_the_distance_law() {
    for r in [3usize, 4] {
        let kp = KneserPaths::new(r).unwrap();
        let g = kp.graph();
        for a in g.vertices() {
            let dist = g.bfs_distances(a, None);
            for b in g.vertices().filter(|&b| b != a) {
                let (sa, sb) = (g.subset_of(a).unwrap(), g.subset_of(b).unwrap());
                let t = (sa.set() & sb.set()).len();
                let odd = kp.odd_path(sa, sb, None).unwrap();
                assert_eq!(odd.len(), 2 * t + 1);
                assert!(subset_path_ok(&sets_of(g, odd.vertices()), disjoint));
                let mut best = odd.len();
                if t >= 1 {
                    let even = kp.even_path(sa, sb).unwrap();
                    assert_eq!(even.len(), 2 * (r - t));
                    assert!(subset_path_ok(&sets_of(g, even.vertices()), disjoint));
                    best = best.min(even.len());
                }
                assert_eq!(best, dist[b], "{sa} {sb}");
            }
        }
    }
}

#[test]
fn venn_cardinality_identities() {
    let all: Vec<_> = colex_subsets(7, 3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let p: Vec<_> = all.choose_multiple(&mut rng, 3).copied().collect();
        let sv = |s| SubsetVertex::new(s, 7).unwrap();
        let v = monophonic_core::paths::venn_partition(sv(p[0]), sv(p[1]), sv(p[2]), 7).unwrap();
        let z = v.Z.len() as isize;
        assert_eq!(z, 1 + v.A.len() as isize + v.D.len() as isize - v.U.len() as isize);
        assert_eq!(z, 1 + v.t as isize - v.Y.len() as isize);
        assert_eq!(z, 1 + v.s as isize - v.X.len() as isize);
        let blocks = [v.X, v.Y, v.U, v.A, v.B, v.C, v.D, v.Z];
        assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), 7);
        assert_eq!(blocks.iter().fold(ElementSet::EMPTY, |acc, &b| acc | b), ElementSet::ground(7));
        assert_eq!(v.X | v.A | v.C | v.D, p[0]);
        assert_eq!(v.Y | v.A | v.B | v.D, p[1]);
        assert_eq!(v.U | v.B | v.C | v.D, p[2]);
    }
}

#[test]
fn johnson_every_triple() {
    for (n, r) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)] {
        let jp = JohnsonPaths::new(n, r).unwrap();
        let g = jp.graph();
        let johnson_adj = |a: ElementSet, b: ElementSet| (a & b).len() + 1 == r;
        for x in g.vertices() {
            for y in g.vertices().filter(|&y| y > x && !g.adjacent(x, y)) {
                for u in g.vertices().filter(|&u| u != x && u != y) {
                    let (sx, sy, su) = (g.subset_of(x).unwrap(), g.subset_of(y).unwrap(), g.subset_of(u).unwrap());
                    let w = jp.witness(sx, sy, su).unwrap();
                    assert!(!w.fallback, "J({n},{r}) {sx} {sy} {su}");
                    let sets = sets_of(g, w.path.vertices());
                    assert!(subset_path_ok(&sets, johnson_adj));
                    let t = (sx.set() & su.set()).len();
                    let s = (sy.set() & su.set()).len();
                    assert_eq!(w.path.len(), 2 * r - t - s);
                    assert_eq!(sets[r - t], su.set());
                }
            }
        }
    }
}

#[test]
fn lifting_the_petersen_triangle() {
    let s5: Vec<_> = [[1u8, 2], [1, 3], [2, 3]].iter().map(|e| SubsetVertex::from_elements(e, 5).unwrap()).collect();
    for n in [5usize, 6] {
        let s: Vec<_> = s5.iter().map(|v| SubsetVertex::new(v.set(), n).unwrap()).collect();
        let lifter = Lifter::new(n, 2, &s).unwrap();
        let g = lifter.graph();
        let members: Vec<_> = s.iter().map(|v| v.set()).collect();
        for u in g.vertices() {
            let w = lifter.witness(g.subset_of(u).unwrap()).unwrap();
            assert!(!w.fallback);
            let sets = sets_of(g, w.path.vertices());
            assert!(members.contains(&sets[0]) && members.contains(sets.last().unwrap()));
            assert!(w.path.contains(u));
            assert!(subset_path_ok(&sets, disjoint));
        }
    }
}

fn product_sweep(g: &Graph, h: &Graph) {
    let pb = ProductBuilder::new(g, h).unwrap();
    let prod = pb.graph();
    let nh = h.order();
    let pair = |v: usize| (v / nh, v % nh);
    for s in prod.vertices() {
        for t in prod.vertices().filter(|&t| t > s && !prod.adjacent(s, t)) {
            for m in prod.vertices().filter(|&m| m != s && m != t) {
                let w = pb.witness(pair(s), pair(t), pair(m)).unwrap();
                assert!(!w.fallback, "{:?} {:?} {:?} ({})", pair(s), pair(t), pair(m), w.construction);
                let p = w.path.vertices();
                assert_eq!((p[0], *p.last().unwrap()), (s, t));
                assert!(w.path.contains(m));
                // adjacency read off the factor coordinates
                for i in 0..p.len() {
                    for j in i + 1..p.len() {
                        let ((a, b), (c, d)) = (pair(p[i]), pair(p[j]));
                        let adj = (a == c && h.adjacent(b, d)) || (b == d && g.adjacent(a, c));
                        assert_eq!(adj, j == i + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn product_witnesses_on_small_products() {
    let k2 = basic_graph(BasicKind::Complete, 2, 0).unwrap();
    let k3 = basic_graph(BasicKind::Complete, 3, 0).unwrap();
    let c4 = basic_graph(BasicKind::Cycle, 4, 0).unwrap();
    let c5 = basic_graph(BasicKind::Cycle, 5, 0).unwrap();
    product_sweep(&c4, &k2);
    product_sweep(&k3, &k2);
    product_sweep(&k3, &k3);
    product_sweep(&c5, &k2);
    product_sweep(&hamming(&[2, 2]).unwrap(), &c4);
}
