mod common;

use common::{all_graphs, chordless, is_clique, members, named_graphs, random_graphs, subsets};
use monophonic_core::engine::{Engine, MonophonicNumber, PathSearch};
use monophonic_core::structure::simplicial_vertices;
use monophonic_core::{reference, Graph, VertexSet};

fn agree_with_oracle(g: &Graph) {
    let engine = Engine::new(g);
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            for u in (0..n).filter(|&u| u != x && u != y) {
                let fast = engine.induced_path_through(x, y, u).unwrap();
                let slow = reference::induced_path_through(g, x, y, u);
                match fast {
                    PathSearch::Found(p) => {
                        let p = p.vertices();
                        assert!(slow.is_some(), "engine found a path the oracle missed: {p:?}");
                        assert_eq!((p[0], *p.last().unwrap()), (x, y));
                        assert!(p.contains(&u) && chordless(g, p));
                    }
                    PathSearch::NoPath => assert!(slow.is_none(), "oracle path {slow:?} missed for ({x},{y},{u})"),
                    PathSearch::BudgetExceeded => panic!("budget exceeded on a tiny graph"),
                }
            }
        }
    }
    assert_eq!(engine.is_strongly_2_monophonic().unwrap().holds, reference::is_strongly_2_monophonic(g));
}

#[test]
fn oracle_agreement_on_every_five_vertex_graph() {
    for g in all_graphs(5) {
        agree_with_oracle(&g);
    }
}

#[test]
fn oracle_agreement_on_random_graphs() {
    for g in random_graphs(200, 15) {
        agree_with_oracle(&g);
    }
}

#[test]
fn intervals_are_symmetric_with_valid_witnesses() {
    for (name, g) in named_graphs() {
        let engine = Engine::new(&g);
        for x in g.vertices() {
            for y in g.vertices().filter(|&y| y > x) {
                let xy = engine.monophonic_interval(x, y).unwrap();
                let yx = engine.monophonic_interval(y, x).unwrap();
                assert_eq!(xy.members, yx.members, "{name} ({x},{y})");
                for (&v, path) in &xy.witness {
                    let p = path.vertices();
                    assert!(chordless(&g, p) && p.contains(&v), "{name}");
                    assert_eq!((p[0], *p.last().unwrap()), (x, y));
                }
            }
        }
    }
}

#[test]
fn simplicial_vertices_lie_in_every_monophonic_set() {
    for g in all_graphs(5).step_by(7) {
        let engine = Engine::new(&g);
        let simplicial = simplicial_vertices(&g);
        if let MonophonicNumber::Found { set, .. } = engine.monophonic_number(5).unwrap() {
            assert!(simplicial.is_subset(&set));
        }
        for mask in subsets(5).skip(1) {
            let mut set: VertexSet = members(mask).into_iter().collect();
            set.grow(5);
            if engine.is_monophonic_set(&set).unwrap().holds {
                assert!(simplicial.is_subset(&set), "mask {mask:b}");
            }
        }
    }
}

/// Largest proper m-convex set by enumerating every subset with the naive oracle.
fn brute_convexity(g: &Graph) -> (usize, bool) {
    let n = g.order();
    let intervals: Vec<Vec<u32>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| match x != y && !g.adjacent(x, y) {
                    true => reference::interval(g, x, y).ones().fold(0, |m, v| m | 1 << v),
                    false => 0,
                })
                .collect()
        })
        .collect();
    let mut best = 0;
    let mut only_cliques = true;
    for mask in subsets(n).filter(|&m| m != (1 << n) - 1) {
        let vs = members(mask);
        let convex = vs.iter().all(|&x| vs.iter().all(|&y| intervals[x][y] & !mask == 0));
        if convex {
            best = best.max(vs.len());
            only_cliques &= is_clique(g, mask);
        }
    }
    (best, only_cliques)
}

#[test]
fn convexity_number_equals_clique_number_on_s2m_graphs() {
    let mut checked = 0;
    let corpus = named_graphs().into_iter().map(|(_, g)| g).chain(all_graphs(5)).chain(random_graphs(60, 13));
    for g in corpus.filter(|g| g.order() <= 20) {
        let engine = Engine::new(&g);
        if !engine.is_strongly_2_monophonic().unwrap().holds || g.order() < 2 {
            continue;
        }
        let omega = common::clique_number(&g);
        assert_eq!(engine.convexity_number().unwrap(), omega);
        if g.order() <= 10 {
            let (best, only_cliques) = brute_convexity(&g);
            assert_eq!(best, omega);
            assert!(only_cliques);
        }
        checked += 1;
    }
    assert!(checked > 50, "only {checked} strongly 2-monophonic graphs seen");
}

#[test]
fn convexity_number_matches_brute_force_everywhere() {
    for g in random_graphs(40, 99).into_iter().chain(all_graphs(4)) {
        if g.order() < 2 || g.is_complete() {
            continue;
        }
        assert_eq!(Engine::new(&g).convexity_number().unwrap(), brute_convexity(&g).0);
    }
}
