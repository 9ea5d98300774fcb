//! Solver and builder properties checked against brute force on small
//! random graphs and on small TD instances.

use std::sync::Arc;

use proptest::prelude::*;
use tdgraph::graph::{build_td, build_td_closed, build_zero_divisor_graph, is_isomorphic, tensor_product, verify_isomorphism};
use tdgraph::invariants::*;
use tdgraph::{Caps, Graph, RingSpec, RingVector};

/// Random graph on `lo..=hi` vertices, optionally with loops.
fn graph(lo: usize, hi: usize, loops: bool) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(any::<bool>(), pairs), prop::collection::vec(any::<bool>(), n))
    })
    .prop_map(move |(n, bits, lbits)| {
        let mut g = Graph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        if loops {
            for (v, &l) in lbits.iter().enumerate() {
                if l {
                    g.set_loop(v);
                }
            }
        }
        g
    })
}

fn permute(g: &Graph, p: &[usize]) -> Graph {
    let mut h = Graph::new(g.vertex_count());
    for (u, v) in g.edges() {
        h.add_edge(p[u], p[v]);
    }
    for v in g.loop_set().iter() {
        h.set_loop(p[v]);
    }
    h
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(acc: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if acc.len() == used.len() {
            out.push(acc.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                acc.push(i);
                rec(acc, used, out);
                acc.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count() && permutations(g.vertex_count()).iter().any(|p| verify_isomorphism(g, h, p))
}

/// Does `g` have a K5 or K3,3 minor? Tries every assignment of vertices to
/// branch sets (or to none) and checks connectivity and adjacency.
fn has_kuratowski_minor(g: &Graph) -> bool {
    let n = g.vertex_count();
    let k33 = |a: usize, b: usize| (a < 3) != (b < 3);
    let k5 = |_: usize, _: usize| true;
    minor(g, n, 5, &k5) || minor(g, n, 6, &k33)
}

fn minor(g: &Graph, n: usize, parts: usize, need: &dyn Fn(usize, usize) -> bool) -> bool {
    let mut assign = vec![parts; n];
    search(g, 0, parts, &mut assign, need)
}

fn search(g: &Graph, v: usize, parts: usize, assign: &mut [usize], need: &dyn Fn(usize, usize) -> bool) -> bool {
    if v == assign.len() {
        return branch_sets_ok(g, parts, assign, need);
    }
    for p in 0..=parts {
        assign[v] = p;
        if search(g, v + 1, parts, assign, need) {
            return true;
        }
    }
    assign[v] = parts;
    false
}

fn branch_sets_ok(g: &Graph, parts: usize, assign: &[usize], need: &dyn Fn(usize, usize) -> bool) -> bool {
    let n = assign.len();
    for p in 0..parts {
        let members: Vec<usize> = (0..n).filter(|&v| assign[v] == p).collect();
        if members.is_empty() {
            return false;
        }
        let mut seen = vec![members[0]];
        let mut i = 0;
        while i < seen.len() {
            let u = seen[i];
            for &w in &members {
                if !seen.contains(&w) && g.has_edge(u, w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        if seen.len() != members.len() {
            return false;
        }
    }
    for a in 0..parts {
        for b in a + 1..parts {
            if need(a, b) && !(0..n).any(|u| assign[u] == a && (0..n).any(|w| assign[w] == b && g.has_edge(u, w))) {
                return false;
            }
        }
    }
    true
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn small_ring() -> impl Strategy<Value = (String, usize)> {
    prop::sample::select(vec![
        ("Z2", 2), ("Z2", 3), ("Z2", 4), ("Z3", 2), ("Z3", 3), ("Z4", 2), ("Z4", 3), ("Z5", 2),
        ("Z6", 2), ("GF(4)", 2), ("Z2xZ2", 2), ("Z8", 2), ("Z9", 2), ("Z2xZ3", 2),
    ])
    .prop_map(|(r, n)| (r.to_string(), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphism_matches_brute_force(g in graph(1, 7, true), h in graph(1, 7, true), p in any::<u64>()) {
        let caps = Caps::default();
        let answer = is_isomorphic(&g, &h, &caps).unwrap();
        prop_assert_eq!(answer.is_some(), brute_isomorphic(&g, &h));
        if let Some(map) = answer {
            prop_assert!(verify_isomorphism(&g, &h, &map));
        }
        // a relabelled copy is always isomorphic
        let n = g.vertex_count();
        let perms = permutations(n);
        let q = &perms[(p % perms.len() as u64) as usize];
        let map = is_isomorphic(&g, &permute(&g, q), &caps).unwrap();
        prop_assert!(map.is_some());
        prop_assert!(verify_isomorphism(&g, &permute(&g, q), &map.unwrap()));
    }

    #[test]
    fn planarity_matches_minor_oracle(g in graph(1, 7, false)) {
        let verdict = planarity(&g, &Caps::default()).unwrap();
        prop_assert_eq!(verdict.is_planar(), !has_kuratowski_minor(&g));
        match verdict {
            Planarity::Planar { rotation } => prop_assert!(verify_embedding(&g, &rotation)),
            Planarity::Nonplanar { witness } => prop_assert!(verify_kuratowski(&g, &witness)),
        }
    }

    #[test]
    fn solvers_match_brute_force(g in graph(1, 11, true)) {
        let caps = Caps::default();
        let n = g.vertex_count();
        let all: Vec<Vec<usize>> = subsets(n).collect();
        let best = |ok: &dyn Fn(&[usize]) -> bool, max: bool| {
            let it = all.iter().filter(|s| ok(s)).map(|s| s.len());
            if max { it.max().unwrap() } else { it.min().unwrap() }
        };
        let d = minimum_dominating_set(&g, &caps).unwrap();
        prop_assert!(is_dominating(&g, &d));
        prop_assert_eq!(d.len(), best(&|s| is_dominating(&g, s), false));
        let c = maximum_clique(&g, &caps).unwrap();
        prop_assert!(is_clique(&g, &c));
        prop_assert_eq!(c.len(), best(&|s| is_clique(&g, s), true));
        let i = maximum_independent_set(&g, &caps).unwrap();
        prop_assert!(is_independent(&g, &i));
        prop_assert_eq!(i.len(), best(&|s| is_independent(&g, s), true));
        let l = maximum_clique_loop(&g, &caps).unwrap();
        prop_assert!(is_clique_loop(&g, &l));
        prop_assert_eq!(l.len(), best(&|s| is_clique_loop(&g, s), true));
    }

    #[test]
    fn td_witnesses_certify((r, n) in small_ring()) {
        let caps = Caps::default();
        let ring = RingSpec::parse(&r).unwrap();
        let g = build_td(&ring, n, &caps).unwrap();
        prop_assert!(is_dominating(&g, &minimum_dominating_set(&g, &caps).unwrap()));
        prop_assert!(is_clique(&g, &maximum_clique(&g, &caps).unwrap()));
        prop_assert!(is_independent(&g, &maximum_independent_set(&g, &caps).unwrap()));
        let closed = build_td_closed(&ring, n, &caps).unwrap();
        prop_assert!(is_clique_loop(&closed, &maximum_clique_loop(&closed, &caps).unwrap()));
        match planarity(&g, &caps).unwrap() {
            Planarity::Planar { rotation } => prop_assert!(verify_embedding(&g, &rotation)),
            Planarity::Nonplanar { witness } => prop_assert!(verify_kuratowski(&g, &witness)),
        }
        // adjacency is orthogonality, loops are isotropic vectors
        for u in 0..closed.vertex_count() {
            let x = closed.vector(u).unwrap();
            prop_assert_eq!(closed.has_loop(u), x.norm_idx() == 0);
            for v in u + 1..closed.vertex_count() {
                prop_assert_eq!(closed.has_edge(u, v), x.dot_idx(&closed.vector(v).unwrap()).unwrap() == 0);
            }
        }
    }

    #[test]
    fn solvers_are_deterministic((r, n) in small_ring()) {
        let caps = Caps::default();
        let g = build_td(&RingSpec::parse(&r).unwrap(), n, &caps).unwrap();
        prop_assert_eq!(minimum_dominating_set(&g, &caps).unwrap(), minimum_dominating_set(&g, &caps).unwrap());
        prop_assert_eq!(maximum_clique(&g, &caps).unwrap(), maximum_clique(&g, &caps).unwrap());
        prop_assert_eq!(maximum_independent_set(&g, &caps).unwrap(), maximum_independent_set(&g, &caps).unwrap());
    }

    #[test]
    fn tensor_product_laws(g in graph(1, 6, true), h in graph(1, 6, true)) {
        let t = tensor_product(&g, &h);
        let m = h.vertex_count();
        prop_assert_eq!(t.vertex_count(), g.vertex_count() * m);
        prop_assert_eq!(t.loop_count(), g.loop_count() * h.loop_count());
        for a in 0..t.vertex_count() {
            for b in a + 1..t.vertex_count() {
                let want = g.adjacent_or_loop(a / m, b / m) && h.adjacent_or_loop(a % m, b % m);
                prop_assert_eq!(t.has_edge(a, b), want);
            }
        }
    }
}

/// Each slot map z -> z e_i embeds the zero-divisor graph as an induced
/// subgraph, and the n copies are vertex-disjoint.
#[test]
fn zero_divisor_graph_embeds_n_times() {
    let caps = Caps::default();
    for r in ["Z4", "Z6", "Z8", "Z9", "Z2xZ2", "Z3xZ3", "Z12", "Z2xZ4"] {
        let ring = Arc::new(RingSpec::parse(r).unwrap());
        let gamma = build_zero_divisor_graph(&ring, &caps).unwrap();
        let zs: Vec<u64> = (0..ring.cardinality()).filter(|&z| z != 0 && ring.is_zero_divisor_idx(z)).collect();
        assert_eq!(gamma.vertex_count(), zs.len(), "{r}");
        for n in [2, 3] {
            let g = build_td(&ring, n, &caps).unwrap();
            let mut seen = std::collections::HashSet::new();
            for i in 0..n {
                let image: Vec<usize> = zs
                    .iter()
                    .map(|&z| {
                        let mut c = vec![0; n];
                        c[i] = z;
                        g.vertex_of(&RingVector::from_indices(ring.clone(), c).unwrap()).unwrap()
                    })
                    .collect();
                for &v in &image {
                    assert!(seen.insert(v), "{r} n={n}: copies overlap");
                }
                for a in 0..zs.len() {
                    for b in a + 1..zs.len() {
                        assert_eq!(gamma.has_edge(a, b), ring.mul_idx(zs[a], zs[b]) == 0);
                        assert_eq!(g.has_edge(image[a], image[b]), gamma.has_edge(a, b), "{r} n={n} slot {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn minor_oracle_sanity() {
    let k5 = Graph::complete(5);
    let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
    let k5_minus = Graph::from_edges(5, &k5.edges().filter(|&e| e != (0, 1)).collect::<Vec<_>>());
    // K3,3 with one edge subdivided
    let sub = Graph::from_edges(7, &[(0, 6), (6, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
    assert!(has_kuratowski_minor(&k5));
    assert!(has_kuratowski_minor(&k33));
    assert!(has_kuratowski_minor(&sub));
    assert!(!has_kuratowski_minor(&k5_minus));
    assert!(!has_kuratowski_minor(&Graph::complete(4)));
}
