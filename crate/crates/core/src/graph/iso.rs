use std::collections::HashMap;

use super::Graph;
use crate::caps::Caps;
use crate::error::Result;

/// Both graphs side by side: ids `0..ng` belong to `g`, `ng..` to `h`.
struct Joint<'a> {
    g: &'a Graph,
    h: &'a Graph,
    ng: usize,
}

impl Joint<'_> {
    fn len(&self) -> usize {
        self.ng + self.h.vertex_count()
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        if v < self.ng {
            self.g.neighbors(v).iter().collect()
        } else {
            self.h.neighbors(v - self.ng).iter().map(|w| w + self.ng).collect()
        }
    }
}

/// Renumbers `keys` densely in sorted order.
fn rank<K: Ord + Clone + std::hash::Hash>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ids: HashMap<&K, u32> = sorted.iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
    (keys.iter().map(|k| ids[k]).collect(), sorted.len())
}

fn refine(joint: &Joint<'_>, nbrs: &[Vec<usize>], mut colors: Vec<u32>) -> Vec<u32> {
    let (mut current, mut classes) = rank(&colors);
    colors = current.clone();
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..joint.len())
            .map(|v| {
                let mut s: Vec<u32> = nbrs[v].iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let (next, next_classes) = rank(&sigs);
        if next_classes == classes {
            return current;
        }
        current = next;
        classes = next_classes;
        colors = current.clone();
    }
}

fn balanced(colors: &[u32], ng: usize) -> bool {
    let mut count: HashMap<u32, i64> = HashMap::new();
    for (v, &c) in colors.iter().enumerate() {
        *count.entry(c).or_default() += if v < ng { 1 } else { -1 };
    }
    count.values().all(|&c| c == 0)
}

fn search(joint: &Joint<'_>, nbrs: &[Vec<usize>], colors: Vec<u32>) -> Option<Vec<usize>> {
    let colors = refine(joint, nbrs, colors);
    if !balanced(&colors, joint.ng) {
        return None;
    }
    let ng = joint.ng;
    let mut members: HashMap<u32, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for (v, &c) in colors.iter().enumerate() {
        let e = members.entry(c).or_default();
        if v < ng {
            e.0.push(v);
        } else {
            e.1.push(v - ng);
        }
    }
    // smallest non-singleton class, ties broken by its lowest vertex of g
    let target = members
        .values()
        .filter(|(a, _)| a.len() > 1)
        .min_by_key(|(a, _)| (a.len(), a[0]));
    match target {
        None => {
            let mut map = vec![0; ng];
            for (a, b) in members.values() {
                map[a[0]] = b[0];
            }
            verify_isomorphism(joint.g, joint.h, &map).then_some(map)
        }
        Some((a, b)) => {
            let v = a[0];
            let fresh = colors.iter().max().map_or(0, |m| m + 1);
            for &w in b {
                let mut next = colors.clone();
                next[v] = fresh;
                next[ng + w] = fresh;
                if let Some(map) = search(joint, nbrs, next) {
                    return Some(map);
                }
            }
            None
        }
    }
}

/// Decides `g ≅ h` with loops mapped to loops. On success returns the bijection
/// as `map[v] = image of v`. Both graphs must fit the solver cap.
pub fn is_isomorphic(g: &Graph, h: &Graph, caps: &Caps) -> Result<Option<Vec<usize>>> {
    caps.check_solver("isomorphism", g.vertex_count().max(h.vertex_count()))?;
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count() {
        return Ok(None);
    }
    let joint = Joint { g, h, ng: g.vertex_count() };
    let nbrs: Vec<Vec<usize>> = (0..joint.len()).map(|v| joint.neighbors(v)).collect();
    let colors: Vec<u32> = (0..joint.len())
        .map(|v| if v < joint.ng { g.has_loop(v) } else { h.has_loop(v - joint.ng) } as u32)
        .collect();
    Ok(search(&joint, &nbrs, colors))
}

/// Checks that `map` is a bijection `V(g) -> V(h)` preserving adjacency,
/// non-adjacency and loops.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.vertex_count();
    if h.vertex_count() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    if g.edge_count() != h.edge_count() {
        return false;
    }
    (0..n).all(|v| g.has_loop(v) == h.has_loop(map[v])) && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}
