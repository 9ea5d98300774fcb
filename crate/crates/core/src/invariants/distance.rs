use std::collections::VecDeque;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;

/// A distance-like quantity that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Serialize for Extended {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v),
            Extended::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl std::fmt::Display for Extended {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("infinity"),
        }
    }
}

/// BFS distances and parents from `s`; `usize::MAX` marks unreachable.
fn bfs(g: &Graph, s: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u).iter() {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

fn path_to(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut p = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        p.push(v);
    }
    p.reverse();
    p
}

/// Diameter with a witness: a shortest path realizing it, or for a
/// disconnected graph one vertex from each of two components.
pub fn diameter(g: &Graph, caps: &Caps) -> Result<(Extended, Vec<usize>)> {
    let n = g.vertex_count();
    caps.check_solver("diameter", n)?;
    if n == 0 {
        return Ok((Extended::Finite(0), Vec::new()));
    }
    let mut best = (0usize, vec![0]);
    for s in 0..n {
        let (dist, parent) = bfs(g, s);
        if let Some(t) = dist.iter().position(|&d| d == usize::MAX) {
            return Ok((Extended::Infinite, vec![s, t]));
        }
        let (t, &d) = dist.iter().enumerate().max_by_key(|&(v, d)| (d, std::cmp::Reverse(v))).unwrap();
        if d > best.0 {
            best = (d, path_to(&parent, t));
        }
    }
    Ok((Extended::Finite(best.0 as u64), best.1))
}

/// Girth (loops ignored) with a shortest cycle as witness.
pub fn girth(g: &Graph, caps: &Caps) -> Result<(Extended, Vec<usize>)> {
    let n = g.vertex_count();
    caps.check_solver("girth", n)?;
    let mut best: Option<(usize, Vec<usize>)> = None;
    for s in 0..n {
        let (dist, parent) = bfs(g, s);
        for (u, v) in g.edges() {
            if dist[u] == usize::MAX || parent[u] == v || parent[v] == u {
                continue;
            }
            let len = dist[u] + dist[v] + 1;
            if best.as_ref().is_some_and(|(b, _)| len >= *b) {
                continue;
            }
            let mut a = path_to(&parent, u);
            let b = path_to(&parent, v);
            // at the minimizing root the two tree paths meet only at `s`
            if a.iter().skip(1).any(|x| b.contains(x)) {
                continue;
            }
            a.extend(b.into_iter().skip(1).rev());
            best = Some((len, a));
        }
        if best.as_ref().is_some_and(|(b, _)| *b == 3) {
            break;
        }
    }
    Ok(match best {
        Some((len, cycle)) => (Extended::Finite(len as u64), cycle),
        None => (Extended::Infinite, Vec::new()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_td;
    use crate::ring::RingSpec;

    fn td(spec: &str, n: usize) -> Graph {
        build_td(&RingSpec::parse(spec).unwrap(), n, &Caps::default()).unwrap()
    }

    #[test]
    fn examples() {
        let caps = Caps::default();
        // every pair of TD(Z2,3) has a common neighbour or is adjacent
        let (d, path) = diameter(&td("Z2", 3), &caps).unwrap();
        assert_eq!(d, Extended::Finite(2));
        assert_eq!(path.len(), 3);
        assert_eq!(diameter(&td("Z3", 2), &caps).unwrap().0, Extended::Infinite);
        let (gi, cycle) = girth(&td("Z2", 3), &caps).unwrap();
        assert_eq!(gi, Extended::Finite(3));
        assert_eq!(cycle.len(), 3);
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(girth(&path, &caps).unwrap().0, Extended::Infinite);
        assert_eq!(serde_json::to_string(&Extended::Infinite).unwrap(), "\"infinity\"");
    }

    #[test]
    fn cycle_witness_is_a_cycle() {
        let caps = Caps::default();
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        let (gi, c) = girth(&g, &caps).unwrap();
        assert_eq!(gi, Extended::Finite(4));
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
        let c8 = Graph::from_edges(8, &(0..8).map(|i| (i, (i + 1) % 8)).collect::<Vec<_>>());
        assert_eq!(girth(&c8, &caps).unwrap().0, Extended::Finite(8));
        assert_eq!(diameter(&c8, &caps).unwrap().0, Extended::Finite(4));
    }
}
