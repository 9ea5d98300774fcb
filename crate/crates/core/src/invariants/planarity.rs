//! Left-right planarity test with a rotation-system certificate, and
//! Kuratowski subdivision extraction for nonplanar graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K_5` or `K_{3,3}` inside the tested graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl KuratowskiWitness {
    pub fn vertices(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        s.into_iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    /// Clockwise neighbour order around each vertex.
    Planar { rotation: Vec<Vec<usize>> },
    Nonplanar { witness: KuratowskiWitness },
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar { .. })
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

const NONE: usize = usize::MAX;

struct Lr {
    n: usize,
    adj: Vec<Vec<(usize, usize)>>,
    head: Vec<usize>,
    tail: Vec<usize>,
    oriented: Vec<bool>,
    out: Vec<Vec<usize>>,
    out_orig: Vec<Vec<usize>>,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    roots: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<Option<usize>>,
    stack: Vec<ConflictPair>,
    next_pair: usize,
}

impl Lr {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let m = edges.len();
        Lr {
            n,
            adj,
            head: vec![NONE; m],
            tail: vec![NONE; m],
            oriented: vec![false; m],
            out: vec![Vec::new(); n],
            out_orig: Vec::new(),
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            refs: vec![None; m],
            side: vec![1; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![None; m],
            stack: Vec::new(),
            next_pair: 0,
        }
    }

    fn pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        self.next_pair += 1;
        ConflictPair { id: self.next_pair, left, right }
    }

    fn top_id(&self) -> Option<usize> {
        self.stack.last().map(|p| p.id)
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.empty() && self.lowpt[i.high.expect("nonempty interval")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.empty() {
            return self.lowpt[p.right.low.expect("pair is nonempty")];
        }
        if p.right.empty() {
            return self.lowpt[p.left.low.expect("pair is nonempty")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for k in 0..self.adj[v].len() {
            let (w, vw) = self.adj[v][k];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.tail[vw] = v;
            self.head[vw] = w;
            self.out[v].push(vw);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = Some(vw);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < self.height[v] {
                self.nesting[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = self.out[v].clone();
        for (idx, &ei) in out.iter().enumerate() {
            self.stack_bottom[ei] = self.top_id();
            let w = self.head[ei];
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                let p = self.pair(Interval::default(), Interval { low: Some(ei), high: Some(ei) });
                self.stack.push(p);
            }
            if self.lowpt[ei] < self.height[v] {
                let e = e.expect("only non-roots have return edges");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = self.pair(Interval::default(), Interval::default());
        loop {
            let Some(mut q) = self.stack.pop() else { break };
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            let ql = q.right.low.expect("nonempty after swap");
            if self.lowpt[ql] > self.lowpt[e] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[ql] = Some(self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.refs[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.refs[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.head[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.head[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("a return edge keeps a pair on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                (Some(l), None) => Some(l),
                _ => hr,
            };
        }
    }

    /// Runs orientation and testing; true iff planar.
    fn run(&mut self, edge_count: usize) -> bool {
        if self.n > 2 && edge_count > 3 * self.n - 6 {
            return false;
        }
        for v in 0..self.n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        self.out_orig = self.out.clone();
        for v in 0..self.n {
            let nesting = &self.nesting;
            self.out[v].sort_by_key(|&e| nesting[e]);
        }
        let roots = self.roots.clone();
        roots.into_iter().all(|r| self.test(r))
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        while let Some(r) = self.refs[*chain.last().unwrap()] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.refs[a] = None;
        }
        self.side[e]
    }

    /// Clockwise rotation system of a graph that passed `run`.
    fn embedding(&mut self) -> Vec<Vec<usize>> {
        for e in 0..self.head.len() {
            let s = self.sign(e);
            self.nesting[e] *= s;
        }
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            let nesting = &self.nesting;
            self.out[v] = self.out_orig[v].clone();
            self.out[v].sort_by_key(|&e| nesting[e]);
            rot[v] = self.out[v].iter().map(|&e| self.head[e]).collect();
        }
        let mut left_ref = vec![NONE; self.n];
        let mut right_ref = vec![NONE; self.n];
        let roots = self.roots.clone();
        for r in roots {
            self.embed(r, &mut rot, &mut left_ref, &mut right_ref);
        }
        rot
    }

    fn embed(&self, v: usize, rot: &mut [Vec<usize>], left_ref: &mut [usize], right_ref: &mut [usize]) {
        for &ei in &self.out[v] {
            let w = self.head[ei];
            if self.parent_edge[w] == Some(ei) {
                rot[w].insert(0, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed(w, rot, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                let at = rot[w].iter().position(|&x| x == right_ref[w]).expect("reference placed");
                rot[w].insert(at + 1, v);
            } else {
                let at = rot[w].iter().position(|&x| x == left_ref[w]).expect("reference placed");
                rot[w].insert(at, v);
                left_ref[w] = v;
            }
        }
    }
}

/// Deep DFS recursion on big graphs gets its own stack.
fn with_stack<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    if n < 512 {
        return f();
    }
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(64 << 20)
            .spawn_scoped(s, f)
            .expect("spawn planarity thread")
            .join()
            .expect("planarity thread panicked")
    })
}

fn lr_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    with_stack(n, || Lr::new(n, edges).run(edges.len()))
}

/// Checks that a rotation system is a plane embedding of `g` (loops ignored):
/// each row lists the neighbours exactly once and Euler's formula holds per component.
pub fn verify_embedding(g: &Graph, rotation: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    if rotation.len() != n {
        return false;
    }
    let mut pos: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for v in 0..n {
        let row: BTreeSet<usize> = rotation[v].iter().copied().collect();
        if row.len() != rotation[v].len() || row != g.neighbors(v).iter().collect::<BTreeSet<_>>() {
            return false;
        }
        pos[v] = rotation[v].iter().enumerate().map(|(i, &w)| (w, i)).collect();
    }
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = 0i64;
    for (u, v) in g.edges() {
        for start in [(u, v), (v, u)] {
            if seen.contains(&start) {
                continue;
            }
            faces += 1;
            let mut cur = start;
            while seen.insert(cur) {
                let (a, b) = cur;
                let row = &rotation[b];
                let next = row[(pos[b][&a] + 1) % row.len()];
                cur = (b, next);
            }
        }
    }
    let comps = crate::invariants::connected_components(g);
    let with_edges: Vec<_> = comps.iter().filter(|c| c.vertices.len() > 1).collect();
    let verts: i64 = with_edges.iter().map(|c| c.vertices.len() as i64).sum();
    verts - g.edge_count() as i64 + faces == 2 * with_edges.len() as i64
}

/// Checks that `w` is a `K_5` or `K_{3,3}` subdivision made of edges of `g`.
pub fn verify_kuratowski(g: &Graph, w: &KuratowskiWitness) -> bool {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut uniq = BTreeSet::new();
    for &(u, v) in &w.edges {
        let key = (u.min(v), u.max(v));
        if u == v || !g.has_edge(u, v) || !uniq.insert(key) {
            return false;
        }
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let (branch_deg, branch_count) = match w.kind {
        KuratowskiKind::K5 => (4, 5),
        KuratowskiKind::K33 => (3, 6),
    };
    let branch: Vec<usize> = adj.iter().filter(|(_, n)| n.len() != 2).map(|(&v, _)| v).collect();
    if branch.len() != branch_count || branch.iter().any(|v| adj[v].len() != branch_deg) {
        return false;
    }
    if branch != w.branch_vertices {
        return false;
    }
    // follow each path of degree-2 vertices to its far branch vertex; every
    // path is met once from each end
    let mut links: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut walked = 0;
    for &b in &branch {
        for &first in &adj[&b] {
            let (mut prev, mut cur) = (b, first);
            walked += 1;
            while adj[&cur].len() == 2 {
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                prev = cur;
                cur = next;
                walked += 1;
                if walked > 2 * w.edges.len() {
                    return false;
                }
            }
            if cur == b {
                return false;
            }
            *links.entry((b.min(cur), b.max(cur))).or_default() += 1;
        }
    }
    // no stray cycles of degree-2 vertices, no parallel branch paths
    if walked != 2 * w.edges.len() || links.values().any(|&c| c != 2) {
        return false;
    }
    match w.kind {
        KuratowskiKind::K5 => links.len() == 10,
        KuratowskiKind::K33 => {
            let b0 = branch[0];
            let side: BTreeSet<usize> =
                branch.iter().copied().filter(|&v| v == b0 || !links.contains_key(&(b0.min(v), b0.max(v)))).collect();
            links.len() == 9 && side.len() == 3 && links.keys().all(|&(x, y)| side.contains(&x) != side.contains(&y))
        }
    }
}

fn classify(edges: &[(usize, usize)]) -> Option<KuratowskiWitness> {
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in edges {
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    let branch: Vec<usize> = deg.iter().filter(|(_, &d)| d != 2).map(|(&v, _)| v).collect();
    let kind = match (branch.len(), branch.first().map(|v| deg[v])) {
        (5, Some(4)) => KuratowskiKind::K5,
        (6, Some(3)) => KuratowskiKind::K33,
        _ => return None,
    };
    let mut edges = edges.to_vec();
    edges.sort_unstable();
    Some(KuratowskiWitness { kind, branch_vertices: branch, edges })
}

/// An edge-minimal nonplanar subgraph of a nonplanar edge list.
fn minimal_nonplanar(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut kept: Vec<(usize, usize)> = Vec::new();
    let mut rest: Vec<(usize, usize)> = edges.to_vec();
    let test = |kept: &[(usize, usize)], prefix: &[(usize, usize)]| {
        let all: Vec<(usize, usize)> = kept.iter().chain(prefix).copied().collect();
        lr_planar(n, &all)
    };
    while test(&kept, &[]) {
        // smallest k with kept + rest[..k] nonplanar; kept + rest is nonplanar
        let (mut lo, mut hi) = (1, rest.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            if test(&kept, &rest[..mid]) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        kept.push(rest[lo - 1]);
        rest.truncate(lo - 1);
    }
    kept
}

/// Planarity of the simple graph underlying `g` (loops ignored), with a
/// certificate either way.
pub fn planarity(g: &Graph, caps: &Caps) -> Result<Planarity> {
    let n = g.vertex_count();
    caps.check_solver("planarity", n)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let planar = with_stack(n, || {
        let mut lr = Lr::new(n, &edges);
        lr.run(edges.len()).then(|| lr.embedding())
    });
    if let Some(rotation) = planar {
        return Ok(Planarity::Planar { rotation });
    }
    let core = minimal_nonplanar(n, &edges);
    let witness = classify(&core).ok_or_else(|| {
        crate::error::Error::SelfCheck("minimal nonplanar subgraph is not a Kuratowski subdivision".into())
    })?;
    Ok(Planarity::Nonplanar { witness })
}

/// Planarity decision alone.
pub fn is_planar(g: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    lr_planar(g.vertex_count(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_td;
    use crate::ring::RingSpec;

    fn td(spec: &str, n: usize) -> Graph {
        build_td(&RingSpec::parse(spec).unwrap(), n, &Caps::default()).unwrap()
    }

    fn k33() -> Graph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Graph::from_edges(6, &e)
    }

    fn grid(w: usize, h: usize) -> Graph {
        let mut e = Vec::new();
        for y in 0..h {
            for x in 0..w {
                let v = y * w + x;
                if x + 1 < w {
                    e.push((v, v + 1));
                }
                if y + 1 < h {
                    e.push((v, v + w));
                }
            }
        }
        Graph::from_edges(w * h, &e)
    }

    fn assert_certified(g: &Graph, planar: bool) {
        match planarity(g, &Caps::default()).unwrap() {
            Planarity::Planar { rotation } => {
                assert!(planar, "reported planar");
                assert!(verify_embedding(g, &rotation), "embedding fails Euler check");
            }
            Planarity::Nonplanar { witness } => {
                assert!(!planar, "reported nonplanar");
                assert!(verify_kuratowski(g, &witness), "bad witness {witness:?}");
            }
        }
    }

    #[test]
    fn classic_graphs() {
        assert_certified(&Graph::complete(4), true);
        assert_certified(&Graph::complete(5), false);
        assert_certified(&k33(), false);
        assert_certified(&grid(6, 5), true);
        assert_certified(&grid(40, 30), true);
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        assert_certified(&petersen, false);
        assert_certified(&Graph::new(0), true);
        assert_certified(&Graph::new(3), true);
    }

    #[test]
    fn td_examples() {
        assert_certified(&td("Z2", 3), true);
        assert_certified(&td("Z3", 3), false);
        assert_certified(&td("Z2", 4), false);
        assert_certified(&td("Z3", 2), true);
        assert_certified(&td("Z5", 2), false);
    }

    #[test]
    fn witness_verifier_rejects_garbage() {
        let g = Graph::complete(6);
        let w = KuratowskiWitness { kind: KuratowskiKind::K5, branch_vertices: vec![0, 1, 2, 3, 4], edges: vec![(0, 1)] };
        assert!(!verify_kuratowski(&g, &w));
        let Planarity::Nonplanar { witness } = planarity(&g, &Caps::default()).unwrap() else { panic!() };
        let mut bad = witness.clone();
        bad.kind = match bad.kind {
            KuratowskiKind::K5 => KuratowskiKind::K33,
            KuratowskiKind::K33 => KuratowskiKind::K5,
        };
        assert!(!verify_kuratowski(&g, &bad));
    }
}
