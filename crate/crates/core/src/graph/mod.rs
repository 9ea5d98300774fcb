//! Dense undirected graphs with a separate loop set, and the constructions of
//! `TD(R,n)`, its closed variant and the zero-divisor graph.

mod build;
mod export;
mod iso;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::ring::RingSpec;
use crate::vector::RingVector;

pub use build::{build_td, build_td_closed, build_zero_divisor_graph, tensor_product};
pub use export::{to_dot, to_json, GraphJson};
pub use iso::{is_isomorphic, verify_isomorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    #[serde(rename = "TD")]
    Td,
    #[serde(rename = "TDbar")]
    TdClosed,
    #[serde(rename = "Gamma")]
    ZeroDivisor,
    #[serde(rename = "tensor")]
    Tensor,
    #[serde(rename = "other")]
    Other,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Td => "TD",
            Variant::TdClosed => "TDbar",
            Variant::ZeroDivisor => "Gamma",
            Variant::Tensor => "tensor",
            Variant::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMeta {
    pub spec: Option<String>,
    pub n: Option<usize>,
    pub variant: Variant,
}

/// How vertex ids map back to algebraic objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Labels {
    /// Vertices are plain ids.
    Plain,
    /// Vertex `v` is the vector at mixed-radix position `indices[v]` of `R^n`.
    Vectors { ring: Arc<RingSpec>, n: usize, indices: Vec<u64> },
    /// Vertex `v` is the pair `(v / right_count, v % right_count)`.
    Pairs { left: Box<Labels>, right: Box<Labels>, right_count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    loops: BitSet,
    labels: Labels,
    meta: GraphMeta,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(vertex_count); vertex_count],
            loops: BitSet::new(vertex_count),
            labels: Labels::Plain,
            meta: GraphMeta { spec: None, n: None, variant: Variant::Other },
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// `K_m` without loops.
    pub fn complete(m: usize) -> Self {
        let mut g = Graph::new(m);
        for u in 0..m {
            for v in u + 1..m {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn meta(&self) -> &GraphMeta {
        &self.meta
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// Adds the undirected edge `u - v`; `u == v` sets a loop instead.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.loops.insert(u);
        } else {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn set_loop(&mut self, v: usize) {
        self.loops.insert(v);
    }

    /// Adjacency between distinct vertices (loops are not edges).
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(v)
    }

    /// `u ~ v` where a vertex is adjacent to itself exactly when it carries a loop.
    #[inline]
    pub fn adjacent_or_loop(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.has_loop(u)
        } else {
            self.has_edge(u, v)
        }
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// `N[v]`: neighbours plus `v`.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Number of distinct neighbours; a loop contributes nothing.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn loop_set(&self) -> &BitSet {
        &self.loops
    }

    pub fn loop_count(&self) -> usize {
        self.loops.count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The induced subgraph on `vertices`, renumbered in the given order. Loops are kept.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            if self.has_loop(u) {
                g.set_loop(i);
            }
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Same adjacency without loops.
    pub fn without_loops(&self) -> Graph {
        let mut g = self.clone();
        g.loops = BitSet::new(self.vertex_count());
        g
    }

    /// Complement on distinct pairs; loops are dropped.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for u in 0..n {
            let mut row = BitSet::full(n);
            row.difference_with(&self.adj[u]);
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// Vertices reachable from some vertex, or with a loop / edge: everything but isolated loopless vertices.
    pub fn non_isolated(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    /// The algebraic object behind vertex `v`, when the graph was built from `R^n`.
    pub fn vector(&self, v: usize) -> Option<RingVector> {
        match &self.labels {
            Labels::Vectors { ring, n, indices } => Some(RingVector::at_index(ring.clone(), *n, indices[v])),
            _ => None,
        }
    }

    /// Vertex id of a vector, when the graph was built from `R^n`.
    pub fn vertex_of(&self, x: &RingVector) -> Option<usize> {
        match &self.labels {
            Labels::Vectors { ring, n, indices } if **ring == **x.ring() && *n == x.dim() => {
                indices.binary_search(&x.index()).ok()
            }
            _ => None,
        }
    }

    pub fn label(&self, v: usize) -> String {
        label_of(&self.labels, v)
    }
}

fn label_of(labels: &Labels, v: usize) -> String {
    match labels {
        Labels::Plain => v.to_string(),
        Labels::Vectors { ring, n, indices } => RingVector::at_index(ring.clone(), *n, indices[v]).label(),
        Labels::Pairs { left, right, right_count } => {
            format!("{};{}", label_of(left, v / right_count), label_of(right, v % right_count))
        }
    }
}
