use std::sync::Arc;

use rayon::prelude::*;

use super::{Graph, GraphMeta, Labels, Variant};
use crate::bitset::BitSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ring::{Arith, RingSpec};
use crate::vector::vector_count;

/// Coordinates of every vector in `R^n` from position `first` on, flattened.
fn coordinate_table(ring: &RingSpec, n: usize, first: u64, count: usize) -> Vec<u64> {
    let q = ring.cardinality();
    let mut out = vec![0u64; count * n];
    for (k, chunk) in out.chunks_mut(n).enumerate() {
        let mut idx = first + k as u64;
        for c in chunk.iter_mut().rev() {
            *c = idx % q;
            idx /= q;
        }
    }
    out
}

/// Orthogonality graph on `R^n` minus the first `skip` positions.
fn orthogonality_graph(ring: &RingSpec, n: usize, skip: u64, caps: &Caps) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let total = vector_count(ring, n).unwrap_or(u64::MAX);
    let count = total - skip;
    if count > caps.graph_vertices as u64 {
        return Err(Error::cap("graph", count, caps.graph_vertices as u64));
    }
    let count = count as usize;
    let coords = coordinate_table(ring, n, skip, count);
    let arith = Arith::new(ring);
    let vec_of = |v: usize| &coords[v * n..(v + 1) * n];

    // rows are independent; each row is computed in full so the result does not
    // depend on scheduling
    let adj: Vec<BitSet> = (0..count)
        .into_par_iter()
        .map(|u| {
            let mut row = BitSet::new(count);
            let a = vec_of(u);
            for v in 0..count {
                if v != u && arith.dot(a, vec_of(v)) == 0 {
                    row.insert(v);
                }
            }
            row
        })
        .collect();
    let mut loops = BitSet::new(count);
    for v in 0..count {
        let a = vec_of(v);
        if arith.dot(a, a) == 0 {
            loops.insert(v);
        }
    }
    Ok(Graph {
        adj,
        loops,
        labels: Labels::Vectors {
            ring: Arc::new(ring.clone()),
            n,
            indices: (skip..total).collect(),
        },
        meta: GraphMeta { spec: Some(ring.to_string()), n: Some(n), variant: Variant::Other },
    })
}

/// `TD(R,n)`: nonzero vectors, distinct orthogonal vectors adjacent, no loops.
/// Vertex id is the mixed-radix position minus one.
pub fn build_td(ring: &RingSpec, n: usize, caps: &Caps) -> Result<Graph> {
    let mut g = orthogonality_graph(ring, n, 1, caps)?;
    g.loops = BitSet::new(g.vertex_count());
    g.meta.variant = Variant::Td;
    Ok(g)
}

/// Closed variant: all of `R^n`, loops at the isotropic vectors (zero included).
pub fn build_td_closed(ring: &RingSpec, n: usize, caps: &Caps) -> Result<Graph> {
    let mut g = orthogonality_graph(ring, n, 0, caps)?;
    g.meta.variant = Variant::TdClosed;
    Ok(g)
}

/// `Gamma(R)`: nonzero zero divisors, `a - b` iff `a != b` and `ab = 0`.
/// Vertices are ordered by element index.
pub fn build_zero_divisor_graph(ring: &RingSpec, caps: &Caps) -> Result<Graph> {
    if ring.cardinality() > caps.graph_vertices as u64 {
        return Err(Error::cap("graph", ring.cardinality(), caps.graph_vertices as u64));
    }
    let zds: Vec<u64> = (1..ring.cardinality()).filter(|&a| ring.is_zero_divisor_idx(a)).collect();
    let mut g = Graph::new(zds.len());
    for (i, &a) in zds.iter().enumerate() {
        for (j, &b) in zds.iter().enumerate().skip(i + 1) {
            if ring.mul_idx(a, b) == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g.labels = Labels::Vectors { ring: Arc::new(ring.clone()), n: 1, indices: zds };
    g.meta = GraphMeta { spec: Some(ring.to_string()), n: Some(1), variant: Variant::ZeroDivisor };
    Ok(g)
}

/// Tensor (categorical) product. `(u,v) ~ (u',v')` iff `u ~ u'` and `v ~ v'`,
/// where a vertex is adjacent to itself exactly when it has a loop. Vertex
/// `(u, v)` gets id `u * |V(h)| + v`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let count = ng * nh;
    // closed rows: adjacency plus the loop itself
    let close = |x: &Graph, u: usize| {
        let mut r = x.neighbors(u).clone();
        if x.has_loop(u) {
            r.insert(u);
        }
        r
    };
    let h_rows: Vec<BitSet> = (0..nh).map(|v| close(h, v)).collect();
    let adj: Vec<BitSet> = (0..count)
        .into_par_iter()
        .map(|id| {
            let (u, v) = (id / nh, id % nh);
            let mut row = BitSet::new(count);
            for u2 in close(g, u).iter() {
                for v2 in h_rows[v].iter() {
                    let other = u2 * nh + v2;
                    if other != id {
                        row.insert(other);
                    }
                }
            }
            row
        })
        .collect();
    let mut loops = BitSet::new(count);
    for u in g.loop_set().iter() {
        for v in h.loop_set().iter() {
            loops.insert(u * nh + v);
        }
    }
    let spec = match (&g.meta.spec, &h.meta.spec) {
        (Some(a), Some(b)) => Some(format!("{a}(x){b}")),
        _ => None,
    };
    let n = if g.meta.n == h.meta.n { g.meta.n } else { None };
    Graph {
        adj,
        loops,
        labels: Labels::Pairs { left: Box::new(g.labels.clone()), right: Box::new(h.labels.clone()), right_count: nh },
        meta: GraphMeta { spec, n, variant: Variant::Tensor },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::RingVector;

    fn ring(s: &str) -> RingSpec {
        RingSpec::parse(s).unwrap()
    }

    fn labelled_edges(g: &Graph) -> Vec<(String, String)> {
        let mut e: Vec<(String, String)> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (g.label(u), g.label(v));
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        e.sort();
        e
    }

    #[test]
    fn td_z2_3_matches_figure() {
        let g = build_td(&ring("Z2"), 3, &Caps::default()).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 9);
        let mut expected: Vec<(String, String)> = [
            ("100", "010"),
            ("100", "001"),
            ("010", "001"),
            ("100", "011"),
            ("010", "101"),
            ("001", "110"),
            ("111", "110"),
            ("111", "101"),
            ("111", "011"),
        ]
        .iter()
        .map(|(a, b)| if a < b { (a.to_string(), b.to_string()) } else { (b.to_string(), a.to_string()) })
        .collect();
        expected.sort();
        assert_eq!(labelled_edges(&g), expected);
        assert_eq!(g.loop_count(), 0);
        // id = position - 1
        assert_eq!(g.label(0), "001");
        assert_eq!(g.label(6), "111");
    }

    #[test]
    fn td_z2_2() {
        let g = build_td(&ring("Z2"), 2, &Caps::default()).unwrap();
        let labels: Vec<String> = (0..3).map(|v| g.label(v)).collect();
        assert_eq!(labels, ["01", "10", "11"]);
        assert_eq!(labelled_edges(&g), [("01".to_string(), "10".to_string())]);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn td_n1_over_fields_is_empty() {
        for s in ["Z2", "Z5", "GF(4)", "GF(9)"] {
            let r = ring(s);
            let g = build_td(&r, 1, &Caps::default()).unwrap();
            assert_eq!(g.vertex_count() as u64, r.cardinality() - 1);
            assert_eq!(g.edge_count(), 0);
        }
    }

    #[test]
    fn closed_z2_3_loops() {
        let g = build_td_closed(&ring("Z2"), 3, &Caps::default()).unwrap();
        assert_eq!(g.vertex_count(), 8);
        let loops: Vec<String> = g.loop_set().iter().map(|v| g.label(v)).collect();
        assert_eq!(loops, ["000", "011", "101", "110"]);
        // zero vector is adjacent to everything
        assert_eq!(g.degree(0), 7);
        assert_eq!(g.edge_count(), 16);
    }

    #[test]
    fn closed_loop_counts() {
        assert_eq!(build_td_closed(&ring("Z3"), 3, &Caps::default()).unwrap().loop_count(), 9);
        let g = build_td_closed(&ring("Z3"), 1, &Caps::default()).unwrap();
        assert_eq!(g.loop_set().iter().collect::<Vec<_>>(), [0]);
    }

    #[test]
    fn zero_divisor_graphs() {
        let caps = Caps::default();
        let g = build_zero_divisor_graph(&ring("Z6"), &caps).unwrap();
        assert_eq!((0..3).map(|v| g.label(v)).collect::<Vec<_>>(), ["2", "3", "4"]);
        assert_eq!(labelled_edges(&g), [("2".into(), "3".into()), ("3".into(), "4".into())]);
        let g = build_zero_divisor_graph(&ring("Z4"), &caps).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        let g = build_zero_divisor_graph(&ring("Z2xZ2"), &caps).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.label(0), "(0,1)");
        let g = build_zero_divisor_graph(&ring("Z9"), &caps).unwrap();
        assert_eq!(labelled_edges(&g), [("3".into(), "6".into())]);
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps::with_graph_cap(100);
        assert!(matches!(build_td(&ring("Z5"), 3, &caps), Err(Error::CapExceeded { .. })));
        assert!(build_td(&ring("Z10"), 2, &caps).is_ok());
        assert!(build_td_closed(&ring("Z10"), 2, &caps).is_ok());
        assert!(build_td_closed(&ring("Z11"), 2, &caps).is_err());
    }

    #[test]
    fn vertex_lookup() {
        let g = build_td(&ring("Z3"), 2, &Caps::default()).unwrap();
        for v in 0..g.vertex_count() {
            let x = g.vector(v).unwrap();
            assert_eq!(g.vertex_of(&x), Some(v));
        }
        let zero = RingVector::zero(Arc::new(ring("Z3")), 2);
        assert_eq!(g.vertex_of(&zero), None);
    }

    #[test]
    fn tensor_of_two_edges() {
        let k2 = Graph::complete(2);
        let t = tensor_product(&k2, &k2);
        assert_eq!(t.vertex_count(), 4);
        // (0,0)-(1,1) and (0,1)-(1,0)
        assert_eq!(t.edges().collect::<Vec<_>>(), [(0, 3), (1, 2)]);
    }

    #[test]
    fn tensor_loops_multiply() {
        let caps = Caps::default();
        let g = build_td_closed(&ring("Z2"), 2, &caps).unwrap();
        let h = build_td_closed(&ring("Z3"), 2, &caps).unwrap();
        let t = tensor_product(&g, &h);
        assert_eq!(t.vertex_count(), 36);
        assert_eq!(t.loop_count(), g.loop_count() * h.loop_count());
        // a loop at u plus an edge v-v' gives (u,v)-(u,v')
        let mut k = Graph::complete(2);
        k.set_loop(0);
        let t = tensor_product(&k, &Graph::complete(2));
        assert!(t.has_edge(0, 1));
        assert!(!t.has_edge(2, 3));
        assert_eq!(t.label(3), "1;1");
    }
}
