use std::fmt::Write;

use serde::Serialize;

use super::{Graph, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexJson {
    pub id: usize,
    pub label: String,
}

/// JSON shape of an exported graph. Edges are `[u, v]` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub spec: Option<String>,
    pub n: Option<usize>,
    pub variant: Variant,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            spec: g.meta.spec.clone(),
            n: g.meta.n,
            variant: g.meta.variant,
            vertices: (0..g.vertex_count()).map(|id| VertexJson { id, label: g.label(id) }).collect(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            loops: g.loop_set().iter().collect(),
        }
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json is always serializable")
}

fn title(g: &Graph) -> String {
    let meta = &g.meta;
    match (&meta.spec, meta.n, meta.variant) {
        (Some(s), _, Variant::ZeroDivisor) => format!("Gamma({s})"),
        (Some(s), Some(n), v @ (Variant::Td | Variant::TdClosed)) => format!("{v}({s},{n})"),
        (Some(s), _, v) => format!("{v} {s}"),
        (None, _, v) => v.to_string(),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT with loops written as self-edges, edges in `(u, v)` order.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", escape(&title(g)));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(&g.label(v)));
    }
    for u in 0..g.vertex_count() {
        if g.has_loop(u) {
            let _ = writeln!(out, "  {u} -- {u};");
        }
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::graph::{build_td, build_td_closed, build_zero_divisor_graph};
    use crate::ring::RingSpec;

    #[test]
    fn dot_z2_2() {
        let g = build_td(&RingSpec::parse("Z2").unwrap(), 2, &Caps::default()).unwrap();
        assert_eq!(
            to_dot(&g),
            "graph \"TD(Z2,2)\" {\n  0 [label=\"01\"];\n  1 [label=\"10\"];\n  2 [label=\"11\"];\n  0 -- 1;\n}\n"
        );
    }

    #[test]
    fn json_closed_z2_3() {
        let g = build_td_closed(&RingSpec::parse("Z2").unwrap(), 3, &Caps::default()).unwrap();
        let json: serde_json::Value = serde_json::from_str(&to_json(&g)).unwrap();
        assert_eq!(json["variant"], "TDbar");
        assert_eq!(json["spec"], "Z2");
        assert_eq!(json["loops"], serde_json::json!([0, 3, 5, 6]));
        assert_eq!(json["vertices"][6]["label"], "110");
        assert_eq!(json["edges"].as_array().unwrap().len(), 16);
        assert_eq!(to_json(&g), to_json(&g.clone()));
        assert!(to_dot(&g).contains("  0 -- 0;\n  0 -- 1;"));
    }

    #[test]
    fn zero_divisor_title() {
        let g = build_zero_divisor_graph(&RingSpec::parse("Z9").unwrap(), &Caps::default()).unwrap();
        assert!(to_dot(&g).starts_with("graph \"Gamma(Z9)\" {\n  0 [label=\"3\"];"));
    }
}
