//! Exact graph invariants with certifying witnesses.

mod clique;
mod components;
mod degree;
mod distance;
mod domination;
mod planarity;

use std::time::Instant;

use serde::Serialize;

pub use clique::{
    is_clique, is_clique_loop, is_independent, maximum_clique, maximum_clique_loop, maximum_independent_set,
};
pub use components::{connected_components, ComponentClass, ComponentSummary};
pub use degree::{degree_sequence, predicted_degree, DegreeCase, DegreePrediction, DegreeSequence};
pub use distance::{diameter, girth, Extended};
pub use domination::{greedy_dominating_set, is_dominating, minimum_dominating_set};
pub use planarity::{
    is_planar, planarity, verify_embedding, verify_kuratowski, KuratowskiKind, KuratowskiWitness, Planarity,
};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Invariant names accepted by [`compute_invariant`].
pub const INVARIANT_NAMES: &[&str] =
    &["degrees", "components", "domination", "clique", "independence", "clique-loop", "diameter", "girth", "planar"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(u64),
    Extended(Extended),
    Bool(bool),
}

/// A computed invariant. `witness` lists vertex ids; for planarity it is the
/// vertex set of the Kuratowski subdivision, whose edges go in `witness_edges`.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantValue {
    pub name: String,
    pub value: Value,
    pub witness: Vec<usize>,
    pub witness_labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
    pub runtime_ms: u64,
}

/// Computes the invariant `name` of `g`.
pub fn compute_invariant(g: &Graph, name: &str, caps: &Caps) -> Result<InvariantValue> {
    let start = Instant::now();
    let mut witness_edges = None;
    let mut detail = None;
    let (value, witness) = match name {
        "degrees" => {
            let s = degree_sequence(g);
            let v = Value::Int(s.max as u64);
            detail = Some(serde_json::json!({
                "min": s.min,
                "max": s.max,
                "histogram": s.histogram,
                "degrees": s.degrees,
            }));
            (v, Vec::new())
        }
        "components" => {
            let c = connected_components(g);
            let v = Value::Int(c.len() as u64);
            detail = Some(serde_json::to_value(&c).expect("components serialize"));
            (v, Vec::new())
        }
        "domination" => {
            let s = minimum_dominating_set(g, caps)?;
            (Value::Int(s.len() as u64), s)
        }
        "clique" => {
            let s = maximum_clique(g, caps)?;
            (Value::Int(s.len() as u64), s)
        }
        "independence" => {
            let s = maximum_independent_set(g, caps)?;
            (Value::Int(s.len() as u64), s)
        }
        "clique-loop" => {
            let s = maximum_clique_loop(g, caps)?;
            (Value::Int(s.len() as u64), s)
        }
        "diameter" => {
            let (d, w) = diameter(g, caps)?;
            (Value::Extended(d), w)
        }
        "girth" => {
            let (d, w) = girth(g, caps)?;
            (Value::Extended(d), w)
        }
        "planar" => match planarity(g, caps)? {
            Planarity::Planar { .. } => (Value::Bool(true), Vec::new()),
            Planarity::Nonplanar { witness } => {
                detail = Some(serde_json::json!({
                    "kind": witness.kind,
                    "branch_vertices": witness.branch_vertices,
                }));
                let vs = witness.vertices();
                witness_edges = Some(witness.edges);
                (Value::Bool(false), vs)
            }
        },
        other => return Err(Error::UnknownInvariant(other.to_string())),
    };
    Ok(InvariantValue {
        name: name.to_string(),
        value,
        witness_labels: witness.iter().map(|&v| g.label(v)).collect(),
        witness,
        witness_edges,
        detail,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_td;
    use crate::ring::RingSpec;

    #[test]
    fn dispatch_and_json() {
        let g = build_td(&RingSpec::parse("Z3").unwrap(), 2, &Caps::default()).unwrap();
        let v = compute_invariant(&g, "domination", &Caps::default()).unwrap();
        assert_eq!(v.value, Value::Int(4));
        assert!(is_dominating(&g, &v.witness));
        let d = compute_invariant(&g, "diameter", &Caps::default()).unwrap();
        let json = serde_json::to_value(&d).unwrap();
        assert_eq!(json["value"], "infinity");
        assert!(matches!(compute_invariant(&g, "chromatic", &Caps::default()), Err(Error::UnknownInvariant(_))));
        for name in INVARIANT_NAMES {
            compute_invariant(&g, name, &Caps::default()).unwrap();
        }
    }
}
