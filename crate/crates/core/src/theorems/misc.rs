//! Planarity classification, the zero-divisor graph embedding and the
//! diameter spot check.

use serde_json::json;

use super::support::*;
use super::{Budget, Claim, Instance, Outcome, Semantics, Verdict};
use crate::caps::Caps;
use crate::error::Result;
use crate::graph::{build_td, build_zero_divisor_graph};
use crate::invariants::{diameter, planarity, verify_embedding, verify_kuratowski, Extended, Planarity};
use crate::vector::RingVector;

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "planarity-classification",
            anchor: "TD(R,n) is planar exactly for TD(Z2,2), TD(Z2,3) and TD(Z3,2)",
            semantics: Semantics::StructuralIsomorphism,
            domain: "three planar and six nonplanar instances",
            instances: planarity_instances,
            check: planarity_classification,
        },
        Claim {
            id: "zdg-embedding",
            anchor: "TD(R,n) contains n pairwise disjoint induced copies of the zero-divisor graph",
            semantics: Semantics::StructuralIsomorphism,
            domain: "R in {Z4, Z6, Z8, Z9, Z2xZ2, Z3xZ3}; n in {2,3}",
            instances: zdg_instances,
            check: zdg_embedding,
        },
        Claim {
            id: "diameter-spot-check",
            anchor: "the cited diameter of TD(R,n) for n >= 3 is 3",
            semantics: Semantics::Equality,
            domain: "nine instances with n >= 3",
            instances: diameter_instances,
            check: diameter_spot_check,
        },
    ]
}

const PLANAR: [(&str, usize); 3] = [("Z2", 2), ("Z2", 3), ("Z3", 2)];
const NONPLANAR: [(&str, usize); 6] = [("Z2", 4), ("Z3", 3), ("Z4", 2), ("Z5", 2), ("GF(4)", 2), ("Z6", 2)];

fn planarity_instances(_: Budget) -> Vec<Instance> {
    PLANAR.iter().chain(NONPLANAR.iter()).map(|&(r, n)| Instance::ring(r, n)).collect()
}

fn planarity_classification(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    let expected = PLANAR.iter().any(|&(s, m)| ring(s).map(|s| *s == *r).unwrap_or(false) && m == n);
    let g = build_td(&r, n, caps)?;
    let (planar, certified, witness) = match planarity(&g, caps)? {
        Planarity::Planar { rotation } => (true, verify_embedding(&g, &rotation), json!({"certificate": "rotation system"})),
        Planarity::Nonplanar { witness } => {
            let ok = verify_kuratowski(&g, &witness);
            let edges: Vec<_> = witness.edges.iter().map(|&(u, v)| pair_json(g.label(u), g.label(v))).collect();
            (false, ok, json!({"kind": witness.kind, "branch_vertices": labels(&g, &witness.branch_vertices), "edges": edges}))
        }
    };
    Ok(Outcome::new(
        planar == expected && certified,
        json!({"planar": planar, "certificate_verified": certified}),
        json!({"planar": expected, "certificate_verified": true}),
    )
    .witness(witness)
    .into())
}

fn zdg_instances(_: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z4", "Z6", "Z8", "Z9", "Z2xZ2", "Z3xZ3"] {
        for n in [2, 3] {
            v.push(Instance::ring(r, n));
        }
    }
    v
}

fn zdg_embedding(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    let gamma = build_zero_divisor_graph(&r, caps)?;
    let g = build_td(&r, n, caps)?;
    let k = gamma.vertex_count();
    let mut used = vec![false; g.vertex_count()];
    let mut disjoint = true;
    let mut copies = 0;
    let mut first_copy = Vec::new();
    for i in 0..n {
        // z -> z e_i
        let image: Vec<usize> = (0..k)
            .map(|v| {
                let z = gamma.vector(v).expect("zero-divisor vertices carry elements").coord_indices()[0];
                let mut c = vec![0; n];
                c[i] = z;
                let x = RingVector::from_indices(r.clone(), c).expect("index in range");
                g.vertex_of(&x).expect("nonzero vector is a vertex")
            })
            .collect();
        for &w in &image {
            disjoint &= !used[w];
            used[w] = true;
        }
        let induced = (0..k).all(|u| (u + 1..k).all(|v| gamma.has_edge(u, v) == g.has_edge(image[u], image[v])));
        if induced {
            copies += 1;
        }
        if i == 0 {
            first_copy = labels(&g, &image);
        }
    }
    Ok(Outcome::new(
        copies == n && disjoint,
        json!({"induced_copies": copies, "disjoint": disjoint, "zero_divisor_graph_order": k}),
        json!({"induced_copies": n, "disjoint": true}),
    )
    .witness(first_copy)
    .into())
}

fn diameter_instances(_: Budget) -> Vec<Instance> {
    [("Z2", 3), ("Z2", 4), ("Z3", 3), ("Z4", 3), ("GF(4)", 3), ("Z5", 3), ("Z6", 3), ("Z2xZ2", 3), ("Z3", 4)]
        .into_iter()
        .map(|(r, n)| Instance::ring(r, n))
        .collect()
}

fn diameter_spot_check(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let g = build_td(&*param_r(inst)?, param_n(inst)?, caps)?;
    let (d, path) = diameter(&g, caps)?;
    Ok(Outcome::new(d == Extended::Finite(3), json!({"diameter": d}), json!({"diameter": 3}))
        .witness(labels(&g, &path))
        .erratum_if(
            d == Extended::Finite(2),
            "every two non-adjacent vertices have a common neighbour, so the diameter is 2",
        )
        .into())
}
