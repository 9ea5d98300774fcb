//! Clique, independence and clique-loop claims.

use std::sync::Arc;

use serde_json::json;

use super::domination::{infinite_scope, single_empty};
use super::structure::field_spec;
use super::support::*;
use super::{Budget, Claim, Instance, Outcome, Semantics, Verdict};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{build_td, build_td_closed, tensor_product, Graph};
use crate::invariants::{is_clique, is_independent, maximum_clique, maximum_clique_loop, maximum_independent_set};
use crate::ring::RingSpec;
use crate::vector::{build_isotropic_pair_clique, find_isotropic_pair, isotropy_census, RingVector};

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "clique-alpha-n2",
            anchor: "alpha(TD(F,2)) from O(F,2): O/(q-1) + (q^2-1-O)/2, or (q^2-1)/2 when O = 0",
            semantics: Semantics::Equality,
            domain: "q in {2,3,4,5,7,8,9,11,13}",
            instances: n2_instances,
            check: alpha_n2,
        },
        Claim {
            id: "clique-n2-split",
            anchor: "omega(TD(F,2)) is q-1 for q = 3 mod 4 and 2 otherwise",
            semantics: Semantics::Equality,
            domain: "q in {2,3,4,5,7,8,9,11,13}",
            instances: n2_instances,
            check: omega_n2_split,
        },
        Claim {
            id: "clique-domain",
            anchor: "an integral domain with O(R,n) = 0 has omega(TD(R,n)) = n",
            semantics: Semantics::Equality,
            domain: "F in {Z3, Z7, Z11}; n = 2",
            instances: domain_instances,
            check: clique_domain,
        },
        Claim {
            id: "clique-lower-field",
            anchor: "omega(TD(F,n)) >= q^floor(n/2) - 1, and >= q^floor(n/2) for odd n, when O(F,2) != 0",
            semantics: Semantics::LowerBound,
            domain: "F in {Z2, Z5, GF(4), Z13, GF(8), GF(9)}; n in {2,3}, some n = 4, 5",
            instances: lower_field_instances,
            check: lower_field,
        },
        Claim {
            id: "clique-lower-ring",
            anchor: "omega(TD(R,n)) >= 2^floor(n/2) - 1, and >= 2^floor(n/2) for odd n, when O(R,2) != 0",
            semantics: Semantics::LowerBound,
            domain: "R in {Z2, Z4, Z2xZ2, Z6, Z8, Z9}; n in {2,3}, small rings at n = 4",
            instances: lower_ring_instances,
            check: lower_ring,
        },
        Claim {
            id: "clique-better-bound",
            anchor: "an unspecified improvement of the ring clique bound via an external proposition",
            semantics: Semantics::LowerBound,
            domain: "none: no explicit formula is given",
            instances: single_empty,
            check: no_formula,
        },
        Claim {
            id: "clique-to-independence",
            anchor: "omega(TD(R,n)) + 1 <= alpha(TD(R,n+1)), and (|R|-1)(omega+1) <= alpha for isotropic cliques",
            semantics: Semantics::LowerBound,
            domain: "small rings; n in {2,3} with TD(R,n+1) of at most 256 vertices",
            instances: to_independence_instances,
            check: clique_to_independence,
        },
        Claim {
            id: "tensor-clique-min",
            anchor: "omega(G x H) = min(omega(G), omega(H)) for simple graphs",
            semantics: Semantics::Equality,
            domain: "loopless TD pairs and closed (looped) pairs",
            instances: tensor_min_instances,
            check: tensor_clique_min,
        },
        Claim {
            id: "tensor-clique-loop",
            anchor: "clique-loop numbers multiply under the tensor product and bound omega from below",
            semantics: Semantics::Equality,
            domain: "closed graph pairs",
            instances: tensor_loop_instances,
            check: tensor_clique_loop,
        },
        Claim {
            id: "clique-closed-offset",
            anchor: "omega(TD(R,n)) = omega(closed TD(R,n)) - 1",
            semantics: Semantics::Equality,
            domain: "ten small instances",
            instances: offset_instances,
            check: clique_closed_offset,
        },
        Claim {
            id: "clique-loop-field",
            anchor: "the clique-loop number of the closed TD(F,n) is q^floor(n/2) when O(F,2) != 0",
            semantics: Semantics::Equality,
            domain: "F in {Z2, Z5, GF(4), Z13, GF(8), GF(9)}; n in {2,3}, Z2 up to n = 5",
            instances: loop_field_instances,
            check: clique_loop_field,
        },
        Claim {
            id: "independence-infinite",
            anchor: "alpha(TD(R,n)) is infinite for an infinite ring",
            semantics: Semantics::Equality,
            domain: "infinite rings",
            instances: single_empty,
            check: infinite_scope,
        },
    ]
}

fn no_formula(_: &Instance, _: &Caps) -> Result<Verdict> {
    Ok(Verdict::Skipped("no-formula".into()))
}

fn vertex_ids(g: &Graph, xs: &[RingVector]) -> Result<Vec<usize>> {
    xs.iter()
        .map(|x| g.vertex_of(x).ok_or_else(|| Error::SelfCheck(format!("{x} is not a vertex"))))
        .collect()
}

fn field_of(inst: &Instance) -> Result<Arc<RingSpec>> {
    let r = param_r(inst)?;
    if !r.is_field() {
        return Err(Error::Precondition(format!("{r} is not a field")));
    }
    Ok(r)
}

fn n2_instances(b: Budget) -> Vec<Instance> {
    let mut qs = vec![2, 3, 4, 5, 7, 8, 9, 11, 13];
    if b == Budget::Extended {
        qs.extend([16, 17, 19]);
    }
    qs.into_iter().map(|q| Instance::ring(&field_spec(q), 2)).collect()
}

fn alpha_n2(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let r = field_of(inst)?;
    let q = r.cardinality();
    let o = isotropy_census(&r, 2, caps)?.nontrivial;
    let expected = if o != 0 { o / (q - 1) + (q * q - 1 - o) / 2 } else { (q * q - 1) / 2 };
    let g = build_td(&r, 2, caps)?;
    let set = maximum_independent_set(&g, caps)?;
    Ok(Outcome::new(set.len() as u64 == expected, json!({"alpha": set.len()}), json!({"alpha": expected}))
        .witness(labels(&g, &set))
        .note(format!("O(F,2) = {o}"))
        .into())
}

fn omega_n2_split(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let r = field_of(inst)?;
    let q = r.cardinality();
    let stated = if q % 4 == 3 { q - 1 } else { 2 };
    let transposed = if q % 4 == 3 { 2 } else { (q - 1).max(2) };
    let g = build_td(&r, 2, caps)?;
    let clique = maximum_clique(&g, caps)?;
    let omega = clique.len() as u64;
    Ok(Outcome::new(omega == stated, json!({"omega": omega, "transposed_split": transposed}), json!({"omega": stated}))
        .witness(labels(&g, &clique))
        .erratum_if(
            omega == transposed,
            "the observed values follow the same split with its two cases exchanged: 2 for q = 3 mod 4, q-1 otherwise",
        )
        .into())
}

fn domain_instances(b: Budget) -> Vec<Instance> {
    let mut v = vec![Instance::ring("Z3", 2), Instance::ring("Z7", 2), Instance::ring("Z11", 2)];
    if b == Budget::Extended {
        v.extend([Instance::ring("Z19", 2), Instance::ring("GF(27)", 2)]);
    }
    v
}

fn clique_domain(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (field_of(inst)?, param_n(inst)?);
    let o = isotropy_census(&r, n, caps)?.nontrivial;
    if o != 0 {
        return Err(Error::Precondition(format!("O({r},{n}) = {o} is not zero")));
    }
    let g = build_td(&r, n, caps)?;
    let clique = maximum_clique(&g, caps)?;
    Ok(Outcome::new(clique.len() == n, json!({"omega": clique.len()}), json!({"omega": n}))
        .witness(labels(&g, &clique))
        .into())
}

/// Clique size promised by the isotropic-pair construction with `base`
/// choices per block.
fn pair_bound(base: u64, n: usize) -> u64 {
    let k = pow(base, n / 2);
    if n % 2 == 1 {
        k
    } else {
        k - 1
    }
}

/// Builds the isotropic-pair clique for `R^n` and the exact clique number.
fn construction_vs_exact(r: &Arc<RingSpec>, n: usize, caps: &Caps) -> Result<(Graph, Vec<usize>, Vec<usize>, bool)> {
    let (a, b) = find_isotropic_pair(r)
        .ok_or_else(|| Error::Precondition(format!("x^2 + y^2 = 0 has no nontrivial solution in {r}")))?;
    let members = build_isotropic_pair_clique(r, n, &a, &b, caps)?;
    let g = build_td(r, n, caps)?;
    let ids = vertex_ids(&g, &members)?;
    let valid = is_clique(&g, &ids);
    let exact = maximum_clique(&g, caps)?;
    Ok((g, ids, exact, valid))
}

fn lower_field_instances(b: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z2", "Z5", "GF(4)", "Z13", "GF(8)", "GF(9)"] {
        for n in [2, 3] {
            v.push(Instance::ring(r, n));
        }
    }
    v.extend([Instance::ring("Z2", 4), Instance::ring("Z2", 5), Instance::ring("Z5", 4)]);
    if b == Budget::Extended {
        v.extend([Instance::ring("GF(4)", 4), Instance::ring("Z2", 6)]);
    }
    v
}

fn lower_field(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (field_of(inst)?, param_n(inst)?);
    let bound = pair_bound(r.cardinality(), n);
    let (g, ids, exact, valid) = construction_vs_exact(&r, n, caps)?;
    let holds = valid && ids.len() as u64 == bound && exact.len() as u64 >= bound;
    Ok(Outcome::new(
        holds,
        json!({"omega": exact.len(), "construction_size": ids.len(), "construction_is_clique": valid}),
        json!({"lower_bound": bound, "construction_size": bound}),
    )
    .witness(labels(&g, &ids))
    .into())
}

fn lower_ring_instances(_: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z2", "Z4", "Z2xZ2", "Z6", "Z8", "Z9"] {
        for n in [2, 3] {
            v.push(Instance::ring(r, n));
        }
    }
    for r in ["Z2", "Z4", "Z2xZ2", "Z6"] {
        v.push(Instance::ring(r, 4));
    }
    v
}

fn lower_ring(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    let bound = pair_bound(2, n);
    let (g, ids, exact, valid) = construction_vs_exact(&r, n, caps)?;
    let holds = valid && exact.len() as u64 >= bound;
    let mut o = Outcome::new(
        holds,
        json!({"omega": exact.len(), "construction_size": ids.len(), "construction_is_clique": valid}),
        json!({"lower_bound": bound}),
    )
    .witness(labels(&g, &ids));
    if !r.is_field() && (ids.len() as u64) < bound {
        o = o.note("some 0/1 combinations coincide, so the construction is smaller than the bound");
    }
    Ok(o.into())
}

fn to_independence_instances(_: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for case in ["plain", "scaled"] {
        for r in ["Z2", "Z3", "Z5", "GF(4)", "Z4", "Z6", "Z2xZ2"] {
            for n in [2, 3] {
                if td_order(ring(r).unwrap().cardinality(), n + 1) <= 256 {
                    v.push(Instance::ring(r, n).with_case(case));
                }
            }
        }
    }
    v
}

/// `(x, t)` in `R^(n+1)`.
fn extend(r: &Arc<RingSpec>, x: &RingVector, t: u64) -> RingVector {
    let mut c = x.coord_indices().to_vec();
    c.push(t);
    RingVector::from_indices(r.clone(), c).expect("indices are in range")
}

fn clique_to_independence(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    let g = build_td(&r, n, caps)?;
    let big = build_td(&r, n + 1, caps)?;
    let omega = maximum_clique(&g, caps)?;
    let alpha = maximum_independent_set(&big, caps)?.len() as u64;
    let w = omega.len() as u64;
    let q = r.cardinality();
    let zero = RingVector::zero(r.clone(), n);
    match inst.case.as_deref() {
        Some("plain") => {
            let mut delta: Vec<RingVector> =
                omega.iter().map(|&v| extend(&r, &g.vector(v).expect("vector labels"), r.one_idx())).collect();
            delta.push(extend(&r, &zero, r.one_idx()));
            let ids = vertex_ids(&big, &delta)?;
            let independent = is_independent(&big, &ids);
            Ok(Outcome::new(
                independent && alpha > w,
                json!({"alpha_n_plus_1": alpha, "delta_size": ids.len(), "delta_independent": independent}),
                json!({"lower_bound": w + 1}),
            )
            .witness(labels(&big, &ids))
            .into())
        }
        Some("scaled") => {
            // largest clique of isotropic vectors: a clique-loop of the closed graph without 0
            let closed = build_td_closed(&r, n, caps)?;
            let iso: Vec<RingVector> = maximum_clique_loop(&closed, caps)?
                .into_iter()
                .map(|v| closed.vector(v).expect("vector labels"))
                .filter(|x| !x.is_zero())
                .collect();
            let mut delta = Vec::new();
            for beta in 1..q {
                for x in &iso {
                    delta.push(extend(&r, x, beta));
                }
                delta.push(extend(&r, &zero, beta));
            }
            let ids = vertex_ids(&big, &delta)?;
            let independent = is_independent(&big, &ids);
            let stated = (q - 1) * (w + 1);
            Ok(Outcome::new(
                independent && alpha >= stated,
                json!({
                    "alpha_n_plus_1": alpha,
                    "isotropic_clique_size": iso.len(),
                    "delta_size": ids.len(),
                    "delta_independent": independent,
                }),
                json!({"lower_bound": stated, "delta_independent": true}),
            )
            .witness(labels(&big, &ids))
            .erratum_if(!r.is_field(), "for zero divisors beta, beta' the vectors (a,beta) and (a',beta') are orthogonal, so Delta is not independent")
            .into())
        }
        other => Err(Error::Precondition(format!("unknown case {other:?}"))),
    }
}

fn tensor_min_instances(_: Budget) -> Vec<Instance> {
    let loopless = [("Z2", 3, "Z3", 2), ("Z5", 2, "Z2", 3), ("GF(4)", 2, "Z2", 2), ("Z4", 2, "Z3", 2), ("Z3", 1, "Z2", 3)];
    let closed = [("Z2", 2, "Z3", 2), ("Z2", 3, "Z2", 2), ("Z5", 2, "Z2", 2), ("Z3", 2, "Z3", 2)];
    let mut v: Vec<Instance> =
        loopless.into_iter().map(|(r, n, s, m)| Instance::pair(r, n, s, m).with_closed(false)).collect();
    v.extend(closed.into_iter().map(|(r, n, s, m)| Instance::pair(r, n, s, m).with_closed(true)));
    v
}

fn factor_graphs(inst: &Instance, caps: &Caps, closed: bool) -> Result<(Graph, Graph)> {
    Ok((
        graph(&*param_r(inst)?, param_n(inst)?, closed, caps)?,
        graph(&*param_s(inst)?, param_m(inst)?, closed, caps)?,
    ))
}

fn tensor_clique_min(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let closed = inst.closed.unwrap_or(false);
    let (g, h) = factor_graphs(inst, caps, closed)?;
    if !closed && (g.edge_count() == 0 || h.edge_count() == 0) {
        return Ok(Verdict::Skipped("edgeless factor: min convention ambiguous".into()));
    }
    let t = tensor_product(&g, &h);
    let (wg, wh) = (maximum_clique(&g, caps)?.len(), maximum_clique(&h, caps)?.len());
    let clique = maximum_clique(&t, caps)?;
    Ok(Outcome::new(
        clique.len() == wg.min(wh),
        json!({"omega_product": clique.len(), "omega_left": wg, "omega_right": wh}),
        json!({"omega_product": wg.min(wh)}),
    )
    .witness(labels(&t, &clique))
    .erratum_if(closed, "the looped zero vector is adjacent to everything, so cliques {(x,0)} and {(0,y)} combine beyond the minimum; the statement is for simple graphs")
    .into())
}

fn tensor_loop_instances(_: Budget) -> Vec<Instance> {
    [("Z2", 2, "Z3", 2), ("Z2", 3, "Z2", 2), ("Z5", 2, "Z2", 2), ("GF(4)", 2, "Z2", 3), ("Z3", 2, "Z5", 2), ("Z5", 2, "GF(4)", 2)]
        .into_iter()
        .map(|(r, n, s, m)| Instance::pair(r, n, s, m).with_closed(true))
        .collect()
}

fn tensor_clique_loop(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (g, h) = factor_graphs(inst, caps, true)?;
    let t = tensor_product(&g, &h);
    let lg = maximum_clique_loop(&g, caps)?.len();
    let lh = maximum_clique_loop(&h, caps)?.len();
    let lt = maximum_clique_loop(&t, caps)?;
    let wt = maximum_clique(&t, caps)?.len();
    Ok(Outcome::new(
        lt.len() == lg * lh && wt >= lt.len(),
        json!({"clique_loop_product": lt.len(), "omega_product": wt}),
        json!({"clique_loop_product": lg * lh, "omega_product_at_least": lg * lh}),
    )
    .witness(labels(&t, &lt))
    .into())
}

fn offset_instances(_: Budget) -> Vec<Instance> {
    [("Z2", 3), ("Z3", 2), ("Z5", 2), ("GF(4)", 2), ("Z4", 2), ("Z6", 2), ("Z2xZ2", 2), ("Z5", 3), ("Z2", 4), ("Z3", 3)]
        .into_iter()
        .map(|(r, n)| Instance::ring(r, n))
        .collect()
}

fn clique_closed_offset(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    let w = maximum_clique(&build_td(&r, n, caps)?, caps)?.len();
    let closed = build_td_closed(&r, n, caps)?;
    let wc = maximum_clique(&closed, caps)?;
    let wl = maximum_clique_loop(&closed, caps)?.len();
    Ok(Outcome::new(
        w + 1 == wc.len(),
        json!({"omega": w, "omega_closed": wc.len(), "clique_loop_closed": wl}),
        json!({"omega": wc.len() - 1}),
    )
    .witness(labels(&closed, &wc))
    .into())
}

fn loop_field_instances(b: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z2", "Z5", "GF(4)", "Z13", "GF(8)", "GF(9)"] {
        for n in [2, 3] {
            v.push(Instance::ring(r, n).with_closed(true));
        }
    }
    v.extend([Instance::ring("Z2", 4).with_closed(true), Instance::ring("Z2", 5).with_closed(true)]);
    if b == Budget::Extended {
        v.extend([Instance::ring("Z5", 4).with_closed(true), Instance::ring("GF(4)", 4).with_closed(true)]);
    }
    v
}

fn clique_loop_field(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (field_of(inst)?, param_n(inst)?);
    if isotropy_census(&r, 2, caps)?.nontrivial == 0 {
        return Err(Error::Precondition(format!("O({r},2) = 0")));
    }
    let g = build_td_closed(&r, n, caps)?;
    let set = maximum_clique_loop(&g, caps)?;
    let expected = pow(r.cardinality(), n / 2);
    Ok(Outcome::new(set.len() as u64 == expected, json!({"clique_loop": set.len()}), json!({"clique_loop": expected}))
        .witness(labels(&g, &set))
        .into())
}
