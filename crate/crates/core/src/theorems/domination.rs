//! Domination number claims.

use std::sync::Arc;

use serde_json::json;

use super::structure::field_spec;
use super::support::*;
use super::{Budget, Claim, Instance, Outcome, Semantics, Verdict};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{build_td, tensor_product, Graph};
use crate::invariants::{connected_components, is_dominating, minimum_dominating_set, ComponentClass};
use crate::ring::RingSpec;
use crate::vector::RingVector;

pub(super) fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "domination-field",
            anchor: "gamma(TD(F,n)) is 2 for F = Z2 and n = 3, and q+1 otherwise (n > 1)",
            semantics: Semantics::Equality,
            domain: "F in {Z2, Z3, Z5, GF(4), Z7, GF(8), GF(9)}; n in {2,3}, some n = 4, 5",
            instances: field_instances,
            check: domination_field,
        },
        Claim {
            id: "domination-nonfield-remark",
            anchor: "over a non-field the set {(a,1,0,...)} plus (1,0,...) does not dominate",
            semantics: Semantics::Equality,
            domain: "R in {Z4, Z6, Z2xZ2, Z8, Z9}; n in {2,3}",
            instances: nonfield_instances,
            check: nonfield_remark,
        },
        Claim {
            id: "domination-bound-squared",
            anchor: "gamma(TD(R,n)) <= |R - U(R)|^2 - 1 for a non-field R and n > 1",
            semantics: Semantics::UpperBound,
            domain: "R in {Z4, Z6, Z2xZ2}; n in {2,3}; Z8, Z9 at n = 2",
            instances: bound_instances,
            check: bound_squared,
        },
        Claim {
            id: "domination-bound-linear",
            anchor: "gamma(TD(R,n)) <= |R - U(R)| + |R| - 2 for a non-field R and n > 1",
            semantics: Semantics::UpperBound,
            domain: "R in {Z4, Z6, Z2xZ2}; n in {2,3}; Z8, Z9 at n = 2",
            instances: bound_instances,
            check: bound_linear,
        },
        Claim {
            id: "mekis-bound",
            anchor: "gamma(G x H) >= gamma(G) + gamma(H) - 1 for the tensor product",
            semantics: Semantics::LowerBound,
            domain: "tensor products of small TD graphs",
            instances: mekis_instances,
            check: mekis_bound,
        },
        Claim {
            id: "domination-monotone",
            anchor: "gamma(TD(R,n)) <= gamma(TD(R,n-1))",
            semantics: Semantics::UpperBound,
            domain: "eight small rings; n in {2,3,4} within the solver cap",
            instances: monotone_instances,
            check: domination_monotone,
        },
        Claim {
            id: "nu-lower-bound",
            anchor: "gamma(TD(R,n)) >= nu, the largest residue field size",
            semantics: Semantics::LowerBound,
            domain: "finite rings such as Z6 and Z4xZ3; n in {2,3}",
            instances: nu_instances,
            check: nu_lower_bound,
        },
        Claim {
            id: "domination-infinite-field",
            anchor: "gamma(TD(F,n)) is finite if and only if F is finite",
            semantics: Semantics::Equality,
            domain: "infinite fields",
            instances: single_empty,
            check: infinite_scope,
        },
        Claim {
            id: "domination-infinite-residue",
            anchor: "an infinite residue field makes gamma(TD(R,n)) infinite",
            semantics: Semantics::Equality,
            domain: "rings with an infinite residue field",
            instances: single_empty,
            check: infinite_scope,
        },
        Claim {
            id: "gamma-complete-structures",
            anchor: "gamma(TD(F,2)) recomputed from its complete and complete bipartite components",
            semantics: Semantics::Equality,
            domain: "q in {2,3,4,5,7,8,9,11,13}",
            instances: structure_instances,
            check: gamma_from_structure,
        },
    ]
}

pub(super) fn single_empty(_: Budget) -> Vec<Instance> {
    vec![Instance::default()]
}

pub(super) fn infinite_scope(_: &Instance, _: &Caps) -> Result<Verdict> {
    Ok(Verdict::Skipped("infinite-scope".into()))
}

fn vertex(g: &Graph, r: &Arc<RingSpec>, coords: Vec<u64>) -> usize {
    let x = RingVector::from_indices(r.clone(), coords).expect("coordinates are ring indices");
    g.vertex_of(&x).expect("nonzero vector is a vertex")
}

/// `e_1`-style vector `(first, second, 0, ..., 0)` in `R^n`.
fn head(n: usize, first: u64, second: u64) -> Vec<u64> {
    let mut c = vec![0; n];
    c[0] = first;
    c[1] = second;
    c
}

/// `{(a, 1, 0, ...) : a in R} + {(1, 0, ...)}`.
fn line_construction(g: &Graph, r: &Arc<RingSpec>, n: usize) -> Vec<usize> {
    let one = r.one_idx();
    let mut d: Vec<usize> = (0..r.cardinality()).map(|a| vertex(g, r, head(n, a, one))).collect();
    d.push(vertex(g, r, head(n, one, 0)));
    d.sort_unstable();
    d
}

fn undominated(g: &Graph, set: &[usize]) -> Vec<usize> {
    let mut covered = crate::bitset::BitSet::new(g.vertex_count());
    for &v in set {
        covered.union_with(&g.closed_neighborhood(v));
    }
    (0..g.vertex_count()).filter(|&v| !covered.contains(v)).collect()
}

fn field_instances(b: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z2", "Z3", "Z5", "GF(4)", "Z7", "GF(8)", "GF(9)"] {
        for n in [2, 3] {
            v.push(Instance::ring(r, n));
        }
    }
    v.extend([Instance::ring("Z2", 4), Instance::ring("Z2", 5), Instance::ring("Z3", 4)]);
    if b == Budget::Extended {
        v.extend([Instance::ring("Z11", 3), Instance::ring("Z13", 2), Instance::ring("GF(16)", 2), Instance::ring("GF(4)", 4)]);
    }
    v
}

fn domination_field(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    if !r.is_field() || n < 2 {
        return Err(Error::Precondition(format!("needs a field and n > 1, got {r}, n = {n}")));
    }
    let q = r.cardinality();
    let g = build_td(&r, n, caps)?;
    let set = minimum_dominating_set(&g, caps)?;
    let expected = if q == 2 && n == 3 { 2 } else { q + 1 };
    let d = line_construction(&g, &r, n);
    let gamma = set.len() as u64;
    Ok(Outcome::new(
        gamma == expected,
        json!({"gamma": gamma, "line_set_size": d.len(), "line_set_dominates": is_dominating(&g, &d)}),
        json!({"gamma": expected}),
    )
    .witness(labels(&g, &set))
    .erratum_if(q == 2 && n == 2, "TD(Z2,2) is the edge 01-10 plus the isolated vertex 11, so two vertices dominate")
    .into())
}

fn nonfield_instances(_: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z4", "Z6", "Z2xZ2", "Z8", "Z9"] {
        for n in [2, 3] {
            v.push(Instance::ring(r, n));
        }
    }
    v
}

fn nonfield_remark(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    if r.is_field() || n < 2 {
        return Err(Error::Precondition(format!("needs a non-field and n > 1, got {r}, n = {n}")));
    }
    let g = build_td(&r, n, caps)?;
    let d = line_construction(&g, &r, n);
    let missed = undominated(&g, &d);
    Ok(Outcome::new(
        !missed.is_empty(),
        json!({"dominates": missed.is_empty(), "undominated_vertices": missed.len()}),
        json!({"dominates": false}),
    )
    .witness(labels(&g, &missed[..missed.len().min(5)]))
    .note("vectors (r,1,0,...) with r a nonunit lie in the set itself; the witnesses are vertices it misses")
    .into())
}

fn bound_instances(b: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z4", "Z6", "Z2xZ2"] {
        for n in [2, 3] {
            v.push(Instance::ring(r, n));
        }
    }
    v.extend([Instance::ring("Z8", 2), Instance::ring("Z9", 2)]);
    if b == Budget::Extended {
        v.extend([Instance::ring("Z8", 3), Instance::ring("Z9", 3), Instance::ring("Z4", 4), Instance::ring("Z2xZ2", 4)]);
    }
    v
}

fn nonunits(r: &RingSpec) -> Vec<u64> {
    (0..r.cardinality()).filter(|&a| !r.is_unit_idx(a)).collect()
}

fn bound_check(inst: &Instance, caps: &Caps, linear: bool) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    if r.is_field() || n < 2 {
        return Err(Error::Precondition(format!("needs a non-field and n > 1, got {r}, n = {n}")));
    }
    let g = build_td(&r, n, caps)?;
    let z = nonunits(&r);
    let (bound, construction) = if linear {
        let mut c: Vec<usize> = Vec::new();
        for &a in z.iter().filter(|&&a| a != 0) {
            c.push(vertex(&g, &r, head(n, a, 0)));
            c.push(vertex(&g, &r, head(n, 0, a)));
        }
        for u in (0..r.cardinality()).filter(|&u| r.is_unit_idx(u)) {
            c.push(vertex(&g, &r, head(n, u, r.one_idx())));
        }
        (z.len() as u64 + r.cardinality() - 2, c)
    } else {
        let mut c = Vec::new();
        for &a in &z {
            for &b in &z {
                if (a, b) != (0, 0) {
                    c.push(vertex(&g, &r, head(n, a, b)));
                }
            }
        }
        ((z.len() * z.len()) as u64 - 1, c)
    };
    let mut construction = construction;
    construction.sort_unstable();
    construction.dedup();
    let set = minimum_dominating_set(&g, caps)?;
    let gamma = set.len() as u64;
    let dominates = is_dominating(&g, &construction);
    let holds = gamma <= bound && dominates && construction.len() as u64 == bound;
    Ok(Outcome::new(
        holds,
        json!({"gamma": gamma, "construction_size": construction.len(), "construction_dominates": dominates}),
        json!({"upper_bound": bound, "construction_size": bound, "construction_dominates": true}),
    )
    .witness(labels(&g, &set))
    .into())
}

fn bound_squared(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    bound_check(inst, caps, false)
}

fn bound_linear(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    bound_check(inst, caps, true)
}

fn mekis_instances(_: Budget) -> Vec<Instance> {
    [
        ("Z2", 3, "Z2", 3),
        ("Z3", 2, "Z2", 3),
        ("Z2", 2, "Z3", 2),
        ("Z4", 2, "Z2", 3),
        ("Z5", 2, "Z2", 2),
        ("Z3", 2, "Z3", 2),
        ("Z2", 3, "Z6", 1),
        ("Z2xZ2", 2, "Z2", 3),
    ]
    .into_iter()
    .map(|(r, n, s, m)| Instance::pair(r, n, s, m))
    .collect()
}

fn mekis_bound(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let g = build_td(&*param_r(inst)?, param_n(inst)?, caps)?;
    let h = build_td(&*param_s(inst)?, param_m(inst)?, caps)?;
    let t = tensor_product(&g, &h);
    let gg = minimum_dominating_set(&g, caps)?.len();
    let gh = minimum_dominating_set(&h, caps)?.len();
    let set = minimum_dominating_set(&t, caps)?;
    let bound = gg + gh - 1;
    Ok(Outcome::new(
        set.len() >= bound,
        json!({"gamma_product": set.len(), "gamma_left": gg, "gamma_right": gh}),
        json!({"lower_bound": bound}),
    )
    .witness(labels(&t, &set))
    .into())
}

/// Instances where the inequality is known to fail, with the reason.
fn monotone_known_failure(r: &RingSpec, n: usize) -> Option<&'static str> {
    if n == 2 && (r.is_field() || r.to_string() == "Z2xZ2") {
        Some("TD(R,1) is edgeless or nearly so and needs about |R|-1 vertices, fewer than TD(R,2)")
    } else if r.to_string() == "Z2" && n == 4 {
        Some("gamma(TD(Z2,3)) = 2 is exceptional while gamma(TD(Z2,4)) = 3")
    } else {
        None
    }
}

fn monotone_instances(_: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    for r in ["Z2", "Z3", "Z5", "GF(4)", "Z4", "Z6", "Z2xZ2", "Z9"] {
        let q = ring(r).unwrap().cardinality();
        for n in [2, 3, 4] {
            if td_order(q, n) <= 4096 {
                v.push(Instance::ring(r, n));
            }
        }
    }
    v
}

fn domination_monotone(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    if n < 2 {
        return Err(Error::Precondition("needs n > 1".into()));
    }
    let g = build_td(&r, n, caps)?;
    let h = build_td(&r, n - 1, caps)?;
    let sg = minimum_dominating_set(&g, caps)?;
    let sh = minimum_dominating_set(&h, caps)?;
    let known = monotone_known_failure(&r, n);
    Ok(Outcome::new(
        sg.len() <= sh.len(),
        json!({"gamma_n": sg.len(), "gamma_n_minus_1": sh.len()}),
        json!({"gamma_n_at_most": sh.len()}),
    )
    .witness(json!({"dominating_n": labels(&g, &sg), "dominating_n_minus_1": labels(&h, &sh)}))
    .erratum_if(known.is_some(), known.unwrap_or_default())
    .into())
}

fn nu_instances(b: Budget) -> Vec<Instance> {
    let mut v = Vec::new();
    let list: &[&str] = if b == Budget::Extended {
        &["Z6", "Z4xZ3", "Z2xZ3", "Z2xGF(4)", "Z9", "Z10", "Z3xZ5", "Z8"]
    } else {
        &["Z6", "Z4xZ3", "Z2xZ3", "Z2xGF(4)", "Z9", "Z10"]
    };
    for r in list {
        for n in [2, 3] {
            if td_order(ring(r).unwrap().cardinality(), n) <= 4096 {
                v.push(Instance::ring(r, n));
            }
        }
    }
    v
}

fn nu_lower_bound(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let (r, n) = (param_r(inst)?, param_n(inst)?);
    let nu = r.max_residue_field_size();
    let g = build_td(&r, n, caps)?;
    let set = minimum_dominating_set(&g, caps)?;
    let gamma = set.len() as u64;
    let split = if gamma < nu { idempotent_dominator(&r, n, &g, nu) } else { None };
    let mut out = Outcome::new(gamma >= nu, json!({"gamma": gamma}), json!({"lower_bound": nu}));
    out = match &split {
        Some((e, d)) => out.witness(json!({"minimum": labels(&g, &set), "split_dominator": labels(&g, d)})).erratum_if(
            true,
            format!(
                "with the idempotent e = {}, vectors of (1-e)R^n are orthogonal to all of eR^n and {} of them dominate, fewer than nu",
                r.element_at(*e),
                d.len()
            ),
        ),
        None => out.witness(labels(&g, &set)),
    };
    Ok(out.into())
}

/// Looks for a nontrivial idempotent `e` and fewer than `nu` nonzero
/// vectors of `(1-e)R^n` that dominate `g`. Every such vector is orthogonal
/// to all of `eR^n`, which is what defeats the residue-field bound.
fn idempotent_dominator(r: &Arc<RingSpec>, n: usize, g: &Graph, nu: u64) -> Option<(u64, Vec<usize>)> {
    let one = r.one_idx();
    let size = r.cardinality();
    (0..size).filter(|&e| e != 0 && e != one && r.mul_idx(e, e) == e).find_map(|e| {
        let f = r.sub_idx(one, e);
        let mut pool: Vec<usize> = (0..size.pow(n as u32))
            .filter_map(|k| {
                let coords: Vec<u64> = (0..n).rev().map(|i| r.mul_idx(f, k / size.pow(i as u32) % size)).collect();
                g.vertex_of(&RingVector::from_indices(r.clone(), coords).ok()?)
            })
            .collect();
        pool.sort_unstable();
        pool.dedup();
        if pool.len() > 64 {
            return None;
        }
        (1..nu as usize).find_map(|k| subset_dominating(g, &pool, k, 0, &mut Vec::new())).map(|d| (e, d))
    })
}

fn subset_dominating(g: &Graph, pool: &[usize], k: usize, from: usize, acc: &mut Vec<usize>) -> Option<Vec<usize>> {
    if acc.len() == k {
        return is_dominating(g, acc).then(|| acc.clone());
    }
    for i in from..pool.len() {
        acc.push(pool[i]);
        if let Some(d) = subset_dominating(g, pool, k, i + 1, acc) {
            return Some(d);
        }
        acc.pop();
    }
    None
}

fn structure_instances(_: Budget) -> Vec<Instance> {
    [2, 3, 4, 5, 7, 8, 9, 11, 13].into_iter().map(|q| Instance::ring(&field_spec(q), 2)).collect()
}

fn gamma_from_structure(inst: &Instance, caps: &Caps) -> Result<Verdict> {
    let r = param_r(inst)?;
    if !r.is_field() || param_n(inst)? != 2 {
        return Err(Error::Precondition("needs a field and n = 2".into()));
    }
    let g = build_td(&r, 2, caps)?;
    let mut from_structure = 0u64;
    for c in connected_components(&g) {
        from_structure += match c.class {
            ComponentClass::Complete { .. } => 1,
            ComponentClass::CompleteBipartite { a: 1, .. } => 1,
            ComponentClass::CompleteBipartite { .. } => 2,
            ComponentClass::Other => {
                return Err(Error::SelfCheck(format!("TD({r},2) has a component that is neither complete nor complete bipartite")))
            }
        };
    }
    let set = minimum_dominating_set(&g, caps)?;
    Ok(Outcome::new(set.len() as u64 == from_structure, json!({"gamma_solver": set.len()}), json!({"gamma_components": from_structure}))
        .witness(labels(&g, &set))
        .into())
}
