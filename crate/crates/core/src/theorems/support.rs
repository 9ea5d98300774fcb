use std::sync::Arc;

use serde_json::{json, Value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{build_td, build_td_closed, Graph};
use crate::ring::{Leaf, RingSpec};

use super::Instance;

pub(super) fn ring(spec: &str) -> Result<Arc<RingSpec>> {
    RingSpec::parse(spec).map(Arc::new)
}

pub(super) fn param_r(inst: &Instance) -> Result<Arc<RingSpec>> {
    ring(inst.r.as_deref().ok_or_else(|| Error::Precondition("missing parameter r".into()))?)
}

pub(super) fn param_s(inst: &Instance) -> Result<Arc<RingSpec>> {
    ring(inst.s.as_deref().ok_or_else(|| Error::Precondition("missing parameter s".into()))?)
}

pub(super) fn param_n(inst: &Instance) -> Result<usize> {
    inst.n.ok_or_else(|| Error::Precondition("missing parameter n".into()))
}

pub(super) fn param_m(inst: &Instance) -> Result<usize> {
    inst.m.ok_or_else(|| Error::Precondition("missing parameter m".into()))
}

pub(super) fn graph(r: &RingSpec, n: usize, closed: bool, caps: &Caps) -> Result<Graph> {
    if closed {
        build_td_closed(r, n, caps)
    } else {
        build_td(r, n, caps)
    }
}

pub(super) fn labels(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v)).collect()
}

/// `|R|^n - 1`, the vertex count of `TD(R, n)`, if it fits.
pub(super) fn td_order(size: u64, n: usize) -> u64 {
    size.checked_pow(n as u32).map_or(u64::MAX, |c| c - 1)
}

pub(super) fn pow(base: u64, exp: usize) -> u64 {
    base.pow(exp as u32)
}

/// `R x S` together with the projection of each element index onto the two
/// factors. Coprime cyclic factors give `Z_{ab}` via CRT, anything else the
/// flattened direct product.
pub(super) struct ProductRing {
    pub ring: Arc<RingSpec>,
    pub left: Arc<RingSpec>,
    pub right: Arc<RingSpec>,
    proj: Vec<(u64, u64)>,
}

impl ProductRing {
    pub fn new(left: Arc<RingSpec>, right: Arc<RingSpec>) -> Result<Self> {
        let (ring, proj) = match (left.leaves(), right.leaves()) {
            ([Leaf::Zn { modulus: a }], [Leaf::Zn { modulus: b }]) if gcd(*a, *b) == 1 => {
                let (a, b) = (*a, *b);
                (RingSpec::zn(a * b)?, (0..a * b).map(|k| (k % a, k % b)).collect())
            }
            _ => {
                let p = RingSpec::product(&[(*left).clone(), (*right).clone()])?;
                let rs = right.cardinality();
                let proj = (0..p.cardinality()).map(|k| (k / rs, k % rs)).collect();
                (p, proj)
            }
        };
        Ok(ProductRing { ring: Arc::new(ring), left, right, proj })
    }

    /// Splits a coordinate vector over the product into its two factor vectors.
    pub fn split(&self, coords: &[u64]) -> (Vec<u64>, Vec<u64>) {
        coords.iter().map(|&c| self.proj[c as usize]).unzip()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Mixed-radix index of a coordinate vector, first coordinate most significant.
pub(super) fn vector_index(size: u64, coords: &[u64]) -> u64 {
    coords.iter().fold(0, |acc, &c| acc * size + c)
}

pub(super) fn component_census(g: &Graph) -> std::collections::BTreeMap<String, usize> {
    use crate::invariants::{connected_components, ComponentClass};
    let mut out = std::collections::BTreeMap::new();
    for c in connected_components(g) {
        let key = match c.class {
            ComponentClass::Complete { m } => format!("K{m}"),
            ComponentClass::CompleteBipartite { a, b } => format!("K{a},{b}"),
            ComponentClass::Other => "other".to_string(),
        };
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

pub(super) fn pair_json(a: impl serde::Serialize, b: impl serde::Serialize) -> Value {
    json!([a, b])
}
