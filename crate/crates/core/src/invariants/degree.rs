use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::{prime_factors, Leaf, RingSpec};
use crate::vector::{vector_count, RingVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSequence {
    /// `degrees[v]` counts distinct neighbours; loops add nothing.
    pub degrees: Vec<usize>,
    /// degree -> number of vertices with it
    pub histogram: BTreeMap<usize, usize>,
    pub min: usize,
    pub max: usize,
}

impl DegreeSequence {
    /// The multiset in non-increasing order.
    pub fn multiset(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut histogram = BTreeMap::new();
    for &d in &degrees {
        *histogram.entry(d).or_insert(0) += 1;
    }
    DegreeSequence {
        min: degrees.iter().copied().min().unwrap_or(0),
        max: degrees.iter().copied().max().unwrap_or(0),
        degrees,
        histogram,
    }
}

/// Which closed formula produced a degree prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeCase {
    UnitCoordinate,
    Reduced,
    ProductRecursion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreePrediction {
    Formula { degree: u64, case: DegreeCase },
    NoFormula,
}

impl DegreePrediction {
    pub fn degree(&self) -> Option<u64> {
        match self {
            DegreePrediction::Formula { degree, .. } => Some(*degree),
            DegreePrediction::NoFormula => None,
        }
    }
}

/// Closed-form degree of the nonzero vector `a` in `TD(R,n)`, if one applies.
///
/// Tried in order: some coordinate is a unit; `R` is reduced (one column per
/// residue field); `R = R_1 x R'` split at the first leaf, recursing into
/// both factors.
pub fn predicted_degree(ring: &RingSpec, n: usize, a: &RingVector) -> Result<DegreePrediction> {
    if a.dim() != n || **a.ring() != *ring {
        return Err(Error::DimensionMismatch(format!("vector {a} is not in {ring}^{n}")));
    }
    if a.is_zero() {
        return Err(Error::Precondition("degree prediction needs a nonzero vector".into()));
    }
    Ok(match annihilator_size(ring, n, a.coord_indices()) {
        Some((count, case)) => {
            let self_orthogonal = a.norm_idx() == 0;
            // the zero vector and, if isotropic, `a` itself are not neighbours
            let degree = count - 1 - u64::from(self_orthogonal);
            DegreePrediction::Formula { degree, case }
        }
        None => DegreePrediction::NoFormula,
    })
}

/// Number of `b` in `R^n` with `a.b = 0`, by formula only.
fn annihilator_size(ring: &RingSpec, n: usize, a: &[u64]) -> Option<(u64, DegreeCase)> {
    let total = vector_count(ring, n)?;
    if a.iter().all(|&c| c == 0) {
        return Some((total, DegreeCase::ProductRecursion));
    }
    if a.iter().any(|&c| ring.is_unit_idx(c)) {
        return Some((total / ring.cardinality(), DegreeCase::UnitCoordinate));
    }
    if ring.is_reduced() {
        // one column per residue field; squarefree Z_m leaves split by CRT
        let mut count = total;
        for (i, leaf) in ring.leaves().iter().enumerate() {
            let fields = match leaf {
                Leaf::Zn { modulus } => prime_factors(*modulus),
                Leaf::Gf { .. } => vec![leaf.cardinality()],
            };
            for f in fields {
                let modulus = if leaf.is_field() { leaf.cardinality() } else { f };
                if a.iter().any(|&c| ring.leaf_digit(c, i) % modulus != 0) {
                    count /= f;
                }
            }
        }
        return Some((count, DegreeCase::Reduced));
    }
    let (first, rest) = ring.split_first()?;
    let split = rest.cardinality();
    let head: Vec<u64> = a.iter().map(|&c| c / split).collect();
    let tail: Vec<u64> = a.iter().map(|&c| c % split).collect();
    let (h, _) = annihilator_size(&first, n, &head)?;
    let (t, _) = annihilator_size(&rest, n, &tail)?;
    Some((h * t, DegreeCase::ProductRecursion))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::caps::Caps;
    use crate::graph::build_td;

    fn check_all(spec: &str, n: usize) -> (usize, usize) {
        let ring = RingSpec::parse(spec).unwrap();
        let g = build_td(&ring, n, &Caps::default()).unwrap();
        let seq = degree_sequence(&g);
        let (mut hit, mut none) = (0, 0);
        for v in 0..g.vertex_count() {
            match predicted_degree(&ring, n, &g.vector(v).unwrap()).unwrap() {
                DegreePrediction::Formula { degree, .. } => {
                    assert_eq!(degree as usize, seq.degrees[v], "{spec} n={n} {}", g.label(v));
                    hit += 1;
                }
                DegreePrediction::NoFormula => none += 1,
            }
        }
        (hit, none)
    }

    #[test]
    fn fig1_degrees() {
        let g = build_td(&RingSpec::parse("Z2").unwrap(), 3, &Caps::default()).unwrap();
        assert_eq!(degree_sequence(&g).multiset(), [3, 3, 3, 3, 2, 2, 2]);
    }

    #[test]
    fn semi_regular_z5() {
        let g = build_td(&RingSpec::parse("Z5").unwrap(), 2, &Caps::default()).unwrap();
        let s = degree_sequence(&g);
        assert_eq!(s.histogram, BTreeMap::from([(3, 8), (4, 16)]));
        let g = build_td(&RingSpec::parse("Z7").unwrap(), 2, &Caps::default()).unwrap();
        assert_eq!(degree_sequence(&g).histogram, BTreeMap::from([(6, 48)]));
    }

    #[test]
    fn formula_examples() {
        let r = Arc::new(RingSpec::parse("Z2").unwrap());
        let a = RingVector::from_indices(r.clone(), vec![1, 1, 1]).unwrap();
        assert_eq!(
            predicted_degree(&r, 3, &a).unwrap(),
            DegreePrediction::Formula { degree: 3, case: DegreeCase::UnitCoordinate }
        );
        let r = Arc::new(RingSpec::parse("Z2xZ3").unwrap());
        let e = |x: u64, y: u64| x * 3 + y;
        let a = RingVector::from_indices(r.clone(), vec![e(1, 1), e(0, 0)]).unwrap();
        assert_eq!(predicted_degree(&r, 2, &a).unwrap().degree(), Some(5));
        let a = RingVector::from_indices(r.clone(), vec![e(1, 0), e(1, 0)]).unwrap();
        assert_eq!(
            predicted_degree(&r, 2, &a).unwrap(),
            DegreePrediction::Formula { degree: 16, case: DegreeCase::Reduced }
        );
        assert!(predicted_degree(&r, 2, &RingVector::zero(r.clone(), 2)).is_err());
    }

    #[test]
    fn formulas_match_brute_force() {
        for spec in ["Z4", "Z6", "Z2xZ3", "Z2xZ2", "Z9", "Z4xZ3", "Z2xZ4", "GF(4)xZ2"] {
            for n in 1..=3 {
                check_all(spec, n);
            }
        }
        // Z4: only the vectors without a unit coordinate lack a formula
        assert_eq!(check_all("Z4", 2), (12, 3));
        for spec in ["Z6", "Z2xZ3", "Z2xZ2", "Z30", "GF(4)xZ2"] {
            assert_eq!(check_all(spec, 2).1, 0, "{spec}");
        }
    }
}
