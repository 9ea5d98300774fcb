//! Vectors in `R^n`: dot products, the quadratic norm `sum a_i^2`, isotropic
//! vector counts and the isotropic-pair clique constructions.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ring::{Leaf, RingElement, RingSpec};

/// An element of `R^n`, stored as canonical element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingVector {
    ring: Arc<RingSpec>,
    coords: Vec<u64>,
}

impl RingVector {
    pub fn new(ring: Arc<RingSpec>, coords: &[RingElement]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch("vectors need n >= 1".into()));
        }
        let coords = coords.iter().map(|c| ring.index_of(c)).collect::<Result<Vec<_>>>()?;
        Ok(RingVector { ring, coords })
    }

    pub fn from_indices(ring: Arc<RingSpec>, coords: Vec<u64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch("vectors need n >= 1".into()));
        }
        if let Some(bad) = coords.iter().find(|&&c| c >= ring.cardinality()) {
            return Err(Error::ShapeMismatch(format!("index {bad} outside {ring}")));
        }
        Ok(RingVector { ring, coords })
    }

    pub fn zero(ring: Arc<RingSpec>, n: usize) -> Self {
        RingVector { ring, coords: vec![0; n] }
    }

    /// `e_{i+1}`: 1 in coordinate `i` (0-based), 0 elsewhere.
    pub fn basis(ring: Arc<RingSpec>, n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = ring.one_idx();
        RingVector { ring, coords }
    }

    /// The vector at mixed-radix position `index` of `R^n` (first coordinate most significant).
    pub fn at_index(ring: Arc<RingSpec>, n: usize, mut index: u64) -> Self {
        let q = ring.cardinality();
        let mut coords = vec![0; n];
        for c in coords.iter_mut().rev() {
            *c = index % q;
            index /= q;
        }
        RingVector { ring, coords }
    }

    pub fn index(&self) -> u64 {
        let q = self.ring.cardinality();
        self.coords.iter().fold(0, |acc, &c| acc * q + c)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord_indices(&self) -> &[u64] {
        &self.coords
    }

    pub fn coords(&self) -> Vec<RingElement> {
        self.coords.iter().map(|&c| self.ring.element_at(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &RingVector) -> Result<()> {
        if *self.ring != *other.ring {
            return Err(Error::DimensionMismatch(format!(
                "vectors over different rings {} and {}",
                self.ring, other.ring
            )));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn dot_idx(&self, other: &RingVector) -> Result<u64> {
        self.check_compatible(other)?;
        let r = &self.ring;
        Ok(self.coords.iter().zip(&other.coords).fold(0, |acc, (&a, &b)| r.add_idx(acc, r.mul_idx(a, b))))
    }

    pub fn dot(&self, other: &RingVector) -> Result<RingElement> {
        Ok(self.ring.element_at(self.dot_idx(other)?))
    }

    pub fn norm_idx(&self) -> u64 {
        self.dot_idx(self).expect("a vector is compatible with itself")
    }

    /// `a_1^2 + ... + a_n^2`.
    pub fn norm(&self) -> RingElement {
        self.ring.element_at(self.norm_idx())
    }

    pub fn add(&self, other: &RingVector) -> Result<RingVector> {
        self.check_compatible(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| self.ring.add_idx(a, b)).collect();
        Ok(RingVector { ring: self.ring.clone(), coords })
    }

    /// `r * self` for a ring element given by index.
    pub fn scale_idx(&self, r: u64) -> RingVector {
        let coords = self.coords.iter().map(|&a| self.ring.mul_idx(r, a)).collect();
        RingVector { ring: self.ring.clone(), coords }
    }

    pub fn scale(&self, r: &RingElement) -> Result<RingVector> {
        Ok(self.scale_idx(self.ring.index_of(r)?))
    }

    /// Vertex label: digits run together over `Z_n` with `n <= 10` (`"110"`),
    /// otherwise coordinates joined by `|` (`"(1,2)|(0,1)"`).
    pub fn label(&self) -> String {
        let compact = matches!(self.ring.leaves(), [Leaf::Zn { modulus }] if *modulus <= 10);
        let parts: Vec<String> = self.coords.iter().map(|&c| self.ring.element_at(c).to_string()).collect();
        if compact {
            parts.concat()
        } else {
            parts.join("|")
        }
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `|R|^n`, if it fits in a `u64`.
pub fn vector_count(ring: &RingSpec, n: usize) -> Option<u64> {
    ring.cardinality().checked_pow(u32::try_from(n).ok()?)
}

pub(crate) fn check_enumeration(ring: &RingSpec, n: usize, caps: &Caps) -> Result<u64> {
    match vector_count(ring, n) {
        Some(c) if c <= caps.enumeration => Ok(c),
        Some(c) => Err(Error::cap("vector space", c, caps.enumeration)),
        None => Err(Error::cap("vector space", u64::MAX, caps.enumeration)),
    }
}

/// Solution counts of `x_1^2 + ... + x_n^2 = 0` over `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyCensus {
    pub ring: RingSpec,
    pub n: usize,
    /// Including the zero vector.
    pub total_solutions: u64,
    /// `O(R, n)`: nonzero solutions.
    pub nontrivial: u64,
}

/// Exhaustive count of isotropic vectors in `R^n`.
pub fn isotropy_census(ring: &RingSpec, n: usize, caps: &Caps) -> Result<IsotropyCensus> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    check_enumeration(ring, n, caps)?;
    let q = ring.cardinality();
    let squares: Vec<u64> = (0..q).map(|a| ring.mul_idx(a, a)).collect();
    // odometer over R^n with running prefix norms
    let mut digits = vec![0u64; n];
    let mut prefix = vec![0u64; n + 1];
    let mut total = 0u64;
    loop {
        for i in 0..n {
            prefix[i + 1] = ring.add_idx(prefix[i], squares[digits[i] as usize]);
        }
        if prefix[n] == 0 {
            total += 1;
        }
        // advance the odometer
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(IsotropyCensus { ring: ring.clone(), n, total_solutions: total, nontrivial: total - 1 });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Solution count of `sum x_i^2 = 0` over a field and whether the characteristic divides it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChevalleyWarning {
    pub count: u64,
    pub divisible: bool,
}

pub fn chevalley_warning_check(ring: &RingSpec, n: usize, caps: &Caps) -> Result<ChevalleyWarning> {
    if !ring.is_field() {
        return Err(Error::Precondition(format!("{ring} is not a field")));
    }
    if n <= 2 {
        return Err(Error::Precondition(format!("n = {n} must exceed 2")));
    }
    let census = isotropy_census(ring, n, caps)?;
    let count = census.total_solutions;
    Ok(ChevalleyWarning { count, divisible: count % ring.characteristic() == 0 })
}

/// First `(a, b) != (0, 0)` in lexicographic index order with `a^2 + b^2 = 0`.
pub fn find_isotropic_pair(ring: &RingSpec) -> Option<(RingElement, RingElement)> {
    let q = ring.cardinality();
    (0..q)
        .flat_map(|a| (0..q).map(move |b| (a, b)))
        .skip(1)
        .find(|&(a, b)| ring.add_idx(ring.mul_idx(a, a), ring.mul_idx(b, b)) == 0)
        .map(|(a, b)| (ring.element_at(a), ring.element_at(b)))
}

/// The pairwise-orthogonal set built from `a_i = a e_{2i-1} + b e_{2i}`,
/// `i = 1..floor(n/2)`, given `a^2 + b^2 = 0`.
///
/// Over a field the set is the span of the `a_i` minus zero; over a general
/// ring it is the nonzero 0/1-combinations. For odd `n`, `e_n` is appended.
/// Members are sorted by vertex index and checked pairwise orthogonal.
pub fn build_isotropic_pair_clique(
    ring: &Arc<RingSpec>,
    n: usize,
    a: &RingElement,
    b: &RingElement,
    caps: &Caps,
) -> Result<Vec<RingVector>> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let (ai, bi) = (ring.index_of(a)?, ring.index_of(b)?);
    if (ai, bi) == (0, 0) {
        return Err(Error::Precondition("(a, b) must be nonzero".into()));
    }
    if ring.add_idx(ring.mul_idx(ai, ai), ring.mul_idx(bi, bi)) != 0 {
        return Err(Error::Precondition(format!("{a}^2 + {b}^2 is not zero in {ring}")));
    }
    let blocks = n / 2;
    let coefficients: Vec<u64> = if ring.is_field() { (0..ring.cardinality()).collect() } else { vec![0, ring.one_idx()] };
    let combos = (coefficients.len() as u64).checked_pow(blocks as u32);
    match combos {
        Some(c) if c <= caps.enumeration => {}
        _ => return Err(Error::cap("clique construction", combos.unwrap_or(u64::MAX), caps.enumeration)),
    }

    let mut members = BTreeSet::new();
    let mut choice = vec![0usize; blocks];
    loop {
        let mut coords = vec![0u64; n];
        for (i, &c) in choice.iter().enumerate() {
            let eps = coefficients[c];
            coords[2 * i] = ring.mul_idx(eps, ai);
            coords[2 * i + 1] = ring.mul_idx(eps, bi);
        }
        if coords.iter().any(|&c| c != 0) {
            members.insert(coords);
        }
        let mut i = blocks;
        let done = loop {
            if i == 0 {
                break true;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < coefficients.len() {
                break false;
            }
            choice[i] = 0;
        };
        if done {
            break;
        }
    }
    let appended = n % 2 == 1;
    if appended {
        members.insert(RingVector::basis(ring.clone(), n, n - 1).coords);
    }

    let vectors: Vec<RingVector> = {
        let mut v: Vec<RingVector> =
            members.into_iter().map(|coords| RingVector { ring: ring.clone(), coords }).collect();
        v.sort_by_key(RingVector::index);
        v
    };
    let e_n = appended.then(|| RingVector::basis(ring.clone(), n, n - 1));
    for (i, x) in vectors.iter().enumerate() {
        if Some(x) != e_n.as_ref() && x.norm_idx() != 0 {
            return Err(Error::SelfCheck(format!("member {x} is not isotropic")));
        }
        for y in &vectors[i + 1..] {
            if x.dot_idx(y)? != 0 {
                return Err(Error::SelfCheck(format!("members {x} and {y} are not orthogonal")));
            }
        }
    }
    Ok(vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> Arc<RingSpec> {
        Arc::new(RingSpec::parse(s).unwrap())
    }

    fn v(r: &Arc<RingSpec>, digits: &[u64]) -> RingVector {
        RingVector::from_indices(r.clone(), digits.to_vec()).unwrap()
    }

    #[test]
    fn dot_examples() {
        let z2 = ring("Z2");
        assert_eq!(v(&z2, &[1, 1, 0]).dot_idx(&v(&z2, &[1, 1, 1])).unwrap(), 0);
        assert_eq!(v(&z2, &[1, 0, 0]).dot_idx(&v(&z2, &[1, 1, 0])).unwrap(), 1);
        for s in ["Z6", "GF(4)", "Z2xZ3"] {
            let r = ring(s);
            let e1 = RingVector::basis(r.clone(), 3, 0);
            let e2 = RingVector::basis(r.clone(), 3, 1);
            assert_eq!(e1.dot(&e2).unwrap(), r.zero());
            assert_eq!(e1.norm(), r.one());
        }
    }

    #[test]
    fn dot_mismatch() {
        let z2 = ring("Z2");
        let z3 = ring("Z3");
        assert!(matches!(v(&z2, &[1, 0]).dot(&v(&z2, &[1, 0, 0])), Err(Error::DimensionMismatch(_))));
        assert!(matches!(v(&z2, &[1, 0]).dot(&v(&z3, &[1, 0])), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn norm_examples() {
        let z2 = ring("Z2");
        assert_eq!(v(&z2, &[1, 1, 0]).norm_idx(), 0);
        assert_eq!(v(&z2, &[1, 1, 1]).norm_idx(), 1);
        let z3 = ring("Z3");
        assert_eq!(v(&z3, &[1, 1, 1]).norm_idx(), 0);
    }

    #[test]
    fn labels_and_indices() {
        let z2 = ring("Z2");
        assert_eq!(v(&z2, &[1, 1, 0]).label(), "110");
        assert_eq!(v(&z2, &[1, 1, 0]).index(), 6);
        assert_eq!(RingVector::at_index(z2.clone(), 3, 6), v(&z2, &[1, 1, 0]));
        let r = ring("Z2xZ3");
        // (1,2) has index 5, (0,1) index 1
        assert_eq!(v(&r, &[5, 1]).label(), "(1,2)|(0,1)");
        let gf4 = ring("GF(4)");
        assert_eq!(v(&gf4, &[2, 3]).label(), "x|x+1");
        assert_eq!(v(&ring("Z11"), &[10, 1]).label(), "10|1");
    }

    #[test]
    fn census_examples() {
        let caps = Caps::default();
        assert_eq!(isotropy_census(&ring("Z5"), 2, &caps).unwrap().nontrivial, 8);
        assert_eq!(isotropy_census(&ring("Z3"), 2, &caps).unwrap().nontrivial, 0);
        let c = isotropy_census(&ring("Z3"), 3, &caps).unwrap();
        assert_eq!(c.total_solutions, 9);
        assert_eq!(c.total_solutions, c.nontrivial + 1);
        let small = Caps { enumeration: 100, ..caps };
        assert!(matches!(isotropy_census(&ring("Z5"), 3, &small), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn chevalley_warning_examples() {
        let caps = Caps::default();
        assert_eq!(
            chevalley_warning_check(&ring("Z3"), 3, &caps).unwrap(),
            ChevalleyWarning { count: 9, divisible: true }
        );
        assert_eq!(chevalley_warning_check(&ring("Z5"), 3, &caps).unwrap().count, 25);
        assert_eq!(
            chevalley_warning_check(&ring("GF(4)"), 3, &caps).unwrap(),
            ChevalleyWarning { count: 16, divisible: true }
        );
        assert!(matches!(chevalley_warning_check(&ring("Z6"), 3, &caps), Err(Error::Precondition(_))));
        assert!(matches!(chevalley_warning_check(&ring("Z5"), 2, &caps), Err(Error::Precondition(_))));
    }

    #[test]
    fn isotropic_pairs() {
        let z5 = RingSpec::parse("Z5").unwrap();
        let (a, b) = find_isotropic_pair(&z5).unwrap();
        assert_eq!((z5.index_of(&a).unwrap(), z5.index_of(&b).unwrap()), (1, 2));
        assert!(find_isotropic_pair(&RingSpec::parse("Z7").unwrap()).is_none());
        let z4 = RingSpec::parse("Z4").unwrap();
        let (a, b) = find_isotropic_pair(&z4).unwrap();
        assert_eq!((z4.index_of(&a).unwrap(), z4.index_of(&b).unwrap()), (0, 2));
    }

    #[test]
    fn clique_construction_examples() {
        let caps = Caps::default();
        let z5 = ring("Z5");
        let (a, b) = (z5.element_at(1), z5.element_at(2));
        assert_eq!(build_isotropic_pair_clique(&z5, 2, &a, &b, &caps).unwrap().len(), 4);
        assert_eq!(build_isotropic_pair_clique(&z5, 3, &a, &b, &caps).unwrap().len(), 5);

        let z2 = ring("Z2");
        let one = z2.one();
        let clique = build_isotropic_pair_clique(&z2, 3, &one, &one, &caps).unwrap();
        let labels: Vec<String> = clique.iter().map(RingVector::label).collect();
        assert_eq!(labels, ["001", "110"]);

        let err = build_isotropic_pair_clique(&z5, 2, &z5.one(), &z5.one(), &caps);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let err = build_isotropic_pair_clique(&z5, 2, &z5.zero(), &z5.zero(), &caps);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn ring_case_clique_size() {
        let caps = Caps::default();
        let r = ring("Z2xZ2");
        let (a, b) = find_isotropic_pair(&r).unwrap();
        for n in 2..=5 {
            let c = build_isotropic_pair_clique(&r, n, &a, &b, &caps).unwrap();
            let expected = (1usize << (n / 2)) - 1 + n % 2;
            assert_eq!(c.len(), expected, "n = {n}");
        }
    }
}
