//! Finite commutative rings with identity: `Z_n`, `GF(p^k)` and finite direct
//! products of those.
//!
//! Every element has a canonical index in `0..|R|`. The order is mixed-radix over
//! the leaf components with the leftmost leaf most significant; inside a GF leaf
//! the coefficient of `x^i` is the base-`p` digit of weight `p^i`. Index 0 is the
//! zero element. Graph vertex ids are derived from this order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported leaf cardinality.
pub const MAX_LEAF_CARDINALITY: u64 = 1 << 32;

/// Largest supported GF extension degree (`2^32` is the cardinality bound).
const MAX_GF_DEGREE: usize = 32;

/// One direct factor of a [`RingSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Leaf {
    Zn { modulus: u64 },
    /// `GF(p^k) = Z_p[x] / (poly)`; `poly` is monic of degree `k`, low degree first.
    Gf { p: u64, k: usize, poly: Vec<u64> },
}

impl Leaf {
    pub fn zn(modulus: u64) -> Result<Leaf> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        if modulus > MAX_LEAF_CARDINALITY {
            return Err(Error::RingTooLarge(format!("Z{modulus}")));
        }
        Ok(Leaf::Zn { modulus })
    }

    /// The field with `q` elements, built on the lexicographically least monic
    /// irreducible polynomial of the right degree.
    pub fn gf(q: u64) -> Result<Leaf> {
        if q < 2 {
            return Err(Error::ModulusTooSmall(q));
        }
        if q > MAX_LEAF_CARDINALITY {
            return Err(Error::RingTooLarge(format!("GF({q})")));
        }
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let poly = least_irreducible(p, k);
        Ok(Leaf::Gf { p, k, poly })
    }

    pub fn cardinality(&self) -> u64 {
        match self {
            Leaf::Zn { modulus } => *modulus,
            Leaf::Gf { p, k, .. } => p.pow(*k as u32),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Leaf::Zn { modulus } => *modulus,
            Leaf::Gf { p, .. } => *p,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Leaf::Zn { modulus } => is_prime(*modulus),
            Leaf::Gf { .. } => true,
        }
    }

    /// Residue field sizes of the maximal ideals of this leaf.
    pub fn residue_field_sizes(&self) -> Vec<u64> {
        match self {
            Leaf::Zn { modulus } => prime_factors(*modulus),
            Leaf::Gf { .. } => vec![self.cardinality()],
        }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Leaf::Zn { modulus } => {
                let s = a + b;
                if s >= *modulus {
                    s - modulus
                } else {
                    s
                }
            }
            Leaf::Gf { p, k, .. } => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut w = 1;
                for _ in 0..*k {
                    out += ((a % p + b % p) % p) * w;
                    a /= p;
                    b /= p;
                    w *= p;
                }
                out
            }
        }
    }

    fn neg(&self, a: u64) -> u64 {
        match self {
            Leaf::Zn { modulus } => (modulus - a) % modulus,
            Leaf::Gf { p, k, .. } => {
                let mut a = a;
                let mut out = 0;
                let mut w = 1;
                for _ in 0..*k {
                    out += ((p - a % p) % p) * w;
                    a /= p;
                    w *= p;
                }
                out
            }
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            Leaf::Zn { modulus } => mulmod(a, b, *modulus),
            Leaf::Gf { p, k, poly } => {
                let (p, k) = (*p, *k);
                let mut x = [0u64; MAX_GF_DEGREE];
                let mut y = [0u64; MAX_GF_DEGREE];
                digits(a, p, &mut x[..k]);
                digits(b, p, &mut y[..k]);
                let mut prod = [0u64; 2 * MAX_GF_DEGREE];
                for i in 0..k {
                    if x[i] == 0 {
                        continue;
                    }
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p)) % p;
                    }
                }
                // reduce by the monic modulus, highest degree first
                for d in (k..2 * k).rev() {
                    let c = prod[d];
                    if c == 0 {
                        continue;
                    }
                    for (i, &m) in poly[..k].iter().enumerate() {
                        prod[d - k + i] = (prod[d - k + i] + mulmod(p - c, m, p)) % p;
                    }
                    prod[d] = 0;
                }
                undigits(&prod[..k], p)
            }
        }
    }

    fn is_unit(&self, a: u64) -> bool {
        match self {
            Leaf::Zn { modulus } => gcd(a, *modulus) == 1,
            Leaf::Gf { .. } => a != 0,
        }
    }

    fn inverse(&self, a: u64) -> Option<u64> {
        if !self.is_unit(a) {
            return None;
        }
        match self {
            Leaf::Zn { modulus } => Some(mod_inverse(a, *modulus)),
            Leaf::Gf { .. } => {
                // a^(q-2)
                let mut e = self.cardinality() - 2;
                let mut base = a;
                let mut acc = 1;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(acc, base);
                    }
                    base = self.mul(base, base);
                    e >>= 1;
                }
                Some(acc)
            }
        }
    }

    fn component(&self, local: u64) -> Component {
        match self {
            Leaf::Zn { .. } => Component::Residue(local),
            Leaf::Gf { p, k, .. } => {
                let mut c = vec![0; *k];
                digits(local, *p, &mut c);
                Component::Poly(c)
            }
        }
    }

    fn local_index(&self, c: &Component) -> Result<u64> {
        match (self, c) {
            (Leaf::Zn { modulus }, Component::Residue(r)) if r < modulus => Ok(*r),
            (Leaf::Gf { p, k, .. }, Component::Poly(coeffs))
                if coeffs.len() == *k && coeffs.iter().all(|c| c < p) =>
            {
                Ok(undigits(coeffs, *p))
            }
            _ => Err(Error::ShapeMismatch(format!("{c:?} is not a canonical element of {self}"))),
        }
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf::Zn { modulus } => write!(f, "Z{modulus}"),
            Leaf::Gf { .. } => write!(f, "GF({})", self.cardinality()),
        }
    }
}

/// One leaf component of a [`RingElement`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Residue(u64),
    /// Coefficients of a polynomial of degree `< k`, low degree first.
    Poly(Vec<u64>),
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Residue(r) => write!(f, "{r}"),
            Component::Poly(coeffs) => {
                let mut terms = Vec::new();
                for (i, &c) in coeffs.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
                    terms.push(match i {
                        0 => coef,
                        1 => format!("{coef}x"),
                        _ => format!("{coef}x^{i}"),
                    });
                }
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

/// A canonical ring element: one component per leaf of its [`RingSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    components: Vec<Component>,
}

impl RingElement {
    pub fn new(components: Vec<Component>) -> Self {
        RingElement { components }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.len() == 1 {
            return write!(f, "{}", self.components[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A maximal ideal, identified by the leaf it lives in and its residue field size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalIdealInfo {
    pub leaf: usize,
    pub residue_field_size: u64,
}

/// A finite commutative ring given as a direct product of [`Leaf`] rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    leaves: Vec<Leaf>,
    /// `strides[i]` is the weight of leaf `i` in the mixed-radix element index.
    strides: Vec<u64>,
    cardinality: u64,
    characteristic: u64,
}

impl RingSpec {
    pub fn from_leaves(leaves: Vec<Leaf>) -> Result<RingSpec> {
        if leaves.is_empty() {
            return Err(Error::Precondition("a ring needs at least one factor".into()));
        }
        let mut strides = vec![1u64; leaves.len()];
        let mut card: u64 = 1;
        for (i, leaf) in leaves.iter().enumerate().rev() {
            strides[i] = card;
            card = card
                .checked_mul(leaf.cardinality())
                .filter(|c| *c <= MAX_LEAF_CARDINALITY)
                .ok_or_else(|| Error::RingTooLarge(render_leaves(&leaves)))?;
        }
        let characteristic = leaves.iter().map(Leaf::characteristic).fold(1, lcm);
        Ok(RingSpec { leaves, strides, cardinality: card, characteristic })
    }

    pub fn zn(modulus: u64) -> Result<RingSpec> {
        RingSpec::from_leaves(vec![Leaf::zn(modulus)?])
    }

    pub fn gf(q: u64) -> Result<RingSpec> {
        RingSpec::from_leaves(vec![Leaf::gf(q)?])
    }

    /// Direct product; nested products are flattened.
    pub fn product(factors: &[RingSpec]) -> Result<RingSpec> {
        RingSpec::from_leaves(factors.iter().flat_map(|f| f.leaves.iter().cloned()).collect())
    }

    /// Parses the ring mini-language: `atom ("x" atom)*` with
    /// `atom := "Z" INT | "GF(" INT ")"`.
    pub fn parse(text: &str) -> Result<RingSpec> {
        Parser { bytes: text.as_bytes(), pos: 0 }.ring()
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// A single field leaf.
    pub fn is_field(&self) -> bool {
        self.leaves.len() == 1 && self.leaves[0].is_field()
    }

    /// Every leaf is a field, i.e. the ring is presented as a product of fields.
    pub fn is_product_of_fields(&self) -> bool {
        self.leaves.iter().all(Leaf::is_field)
    }

    /// No nonzero nilpotents: every leaf is a field or a squarefree `Z_n`.
    pub fn is_reduced(&self) -> bool {
        self.leaves.iter().all(|l| match l {
            Leaf::Zn { modulus } => {
                let f = prime_factors(*modulus);
                f.iter().product::<u64>() == *modulus
            }
            Leaf::Gf { .. } => true,
        })
    }

    /// The `i`-th leaf as a ring of its own.
    pub fn leaf_ring(&self, i: usize) -> RingSpec {
        RingSpec::from_leaves(vec![self.leaves[i].clone()]).expect("leaf fits")
    }

    /// Splits the product after the first leaf: `R = R_1 x (R_2 x ... x R_t)`.
    pub fn split_first(&self) -> Option<(RingSpec, RingSpec)> {
        if self.leaves.len() < 2 {
            return None;
        }
        let a = RingSpec::from_leaves(self.leaves[..1].to_vec()).ok()?;
        let b = RingSpec::from_leaves(self.leaves[1..].to_vec()).ok()?;
        Some((a, b))
    }

    pub fn residue_field_sizes(&self) -> Vec<MaximalIdealInfo> {
        self.leaves
            .iter()
            .enumerate()
            .flat_map(|(leaf, l)| {
                l.residue_field_sizes()
                    .into_iter()
                    .map(move |residue_field_size| MaximalIdealInfo { leaf, residue_field_size })
            })
            .collect()
    }

    /// `nu`: the largest residue field size.
    pub fn max_residue_field_size(&self) -> u64 {
        self.residue_field_sizes().iter().map(|m| m.residue_field_size).max().unwrap_or(0)
    }

    // ---- index-level arithmetic -------------------------------------------------

    /// Leaf-local index of leaf `i` inside element index `a`.
    #[inline]
    pub fn leaf_digit(&self, a: u64, i: usize) -> u64 {
        (a / self.strides[i]) % self.leaves[i].cardinality()
    }

    #[inline]
    fn zip_leaves(&self, a: u64, b: u64, op: impl Fn(&Leaf, u64, u64) -> u64) -> u64 {
        if self.leaves.len() == 1 {
            return op(&self.leaves[0], a, b);
        }
        self.leaves
            .iter()
            .enumerate()
            .map(|(i, l)| op(l, self.leaf_digit(a, i), self.leaf_digit(b, i)) * self.strides[i])
            .sum()
    }

    pub fn add_idx(&self, a: u64, b: u64) -> u64 {
        self.zip_leaves(a, b, Leaf::add)
    }

    pub fn mul_idx(&self, a: u64, b: u64) -> u64 {
        self.zip_leaves(a, b, Leaf::mul)
    }

    pub fn neg_idx(&self, a: u64) -> u64 {
        self.zip_leaves(a, 0, |l, x, _| l.neg(x))
    }

    pub fn sub_idx(&self, a: u64, b: u64) -> u64 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn is_unit_idx(&self, a: u64) -> bool {
        self.leaves.iter().enumerate().all(|(i, l)| l.is_unit(self.leaf_digit(a, i)))
    }

    /// Nonzero and not a unit (equivalent to being a zero divisor in a finite ring).
    pub fn is_zero_divisor_idx(&self, a: u64) -> bool {
        a != 0 && !self.is_unit_idx(a)
    }

    pub fn inverse_idx(&self, a: u64) -> Option<u64> {
        let mut out = 0;
        for (i, l) in self.leaves.iter().enumerate() {
            out += l.inverse(self.leaf_digit(a, i))? * self.strides[i];
        }
        Some(out)
    }

    pub fn one_idx(&self) -> u64 {
        self.strides.iter().sum()
    }

    /// Image of an integer under `Z -> R`.
    pub fn from_int_idx(&self, k: i64) -> u64 {
        let mut acc = 0;
        let one = self.one_idx();
        for _ in 0..k.unsigned_abs() {
            acc = self.add_idx(acc, one);
        }
        if k < 0 {
            self.neg_idx(acc)
        } else {
            acc
        }
    }

    // ---- element-level API -----------------------------------------------------

    pub fn element_at(&self, index: u64) -> RingElement {
        assert!(index < self.cardinality, "element index {index} out of range for {self}");
        RingElement {
            components: self
                .leaves
                .iter()
                .enumerate()
                .map(|(i, l)| l.component(self.leaf_digit(index, i)))
                .collect(),
        }
    }

    pub fn index_of(&self, a: &RingElement) -> Result<u64> {
        if a.components.len() != self.leaves.len() {
            return Err(Error::ShapeMismatch(format!(
                "element has {} components, {} has {}",
                a.components.len(),
                self,
                self.leaves.len()
            )));
        }
        let mut idx = 0;
        for (i, (l, c)) in self.leaves.iter().zip(&a.components).enumerate() {
            idx += l.local_index(c)? * self.strides[i];
        }
        Ok(idx)
    }

    /// All elements in canonical order; index 0 is zero.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.cardinality).map(|i| self.element_at(i))
    }

    pub fn zero(&self) -> RingElement {
        self.element_at(0)
    }

    pub fn one(&self) -> RingElement {
        self.element_at(self.one_idx())
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        Ok(self.element_at(self.add_idx(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        Ok(self.element_at(self.mul_idx(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        Ok(self.element_at(self.neg_idx(self.index_of(a)?)))
    }

    pub fn is_unit(&self, a: &RingElement) -> Result<bool> {
        Ok(self.is_unit_idx(self.index_of(a)?))
    }

    pub fn is_zero_divisor(&self, a: &RingElement) -> Result<bool> {
        let idx = self.index_of(a)?;
        let zd = self.is_zero_divisor_idx(idx);
        debug_assert!(
            (idx == 0) as u8 + self.is_unit_idx(idx) as u8 + zd as u8 == 1,
            "unit / zero / zero-divisor partition broken at {idx}"
        );
        Ok(zd)
    }

    pub fn inverse(&self, a: &RingElement) -> Result<Option<RingElement>> {
        Ok(self.inverse_idx(self.index_of(a)?).map(|i| self.element_at(i)))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_leaves(&self.leaves))
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingSpec::parse(s)
    }
}

fn render_leaves(leaves: &[Leaf]) -> String {
    leaves.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
}

/// Precomputed addition and multiplication tables over element indices.
///
/// Falls back to direct leaf arithmetic when the ring is too large for a table.
pub struct Arith<'a> {
    ring: &'a RingSpec,
    size: usize,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

/// Rings up to this size get full operation tables.
const TABLE_LIMIT: u64 = 1024;

impl<'a> Arith<'a> {
    pub fn new(ring: &'a RingSpec) -> Self {
        let size = ring.cardinality() as usize;
        let tables = (ring.cardinality() <= TABLE_LIMIT).then(|| {
            let mut add = vec![0u32; size * size];
            let mut mul = vec![0u32; size * size];
            for a in 0..size {
                for b in 0..size {
                    add[a * size + b] = ring.add_idx(a as u64, b as u64) as u32;
                    mul[a * size + b] = ring.mul_idx(a as u64, b as u64) as u32;
                }
            }
            (add, mul)
        });
        Arith { ring, size, tables }
    }

    pub fn ring(&self) -> &RingSpec {
        self.ring
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some((add, _)) => add[a as usize * self.size + b as usize] as u64,
            None => self.ring.add_idx(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some((_, mul)) => mul[a as usize * self.size + b as usize] as u64,
            None => self.ring.mul_idx(a, b),
        }
    }

    /// `sum_i a_i b_i` over coordinate index slices.
    #[inline]
    pub fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

// ---- parsing ---------------------------------------------------------------------

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn ring(mut self) -> Result<RingSpec> {
        let mut leaves = vec![self.atom()?];
        while self.pos < self.bytes.len() {
            if self.bytes[self.pos] != b'x' {
                return self.err("expected `x` between factors");
            }
            self.pos += 1;
            leaves.push(self.atom()?);
        }
        RingSpec::from_leaves(leaves)
    }

    fn atom(&mut self) -> Result<Leaf> {
        let rest = &self.bytes[self.pos..];
        if rest.starts_with(b"GF(") {
            self.pos += 3;
            let q = self.int()?;
            if self.bytes.get(self.pos) != Some(&b')') {
                return self.err("expected `)`");
            }
            self.pos += 1;
            Leaf::gf(q)
        } else if rest.starts_with(b"Z") {
            self.pos += 1;
            Leaf::zn(self.int()?)
        } else {
            self.err("expected `Z<int>` or `GF(<int>)`")
        }
    }

    fn int(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value: u64 = match text.parse() {
            Ok(v) => v,
            Err(_) => {
                return Err(Error::Syntax { position: start, message: "integer too large".into() })
            }
        };
        if value < 2 {
            return Err(Error::ModulusTooSmall(value));
        }
        Ok(value)
    }
}

// ---- number theory and polynomial helpers ------------------------------------------

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `q = p^k` with `p` prime, if it is a prime power.
pub(crate) fn prime_power(q: u64) -> Option<(u64, usize)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let (mut k, mut r) = (0, q);
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

fn digits(mut a: u64, p: u64, out: &mut [u64]) {
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
}

fn undigits(coeffs: &[u64], p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` over `Z_p` (low degree first).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + mulmod(p - lead, c, p)) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for t in 0..count {
            let mut divisor = vec![0; d + 1];
            digits(t, p, &mut divisor[..d]);
            divisor[d] = 1;
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically least monic irreducible polynomial of degree `k` over
/// `Z_p`, comparing coefficient tuples low degree first.
pub(crate) fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for t in 0..count {
        // c_0 is the most significant digit of t so that t walks the lex order
        let mut poly = vec![0; k + 1];
        let mut rest = t;
        for i in (0..k).rev() {
            poly[i] = rest % p;
            rest /= p;
        }
        poly[k] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over Z_{p}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> RingSpec {
        RingSpec::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let z6 = ring("Z6");
        assert_eq!(z6.leaves(), &[Leaf::Zn { modulus: 6 }]);
        assert_eq!(z6.cardinality(), 6);

        let gf4 = ring("GF(4)");
        assert_eq!(gf4.leaves(), &[Leaf::Gf { p: 2, k: 2, poly: vec![1, 1, 1] }]);
        assert_eq!(gf4.cardinality(), 4);

        let r = ring("Z2xGF(9)");
        assert_eq!(r.leaves().len(), 2);
        assert_eq!(r.leaves()[1], Leaf::Gf { p: 3, k: 2, poly: vec![1, 0, 1] });
        assert_eq!(r.cardinality(), 18);
        assert_eq!(r.characteristic(), 6);
        assert_eq!(r.to_string(), "Z2xGF(9)");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(RingSpec::parse("GF(6)"), Err(Error::NotPrimePower(6)));
        assert_eq!(RingSpec::parse("Z1"), Err(Error::ModulusTooSmall(1)));
        assert_eq!(RingSpec::parse("Z0"), Err(Error::ModulusTooSmall(0)));
        assert!(matches!(RingSpec::parse(""), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(RingSpec::parse("Z2*Z3"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(RingSpec::parse("Z2x"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(RingSpec::parse("GF(4"), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(RingSpec::parse("Q5"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(RingSpec::parse("Z"), Err(Error::Syntax { position: 1, .. })));
    }

    #[test]
    fn least_irreducibles() {
        // exhaustive trial division: x^2+x+1 is the only irreducible quadratic over Z_2
        let quads: Vec<Vec<u64>> = (0..4)
            .map(|t| vec![t & 1, t >> 1, 1])
            .filter(|p| is_irreducible(p, 2))
            .collect();
        assert_eq!(quads, vec![vec![1, 1, 1]]);
        assert_eq!(least_irreducible(2, 3), vec![1, 0, 1, 1]);
        assert_eq!(least_irreducible(5, 1), vec![0, 1]);
        assert_eq!(least_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let z6 = ring("Z6");
        let e = |r: &RingSpec, i| r.element_at(i);
        assert_eq!(z6.mul(&e(&z6, 4), &e(&z6, 5)).unwrap(), e(&z6, 2));

        let gf4 = ring("GF(4)");
        let x = RingElement::new(vec![Component::Poly(vec![0, 1])]);
        let x1 = RingElement::new(vec![Component::Poly(vec![1, 1])]);
        assert_eq!(gf4.mul(&x, &x).unwrap(), x1);
        assert_eq!(x1.to_string(), "x+1");

        let z2z3 = ring("Z2xZ3");
        let a = RingElement::new(vec![Component::Residue(1), Component::Residue(2)]);
        let b = RingElement::new(vec![Component::Residue(0), Component::Residue(1)]);
        assert_eq!(z2z3.add(&a, &a).unwrap(), b);
        assert_eq!(b.to_string(), "(0,1)");
    }

    #[test]
    fn shape_mismatch() {
        let z6 = ring("Z6");
        let bad = RingElement::new(vec![Component::Residue(6)]);
        assert!(matches!(z6.add(&bad, &bad), Err(Error::ShapeMismatch(_))));
        let two = RingElement::new(vec![Component::Residue(1), Component::Residue(1)]);
        assert!(matches!(z6.is_unit(&two), Err(Error::ShapeMismatch(_))));
        let poly = RingElement::new(vec![Component::Poly(vec![0, 1])]);
        assert!(z6.index_of(&poly).is_err());
    }

    #[test]
    fn units_and_zero_divisors() {
        let z6 = ring("Z6");
        assert!(z6.is_unit(&z6.element_at(5)).unwrap());
        assert!(z6.is_zero_divisor(&z6.element_at(3)).unwrap());
        assert!(!z6.is_zero_divisor(&z6.element_at(0)).unwrap());
        let z2z3 = ring("Z2xZ3");
        let a = RingElement::new(vec![Component::Residue(1), Component::Residue(0)]);
        assert!(z2z3.is_zero_divisor(&a).unwrap());
        assert_eq!(z6.inverse(&z6.element_at(5)).unwrap(), Some(z6.element_at(5)));
        assert_eq!(z6.inverse(&z6.element_at(2)).unwrap(), None);
    }

    #[test]
    fn enumeration_order() {
        let z3: Vec<String> = ring("Z3").elements().map(|e| e.to_string()).collect();
        assert_eq!(z3, ["0", "1", "2"]);
        let z2z2: Vec<String> = ring("Z2xZ2").elements().map(|e| e.to_string()).collect();
        assert_eq!(z2z2, ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        let gf4: Vec<String> = ring("GF(4)").elements().map(|e| e.to_string()).collect();
        assert_eq!(gf4, ["0", "1", "x", "x+1"]);
        let r = ring("Z2xGF(9)");
        for i in 0..r.cardinality() {
            assert_eq!(r.index_of(&r.element_at(i)).unwrap(), i);
        }
    }

    #[test]
    fn residue_fields() {
        let sizes = |s: &str| {
            ring(s).residue_field_sizes().iter().map(|m| m.residue_field_size).collect::<Vec<_>>()
        };
        assert_eq!(sizes("Z6"), [2, 3]);
        assert_eq!(ring("Z6").max_residue_field_size(), 3);
        assert_eq!(sizes("GF(4)"), [4]);
        assert_eq!(sizes("Z4xZ3"), [2, 3]);
        assert_eq!(ring("Z4xZ3").max_residue_field_size(), 3);
        assert_eq!(ring("Z4xZ3").residue_field_sizes()[1].leaf, 1);
    }

    #[test]
    fn structure_flags() {
        assert!(ring("Z7").is_field());
        assert!(ring("GF(8)").is_field());
        assert!(!ring("Z6").is_field());
        assert!(ring("Z6").is_reduced());
        assert!(!ring("Z4").is_reduced());
        assert!(ring("Z2xGF(4)").is_product_of_fields());
        assert!(!ring("Z2xZ4").is_product_of_fields());
        assert_eq!(ring("Z4xZ6").characteristic(), 12);
    }

    #[test]
    fn crt_isomorphism_z6() {
        let z6 = ring("Z6");
        let z2z3 = ring("Z2xZ3");
        let crt = |a: u64| (a % 2) * 3 + a % 3;
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(crt(z6.add_idx(a, b)), z2z3.add_idx(crt(a), crt(b)));
                assert_eq!(crt(z6.mul_idx(a, b)), z2z3.mul_idx(crt(a), crt(b)));
            }
        }
        assert_eq!(crt(z6.one_idx()), z2z3.one_idx());
    }

    #[test]
    fn gf_inverse_and_table_agree() {
        for s in ["GF(8)", "GF(9)", "GF(16)", "Z2xGF(4)", "Z12"] {
            let r = ring(s);
            let t = Arith::new(&r);
            for a in 0..r.cardinality() {
                if let Some(inv) = r.inverse_idx(a) {
                    assert_eq!(r.mul_idx(a, inv), r.one_idx(), "{s}: {a}");
                }
                for b in 0..r.cardinality() {
                    assert_eq!(t.mul(a, b), r.mul_idx(a, b));
                    assert_eq!(t.add(a, b), r.add_idx(a, b));
                }
            }
        }
    }

    #[test]
    fn from_int() {
        let r = ring("Z2xZ3");
        assert_eq!(r.from_int_idx(0), 0);
        assert_eq!(r.from_int_idx(1), r.one_idx());
        assert_eq!(r.from_int_idx(-1), r.neg_idx(r.one_idx()));
        assert_eq!(r.from_int_idx(6), 0);
    }
}
