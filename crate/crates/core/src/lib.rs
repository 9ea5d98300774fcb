//! Total dot product graphs over finite commutative rings.

pub mod bitset;
pub mod caps;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod ring;
pub mod theorems;
pub mod vector;

pub use bitset::BitSet;
pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{Graph, Labels, Variant};
pub use ring::{Arith, Component, Leaf, RingElement, RingSpec};
pub use vector::RingVector;
