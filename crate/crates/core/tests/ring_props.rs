//! Ring axioms, parser round trips and dot product laws on random small rings.

use std::sync::Arc;

use proptest::prelude::*;
use tdgraph::{RingSpec, RingVector};

fn leaf() -> impl Strategy<Value = String> {
    prop_oneof![
        (2u64..=12).prop_map(|m| format!("Z{m}")),
        prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 16]).prop_map(|q| format!("GF({q})")),
    ]
}

fn spec() -> impl Strategy<Value = RingSpec> {
    prop::collection::vec(leaf(), 1..=2)
        .prop_map(|ls| ls.join("x"))
        .prop_filter_map("ring too large", |s| RingSpec::parse(&s).ok().filter(|r| r.cardinality() <= 256))
}

/// A ring together with three element indices.
fn ring_and_elements() -> impl Strategy<Value = (RingSpec, u64, u64, u64)> {
    spec().prop_flat_map(|r| {
        let q = r.cardinality();
        (Just(r), 0..q, 0..q, 0..q)
    })
}

proptest! {
    #[test]
    fn ring_axioms((r, a, b, c) in ring_and_elements()) {
        let (zero, one) = (0, r.one_idx());
        prop_assert_eq!(r.add_idx(a, b), r.add_idx(b, a));
        prop_assert_eq!(r.mul_idx(a, b), r.mul_idx(b, a));
        prop_assert_eq!(r.add_idx(r.add_idx(a, b), c), r.add_idx(a, r.add_idx(b, c)));
        prop_assert_eq!(r.mul_idx(r.mul_idx(a, b), c), r.mul_idx(a, r.mul_idx(b, c)));
        prop_assert_eq!(r.mul_idx(a, r.add_idx(b, c)), r.add_idx(r.mul_idx(a, b), r.mul_idx(a, c)));
        prop_assert_eq!(r.add_idx(a, zero), a);
        prop_assert_eq!(r.mul_idx(a, one), a);
        prop_assert_eq!(r.add_idx(a, r.neg_idx(a)), zero);
        prop_assert_eq!(r.sub_idx(r.add_idx(a, b), b), a);
    }

    #[test]
    fn units_are_invertible((r, a, _b, _c) in ring_and_elements()) {
        let brute = (0..r.cardinality()).any(|x| r.mul_idx(a, x) == r.one_idx());
        prop_assert_eq!(r.is_unit_idx(a), brute);
        if let Some(inv) = r.inverse_idx(a) {
            prop_assert_eq!(r.mul_idx(a, inv), r.one_idx());
        }
        prop_assert_eq!(r.is_field(), (1..r.cardinality()).all(|x| r.is_unit_idx(x)));
    }

    #[test]
    fn parse_round_trip(r in spec()) {
        let text = r.to_string();
        let again = RingSpec::parse(&text).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert_eq!(again.to_string(), text);
    }

    #[test]
    fn element_index_round_trip((r, a, _b, _c) in ring_and_elements()) {
        let e = r.element_at(a);
        prop_assert_eq!(r.index_of(&e).unwrap(), a);
    }

    #[test]
    fn dot_is_symmetric_and_bilinear(
        (r, n, xs, ys, zs, s) in spec().prop_flat_map(|r| {
            let q = r.cardinality();
            (1usize..=4).prop_flat_map(move |n| {
                let v = prop::collection::vec(0..q, n);
                (Just(r.clone()), Just(n), v.clone(), v.clone(), v, 0..q)
            })
        })
    ) {
        let r = Arc::new(r);
        let vec = |c: &Vec<u64>| RingVector::from_indices(r.clone(), c.clone()).unwrap();
        let (x, y, z) = (vec(&xs), vec(&ys), vec(&zs));
        prop_assert_eq!(x.dim(), n);
        prop_assert_eq!(x.dot_idx(&y).unwrap(), y.dot_idx(&x).unwrap());
        let lhs = x.add(&y).unwrap().dot_idx(&z).unwrap();
        prop_assert_eq!(lhs, r.add_idx(x.dot_idx(&z).unwrap(), y.dot_idx(&z).unwrap()));
        prop_assert_eq!(x.scale_idx(s).dot_idx(&z).unwrap(), r.mul_idx(s, x.dot_idx(&z).unwrap()));
        prop_assert_eq!(x.norm_idx(), x.dot_idx(&x).unwrap());
    }
}

#[test]
fn rejects_bad_specs() {
    for bad in ["", "Z1", "Z", "GF(6)", "Z2x", "Q3", "Z(4", "GF(4"] {
        assert!(RingSpec::parse(bad).is_err(), "{bad}");
    }
}
