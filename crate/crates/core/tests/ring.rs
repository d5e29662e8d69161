mod common;

use common::{bits_of, ring, schoolbook_cyclic};
use dccodes::{FreePoly, RingElement};
use proptest::prelude::*;

fn arb_pair(max_m: usize) -> impl Strategy<Value = (usize, u64, u64)> {
    (1..=max_m).prop_flat_map(|m| {
        let top = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        (Just(m), 0..=top, 0..=top)
    })
}

fn arb_triple(max_m: usize) -> impl Strategy<Value = (usize, u64, u64, u64)> {
    (1..=max_m).prop_flat_map(|m| {
        let top = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        (Just(m), 0..=top, 0..=top, 0..=top)
    })
}

fn arb_wide() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (65usize..=200).prop_flat_map(|m| {
        (
            Just(m),
            prop::collection::vec(0..m, 0..12),
            prop::collection::vec(0..m, 0..12),
        )
    })
}

#[test]
fn mul_matches_schoolbook_exhaustively_up_to_8() {
    for m in 1..=8usize {
        for a in 0..1u64 << m {
            for b in 0..1u64 << m {
                let got = ring(m, a).mul(&ring(m, b)).unwrap();
                let want = schoolbook_cyclic(&bits_of(a, m), &bits_of(b, m));
                assert_eq!(
                    bits_of(got.as_u64().unwrap(), m),
                    want,
                    "m={m} a={a:b} b={b:b}"
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn mul_matches_schoolbook((m, a, b) in arb_pair(64)) {
        let got = ring(m, a).mul(&ring(m, b)).unwrap();
        prop_assert_eq!(bits_of(got.as_u64().unwrap(), m), schoolbook_cyclic(&bits_of(a, m), &bits_of(b, m)));
    }

    #[test]
    fn ring_axioms((m, a, b, c) in arb_triple(32)) {
        let (a, b, c) = (ring(m, a), ring(m, b), ring(m, c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism((m, a, b) in arb_pair(64)) {
        let (a, b) = (ring(m, a), ring(m, b));
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().conjugate(), a.conjugate().mul(&b.conjugate()).unwrap());
    }

    #[test]
    fn weight_invariants((m, a, _b) in arb_pair(64), i in 0usize..200) {
        let a = ring(m, a);
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.complement().weight(), m - a.weight());
        prop_assert_eq!(a.shift(i).weight(), a.weight());
        if !a.is_zero() {
            let r = a.reciprocal().unwrap();
            prop_assert_eq!(r.weight(), a.weight());
            prop_assert!(r.degree().unwrap() <= a.degree().unwrap());
        }
    }

    #[test]
    fn shift_is_mul_by_monomial((m, a, _b) in arb_pair(64), i in 0usize..200) {
        let a = ring(m, a);
        prop_assert_eq!(a.shift(i), a.mul(&RingElement::monomial(m, i).unwrap()).unwrap());
    }

    #[test]
    fn blocked_paths_agree_with_definitions((m, xs, ys) in arb_wide(), i in 0usize..400) {
        let a = RingElement::from_exponents(m, xs.iter().copied()).unwrap();
        let b = RingElement::from_exponents(m, ys.iter().copied()).unwrap();
        // free product reduced by x^m -> 1
        let prod = a.lift().mul(&b.lift());
        let reduced = RingElement::from_exponents(m, prod.exponents()).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap(), reduced);
        let shifted = RingElement::from_exponents(m, a.exponents().map(|e| e + i)).unwrap();
        prop_assert_eq!(a.shift(i), shifted);
        let conj = RingElement::from_exponents(m, a.exponents().map(|e| m - e)).unwrap();
        prop_assert_eq!(a.conjugate(), conj);
        prop_assert_eq!(a.mul(&b).unwrap().conjugate(), a.conjugate().mul(&b.conjugate()).unwrap());
    }

    #[test]
    fn gcd_is_greatest_common_divisor(
        xs in prop::collection::vec(0usize..14, 1..8),
        ys in prop::collection::vec(0usize..14, 1..8),
        zs in prop::collection::vec(0usize..5, 1..4),
    ) {
        let common = FreePoly::from_exponents(zs);
        prop_assume!(!common.is_zero());
        let a = FreePoly::from_exponents(xs).mul(&common);
        let b = FreePoly::from_exponents(ys).mul(&common);
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a) || a.is_zero());
        prop_assert!(g.divides(&b) || b.is_zero());
        // a planted common factor divides the gcd
        prop_assert!(common.divides(&g));
        // every divisor of both, found by trial over all polys of degree <= 6, divides g
        for t in 1u64..1 << 7 {
            let t = FreePoly::from_words(vec![t]);
            if t.divides(&a) && t.divides(&b) {
                prop_assert!(t.divides(&g), "{t} divides both but not {g}");
            }
        }
    }

    #[test]
    fn div_rem_reconstructs(xs in prop::collection::vec(0usize..150, 0..10), ys in prop::collection::vec(0usize..90, 1..6)) {
        let a = FreePoly::from_exponents(xs);
        let b = FreePoly::from_exponents(ys);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.degree() < b.degree());
    }
}
