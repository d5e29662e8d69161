mod common;

use common::{bound, dc_rows, min_distance, ring, weight_distribution};
use dccodes::dc::{no_extremal_by_count, predicate_for, trisection};
use dccodes::{DcDescriptor, PredicateUsed};

fn self_dual_polys(m: usize) -> Vec<u64> {
    (0..1u64 << m)
        .filter(|&f| DcDescriptor::new(ring(m, f)).is_self_dual())
        .collect()
}

/// Self-duality straight from the definition: `G G^T = 0` on `[I | A]`.
fn self_dual_by_definition(f: u64, m: usize) -> bool {
    let rows = dc_rows(f, m);
    common::gram(&rows)
        .iter()
        .all(|r| r.iter().all(|&v| v == 0))
}

#[test]
fn self_duality_matches_definition() {
    for m in 1..=12 {
        for f in 0..1u64 << m {
            assert_eq!(
                DcDescriptor::new(ring(m, f)).is_self_dual(),
                self_dual_by_definition(f, m),
                "m={m} f={f:b}"
            );
        }
    }
}

#[test]
fn self_duality_is_shift_and_reciprocal_invariant() {
    for m in 1..=12 {
        for f in self_dual_polys(m) {
            let f = ring(m, f);
            for i in 0..m {
                assert!(DcDescriptor::new(f.shift(i)).is_self_dual());
            }
            assert!(DcDescriptor::new(f.reciprocal().unwrap()).is_self_dual());
        }
    }
}

#[test]
fn orbit_members_give_identical_codes() {
    for m in 1..=10 {
        for f in self_dual_polys(m) {
            let desc = DcDescriptor::new(ring(m, f));
            let metrics = desc.build().metrics().unwrap();
            let class = desc.equivalence_class().unwrap();
            assert!(class.contains(desc.poly()));
            for g in class {
                let other = DcDescriptor::new(g).build().metrics().unwrap();
                assert_eq!(other, metrics, "m={m} f={f:b}");
            }
        }
    }
}

#[test]
fn canonical_form_is_least_orbit_member() {
    for m in 1..=10 {
        for f in 1..1u64 << m {
            let desc = DcDescriptor::new(ring(m, f));
            let canon = desc.canonical_form().unwrap();
            let least = desc
                .equivalence_class()
                .unwrap()
                .into_iter()
                .next()
                .unwrap();
            assert_eq!(canon, least);
            // the orbit, recomputed by hand, contains it and nothing smaller
            let bits = common::bits_of(f, m);
            let star: Vec<u8> = {
                let deg = (0..m).rev().find(|&i| bits[i] == 1).unwrap();
                (0..m)
                    .map(|i| if i <= deg { bits[deg - i] } else { 0 })
                    .collect()
            };
            let pack = |v: &[u8]| v.iter().rev().fold(0u64, |a, &b| a << 1 | b as u64);
            let rot =
                |v: &[u8], s: usize| -> Vec<u8> { (0..m).map(|j| v[(j + m - s) % m]).collect() };
            let min = (0..m)
                .flat_map(|s| [pack(&rot(&bits, s)), pack(&rot(&star, s))])
                .min()
                .unwrap();
            assert_eq!(canon.as_u64().unwrap(), min);
        }
    }
}

#[test]
fn self_dual_generators_have_odd_weight() {
    for m in 1..=14 {
        for f in self_dual_polys(m) {
            assert_eq!(f.count_ones() % 2, 1, "m={m} f={f:b}");
        }
    }
}

#[test]
fn predicates_agree_with_oracle() {
    let mut covered = [0usize; 3];
    for m in 1..=12 {
        for f in self_dual_polys(m) {
            let desc = DcDescriptor::new(ring(m, f));
            let rows = dc_rows(f, m);
            let oracle = min_distance(&rows) == bound(2 * m);
            let (route, verdict) = desc.extremal_by_theorem().unwrap();
            assert_eq!(route, predicate_for(m, f.count_ones() as usize));
            match route {
                PredicateUsed::ThmUpto20 => {
                    assert_eq!(desc.extremal_upto20().unwrap(), oracle, "m={m} f={f:b}");
                    covered[0] += 1;
                }
                PredicateUsed::Thm22 => {
                    assert_eq!(desc.extremal_22().unwrap(), oracle, "m={m} f={f:b}");
                    covered[1] += 1;
                }
                PredicateUsed::Thm24_44 => {
                    assert_eq!(desc.extremal_24_44().unwrap(), oracle, "m={m} f={f:b}");
                    covered[2] += 1;
                }
                PredicateUsed::OracleOnly => assert_eq!(verdict, None),
            }
            if route != PredicateUsed::OracleOnly {
                assert_eq!(verdict, Some(oracle));
            }
            assert_eq!(desc.is_extremal_oracle().unwrap(), oracle);
        }
    }
    assert!(covered.iter().all(|&c| c > 0), "{covered:?}");
}

#[test]
fn predicates_refuse_out_of_scope_inputs() {
    // not self-dual
    assert!(DcDescriptor::new(ring(4, 0b11)).extremal_upto20().is_err());
    // length beyond 20
    assert!(DcDescriptor::new(ring(11, 1)).extremal_upto20().is_err());
    // wrong weight for the length-22 rule
    assert!(DcDescriptor::new(ring(11, 1)).extremal_22().is_err());
    assert!(DcDescriptor::new(ring(12, 1)).extremal_24_44().is_err());
}

#[test]
fn no_extremal_by_count_means_monomials_only() {
    for m in 2..=14 {
        if no_extremal_by_count(m).unwrap() {
            for f in self_dual_polys(m) {
                assert_eq!(f.count_ones(), 1, "m={m}");
                assert!(!DcDescriptor::new(ring(m, f)).is_extremal_oracle().unwrap());
            }
        }
    }
    assert!(no_extremal_by_count(5).unwrap());
    assert!(no_extremal_by_count(7).unwrap());
    assert!(!no_extremal_by_count(8).unwrap());
    assert!(no_extremal_by_count(1).is_err());
}

#[test]
fn trisection_codes_are_extremal() {
    for m in [4, 8] {
        let desc = trisection(m).unwrap();
        let f = desc.poly().as_u64().unwrap();
        assert!(self_dual_by_definition(f, m));
        assert_eq!(min_distance(&dc_rows(f, m)), bound(2 * m));
        assert!(desc.extremal_upto20().unwrap());
    }
    assert!(trisection(6).is_err());
    assert!(trisection(12).is_err());
}

#[test]
fn built_code_matches_reference_distribution() {
    for m in 1..=8 {
        for f in 0..1u64 << m {
            let d = DcDescriptor::new(ring(m, f))
                .build()
                .weight_distribution()
                .unwrap();
            assert_eq!(d, weight_distribution(&dc_rows(f, m)));
        }
    }
}
