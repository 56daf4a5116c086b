//! Cross-checks between the pruned counting kernel, the naive oracle, and
//! the structural counting identities.

use charq::arrangement::{make_arrangement, Arrangement};
use charq::counting::{
    count_complement, count_complement_naive, count_restricted, count_restricted_naive,
};
use charq::shi::build_shi_b;
use charq::unimodular::{random_unimodular, transform_left, XorShift64};
use num_bigint::BigInt;

/// Small arrangements exercising q-reduction corner cases alongside the
/// Shi family.
fn corpus() -> Vec<(&'static str, Arrangement)> {
    vec![
        ("shi-b2", build_shi_b(2).unwrap()),
        ("shi-b3", build_shi_b(3).unwrap()),
        ("shi-b2-del0", build_shi_b(2).unwrap().delete(0).unwrap()),
        ("shi-b3-del7", build_shi_b(3).unwrap().delete(7).unwrap()),
        ("shi-b2-central", build_shi_b(2).unwrap().centralized()),
        (
            "scaled-rows",
            make_arrangement(
                2,
                vec![(vec![2, 0], 0), (vec![0, 3], 1), (vec![1, 1], 2), (vec![2, 4], 2)],
            )
            .unwrap(),
        ),
        ("line", make_arrangement(1, vec![(vec![2], 0), (vec![3], 1)]).unwrap()),
        (
            "mixed-support",
            make_arrangement(
                3,
                vec![(vec![1, 2, 3], 1), (vec![0, 2, 0], 0), (vec![1, 0, -1], 5)],
            )
            .unwrap(),
        ),
    ]
}

#[test]
fn pruned_kernel_matches_naive_oracle_full_mode() {
    for (name, arr) in corpus() {
        for q in 1..=20u64 {
            let fast = count_complement(&arr, q).value;
            let slow = count_complement_naive(&arr, q).unwrap().value;
            assert_eq!(fast, slow, "{name} at q = {q}");
        }
    }
}

#[test]
fn pruned_kernel_matches_naive_oracle_restricted_mode() {
    for (name, arr) in corpus() {
        for pivot in [0, arr.len() - 1] {
            for q in 1..=20u64 {
                let fast = count_restricted(&arr, pivot, q).unwrap().value;
                let slow = count_restricted_naive(&arr, pivot, q).unwrap().value;
                assert_eq!(fast, slow, "{name} pivot {pivot} at q = {q}");
            }
        }
    }
}

#[test]
fn deletion_restriction_identity() {
    for m in [2usize, 3] {
        let family = build_shi_b(m).unwrap();
        for pivot in 0..family.len() {
            let deleted = family.delete(pivot).unwrap();
            for q in 3..=(2 * m as u64 + 12) {
                let full = BigInt::from(count_complement(&family, q).value);
                let del = BigInt::from(count_complement(&deleted, q).value);
                let restr = BigInt::from(count_restricted(&family, pivot, q).unwrap().value);
                assert_eq!(
                    full,
                    &del - &restr,
                    "identity fails at m = {m}, pivot {pivot} ({}), q = {q}",
                    family.label(pivot).unwrap()
                );
            }
        }
    }
}

#[test]
fn counts_are_invariant_under_left_unimodular_action() {
    let mut rng = XorShift64::new(20240817);
    for m in [2usize, 3] {
        let family = build_shi_b(m).unwrap();
        for _ in 0..6 {
            let p = random_unimodular(m, 10, &mut rng);
            let moved = transform_left(&family, &p);
            assert_eq!(moved.len(), family.len(), "transform must keep rows distinct");
            for q in [2u64, 5, 8, 13] {
                assert_eq!(
                    count_complement(&moved, q).value,
                    count_complement(&family, q).value,
                    "m = {m}, q = {q}, P = {p:?}"
                );
            }
        }
    }
}

#[test]
fn adding_rows_is_monotone() {
    for (name, arr) in corpus() {
        for q in 1..=12u64 {
            let mut current = arr.clone();
            let mut prev = count_complement(&current, q).value;
            while current.len() > 1 {
                current = current.delete(current.len() - 1).unwrap();
                let next = count_complement(&current, q).value;
                assert!(prev <= next, "{name} lost monotonicity at q = {q}");
                prev = next;
            }
        }
    }
}
