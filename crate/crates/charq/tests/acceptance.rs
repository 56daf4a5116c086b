//! Acceptance suite: one test per criterion, each printing a PASS line
//! once its checks hold (run with `--nocapture` to see them). Every check
//! is exact — zero tolerance everywhere.

use std::collections::BTreeSet;

use charq::arrangement::Arrangement;
use charq::bijection::{decode, encode, enumerate_placements, OddPlacement, Placement};
use charq::counting::{count_complement, count_restricted, in_complement};
use charq::period::{collapse_report, default_window, lcm_period, DEFAULT_SUBSET_BIT_CAP};
use charq::polyalg::{
    build_quasipoly, mixed_power_sum, mixed_power_sum_closed, SampleWindow, SummationOrder,
};
use charq::shi::{
    base_closed_form, build_shi_b, is_deletion_polynomial, is_pair_deletion_polynomial,
    restriction_closed_form, ShiHyperplane,
};
use num_bigint::BigInt;

fn q_range(m: usize) -> impl Iterator<Item = u64> {
    (2 * m as u64 + 2)..=(2 * m as u64 + 12)
}

fn count(arr: &Arrangement, q: u64) -> BigInt {
    BigInt::from(count_complement(arr, q).value)
}

#[test]
fn criterion_01_base_count() {
    for m in [2usize, 3, 4] {
        let family = build_shi_b(m).unwrap();
        let form = base_closed_form(m).unwrap();
        for q in q_range(m) {
            assert_eq!(count(&family, q), form.eval(q), "m = {m}, q = {q}");
        }
    }
    println!("criterion 1: PASS — base count equals (q-2m)^m for m in 2..=4");
}

#[test]
fn criterion_02_restriction_formulas() {
    let mut checks = 0usize;
    for m in [2usize, 3, 4] {
        let family = build_shi_b(m).unwrap();
        for h in ShiHyperplane::all(m) {
            let pivot = h.index_in(&family).unwrap();
            let form = restriction_closed_form(m, &h).unwrap();
            for q in q_range(m) {
                let counted = BigInt::from(count_restricted(&family, pivot, q).unwrap().value);
                assert_eq!(counted, form.eval(q), "{h} at m = {m}, q = {q}");
                checks += 1;
            }
        }
    }
    println!("criterion 2: PASS — all six restriction formulas exact ({checks} checks)");
}

#[test]
fn criterion_03_deletion_restriction_identity() {
    let mut checks = 0usize;
    for m in [2usize, 3, 4] {
        let family = build_shi_b(m).unwrap();
        for h in ShiHyperplane::all(m) {
            let pivot = h.index_in(&family).unwrap();
            let deleted = family.delete(pivot).unwrap();
            for q in q_range(m) {
                let full = count(&family, q);
                let del = count(&deleted, q);
                let restr = BigInt::from(count_restricted(&family, pivot, q).unwrap().value);
                assert_eq!(full, &del - &restr, "{h} at m = {m}, q = {q}");
                checks += 1;
            }
        }
    }
    println!("criterion 3: PASS — deletion-restriction identity exact ({checks} checks)");
}

#[test]
fn criterion_04_deletion_classifier() {
    let expected_sizes = [(3usize, 14usize), (4, 22)];
    for (m, expected_size) in expected_sizes {
        let family = build_shi_b(m).unwrap();
        let mut polynomial_set = BTreeSet::new();
        for h in ShiHyperplane::all(m) {
            let pivot = h.index_in(&family).unwrap();
            let deleted = family.delete(pivot).unwrap();
            let qp = build_quasipoly(
                |q| count(&deleted, q),
                2,
                SampleWindow::new(2 * m as u64 + 3, m),
            )
            .unwrap();
            let interpolated = qp.is_polynomial();
            let classified = is_deletion_polynomial(m, &h).unwrap();
            assert_eq!(interpolated, classified, "{h} at m = {m}");
            if interpolated {
                polynomial_set.insert(h.label());
            }
        }
        assert_eq!(polynomial_set.len(), expected_size, "m = {m}: {polynomial_set:?}");
    }
    println!("criterion 4: PASS — polynomial deletions are exactly the six listed families");
}

#[test]
fn criterion_05_pair_deletion_classifier() {
    let expected_sizes = [(3usize, 5usize), (4, 8)];
    for (m, expected_size) in expected_sizes {
        let family = build_shi_b(m).unwrap();
        let mut polynomial_pairs = 0usize;
        for (h, partner) in ShiHyperplane::parallel_pairs(m) {
            let first = h.index_in(&family).unwrap();
            let second = partner.index_in(&family).unwrap();
            let (lo, hi) = (first.min(second), first.max(second));
            let double_deleted = family.delete(hi).unwrap().delete(lo).unwrap();
            let qp = build_quasipoly(
                |q| count(&double_deleted, q),
                2,
                SampleWindow::new(2 * m as u64 + 3, m),
            )
            .unwrap();
            let interpolated = qp.is_polynomial();
            let classified = is_pair_deletion_polynomial(m, &h, &partner).unwrap();
            assert_eq!(interpolated, classified, "pair {{{h}, {partner}}} at m = {m}");
            polynomial_pairs += usize::from(interpolated);
        }
        assert_eq!(polynomial_pairs, expected_size, "m = {m}");
    }
    println!(
        "criterion 5: PASS — polynomial pair deletions are exactly x_i offsets and i+j=m+1 pairs"
    );
}

#[test]
fn criterion_06_period_collapse_of_the_family() {
    for m in [2usize, 3] {
        let family = build_shi_b(m).unwrap();
        let rho = lcm_period(&family, DEFAULT_SUBSET_BIT_CAP).unwrap();
        assert_eq!(rho, 2, "lcm period at m = {m}");
        let report = collapse_report(&family, default_window(m), DEFAULT_SUBSET_BIT_CAP).unwrap();
        assert_eq!(report.lcm_period, 2, "m = {m}");
        assert_eq!(report.min_period, 1, "m = {m}");
        assert!(report.collapses, "m = {m}");
    }
    println!("criterion 6: PASS — lcm period 2, minimum period 1, collapse confirmed");
}

#[test]
fn criterion_07_central_case_never_collapses() {
    for m in [2usize, 3] {
        let central = build_shi_b(m).unwrap().centralized();
        let report = collapse_report(&central, default_window(m), DEFAULT_SUBSET_BIT_CAP).unwrap();
        assert_eq!(
            report.min_period, report.lcm_period,
            "centralized family at m = {m} must not collapse"
        );
        assert!(!report.collapses, "m = {m}");
    }
    println!("criterion 7: PASS — centralized families have min period equal to lcm period");
}

#[test]
fn criterion_08_box_bijection() {
    // The three worked placements decode verbatim.
    let odd = Placement::Odd(OddPlacement {
        m: 5,
        q: 15,
        box_of: [(1, 4), (2, 1), (3, 4), (4, 5), (5, 3)].into(),
    });
    assert_eq!(decode(&odd).unwrap(), vec![10, 3, 11, 8, 14]);
    assert_eq!(encode(&[2, 9, 10, 13, 11], 16).unwrap().boxes_per_side(), 3);
    assert_eq!(decode(&encode(&[2, 9, 10, 13, 11], 16).unwrap()).unwrap(), vec![2, 9, 10, 13, 11]);
    assert_eq!(
        decode(&encode(&[14, 15, 8, 5, 10], 16).unwrap()).unwrap(),
        vec![14, 15, 8, 5, 10]
    );

    for m in [2usize, 3] {
        let family = build_shi_b(m).unwrap();
        for q in [11u64, 12, 13, 14] {
            let mut decoded = BTreeSet::new();
            let mut placements = 0usize;
            for p in enumerate_placements(m, q) {
                decoded.insert(decode(&p).unwrap());
                placements += 1;
            }
            assert_eq!(decoded.len(), placements, "decode is injective at m={m} q={q}");

            let mut brute = BTreeSet::new();
            let mut x = vec![0u64; m];
            'outer: loop {
                if in_complement(&family, &x, q) {
                    brute.insert(x.clone());
                }
                let mut d = 0;
                loop {
                    if d == m {
                        break 'outer;
                    }
                    x[d] += 1;
                    if x[d] < q {
                        break;
                    }
                    x[d] = 0;
                    d += 1;
                }
            }
            assert_eq!(decoded, brute, "m = {m}, q = {q}");
        }
    }
    println!("criterion 8: PASS — placements biject onto the complement; worked examples verbatim");
}

#[test]
fn criterion_09_power_sum_identity() {
    for a in 0..=10u32 {
        for b in a..=10 {
            let rhs = mixed_power_sum_closed(a, b).unwrap();
            assert_eq!(mixed_power_sum(a, b, SummationOrder::Ascending).unwrap(), rhs);
            assert_eq!(mixed_power_sum(a, b, SummationOrder::Descending).unwrap(), rhs);
        }
    }
    println!("criterion 9: PASS — two-base power sum identity exact for all 0 <= a <= b <= 10");
}

#[test]
fn criterion_10_monic_and_gcd_property() {
    let mut built = 0usize;
    for m in [2usize, 3, 4] {
        let family = build_shi_b(m).unwrap();
        let window_full = SampleWindow::new(2 * m as u64 + 3, m);
        let window_restr = SampleWindow::new(2 * m as u64 + 3, m - 1);

        let base = build_quasipoly(|q| count(&family, q), 2, window_full).unwrap();
        assert!(base.is_monic() && base.has_gcd_property(), "base at m = {m}");
        built += 1;

        for h in ShiHyperplane::all(m) {
            let pivot = h.index_in(&family).unwrap();
            let deleted = family.delete(pivot).unwrap();
            let del_qp = build_quasipoly(|q| count(&deleted, q), 2, window_full).unwrap();
            assert!(
                del_qp.is_monic() && del_qp.has_gcd_property(),
                "deletion of {h} at m = {m}"
            );
            let restr_qp = build_quasipoly(
                |q| BigInt::from(count_restricted(&family, pivot, q).unwrap().value),
                2,
                window_restr,
            )
            .unwrap();
            assert!(
                restr_qp.is_monic() && restr_qp.has_gcd_property(),
                "restriction onto {h} at m = {m}"
            );
            built += 2;
        }
    }
    println!(
        "criterion 10: PASS — all {built} interpolated quasi-polynomials are monic with the gcd property"
    );
}
