//! End-to-end gate for the counting engine.
//!
//! Each test prints one pass line; together they pin the engine against its
//! independent oracles at desk scale: exhaustive enumeration, dynamic
//! programming, structural identities (row sums, recurrences, symmetry,
//! exact divisibility) and the numeric character checks.

use std::time::Instant;

use abelian_subsets::counting::{
    count_numerator, count_subsets, count_subsets_nonzero, count_table, nonzero_count_numerator,
    Variant,
};
use abelian_subsets::group::{isomorphism_classes, parse_group, AbelianGroup};
use abelian_subsets::numtheory::{binomial, divisors, lcm};
use abelian_subsets::oracle::{
    brute_force_counts, char_table, dp_counts, lemma1_check, lemma2_check, BRUTE_FORCE_CAP,
    CHAR_CAP, DP_CAP,
};
use abelian_subsets::{BigInt, BigUint};
use num_traits::Zero;

fn groups_up_to(max_order: u64) -> Vec<AbelianGroup> {
    (1..=max_order).flat_map(isomorphism_classes).collect()
}

fn grp(spec: &str) -> AbelianGroup {
    parse_group(spec).unwrap()
}

/// Sample of groups of order <= 200 used by the row-sum and recurrence gates.
const SAMPLE_200: [&str; 12] = [
    "6", "13", "2x8", "3x9", "2x4x4", "6x6", "2x4x8", "97", "10x10", "128", "12x12", "2x100",
];

/// Non-cyclic and cyclic spot-check groups for the DP gate.
const DP_SPOT: [&str; 10] = [
    "24", "2x12", "32", "2x4x4", "36", "6x6", "48", "2x24", "64", "2x4x8",
];

#[test]
fn exhaustive_oracle_equivalence_up_to_order_16() {
    let start = Instant::now();
    for group in groups_up_to(16) {
        let n = group.order();
        for variant in [Variant::All, Variant::Nonzero] {
            let brute = brute_force_counts(&group, variant, BRUTE_FORCE_CAP).unwrap();
            let max_size = match variant {
                Variant::All => n,
                Variant::Nonzero => n - 1,
            };
            for g in group.elements().unwrap() {
                let class = group.e_of(&g);
                for i in 0..=max_size {
                    let formula = match variant {
                        Variant::All => count_subsets(&group, i, &g).unwrap(),
                        Variant::Nonzero => count_subsets_nonzero(&group, i, &g).unwrap(),
                    };
                    assert_eq!(
                        Some(&formula),
                        brute.get(i, class),
                        "group {group}, variant {variant:?}, i = {i}, g = {g}"
                    );
                }
            }
        }
    }
    assert!(start.elapsed().as_secs() < 60, "took {:?}", start.elapsed());
    println!(
        "PASS: closed form equals brute force on every group of order <= 16 ({:?})",
        start.elapsed()
    );
}

#[test]
fn tables_match_dynamic_programming_on_spot_groups() {
    let start = Instant::now();
    for spec in DP_SPOT {
        let group = grp(spec);
        for variant in [Variant::All, Variant::Nonzero] {
            let closed = count_table(&group, variant).unwrap();
            let dp = dp_counts(&group, variant, DP_CAP).unwrap();
            assert_eq!(closed.class_sizes, dp.class_sizes, "group {group}");
            assert_eq!(closed.rows, dp.rows, "group {group}, variant {variant:?}");
        }
    }
    assert!(
        start.elapsed().as_secs() < 300,
        "took {:?}",
        start.elapsed()
    );
    println!(
        "PASS: closed-form tables equal the DP oracle on orders 24..64 ({:?})",
        start.elapsed()
    );
}

#[test]
fn row_sums_reproduce_binomials_up_to_order_200() {
    for spec in SAMPLE_200 {
        let group = grp(spec);
        let n = group.order();
        let all = count_table(&group, Variant::All).unwrap();
        let nonzero = count_table(&group, Variant::Nonzero).unwrap();
        for i in 0..=n {
            assert_eq!(
                all.row_sum(i),
                binomial(n, i as i64),
                "group {group}, i = {i}"
            );
        }
        for i in 0..n {
            assert_eq!(
                nonzero.row_sum(i),
                binomial(n - 1, i as i64),
                "group {group}, i = {i}"
            );
        }
    }
    println!(
        "PASS: row sums equal C(n, i) and C(n-1, i) on {} groups of order <= 200",
        SAMPLE_200.len()
    );
}

#[test]
fn zero_split_recurrence_holds_on_the_sample() {
    for spec in SAMPLE_200 {
        let group = grp(spec);
        let all = count_table(&group, Variant::All).unwrap();
        let nonzero = count_table(&group, Variant::Nonzero).unwrap();
        for d in all.class_sizes.keys() {
            assert_eq!(all.get(0, *d), nonzero.get(0, *d), "group {group}, d = {d}");
            for i in 1..=group.order() {
                let expect = nonzero.get(i, *d).cloned().unwrap_or_default()
                    + nonzero.get(i - 1, *d).unwrap();
                assert_eq!(
                    all.get(i, *d),
                    Some(&expect),
                    "group {group}, i = {i}, d = {d}"
                );
            }
        }
    }
    println!(
        "PASS: N(i, g) = N*(i, g) + N*(i-1, g) on {} groups of order <= 200",
        SAMPLE_200.len()
    );
}

#[test]
fn every_numerator_is_divisible_by_the_order() {
    // Re-runs every (i, e-class) evaluation behind the other gates and
    // checks the pre-division accumulator directly.
    let mut evaluations = 0u64;
    let mut groups: Vec<AbelianGroup> = groups_up_to(16);
    groups.extend(SAMPLE_200.iter().map(|s| grp(s)));
    groups.extend(DP_SPOT.iter().map(|s| grp(s)));
    for group in &groups {
        let n = group.order();
        let n_big = BigInt::from(n);
        for class in divisors(group.exponent()) {
            for i in 0..=n {
                assert!(
                    (count_numerator(group, i, class) % &n_big).is_zero(),
                    "group {group}, i = {i}, class = {class}"
                );
                evaluations += 1;
            }
            for i in 0..n {
                assert!(
                    (nonzero_count_numerator(group, i, class) % &n_big).is_zero(),
                    "group {group}, i = {i}, class = {class}"
                );
                evaluations += 1;
            }
        }
    }
    println!("PASS: numerator divisible by n in {evaluations} of {evaluations} evaluations");
}

#[test]
fn character_lemmas_hold_up_to_order_24() {
    let samples = [0.3, -0.3, 0.7, -0.7];
    let mut characters = 0u64;
    let mut pairs = 0u64;
    for group in groups_up_to(24) {
        let chars = char_table(&group, CHAR_CAP).unwrap();
        for chi in &chars {
            assert!(
                lemma1_check(&group, chi, &samples),
                "group {group}, chi of order {}",
                chi.order()
            );
            characters += 1;
        }
        for m in divisors(group.exponent()) {
            for g in group.elements().unwrap() {
                assert!(
                    lemma2_check(&group, m, &g),
                    "group {group}, m = {m}, g = {g}"
                );
                pairs += 1;
            }
        }
    }
    println!(
        "PASS: character product identity for {characters} characters and \
         torsion character sums for {pairs} (m, g) pairs"
    );
}

#[test]
fn e_classes_are_well_defined() {
    // Max and lcm characterizations of e(g) agree everywhere up to order 64.
    for group in groups_up_to(64) {
        let divs = divisors(group.exponent());
        for g in group.elements().unwrap() {
            let reachable: Vec<u64> = divs
                .iter()
                .copied()
                .filter(|&d| group.in_dg(d, &g))
                .collect();
            let max = reachable.iter().copied().max().unwrap();
            let by_lcm = reachable.iter().copied().fold(1, lcm);
            assert_eq!(max, by_lcm, "group {group}, g = {g}");
            assert_eq!(group.e_of(&g), max, "group {group}, g = {g}");
        }
    }
    // Brute-force tables collapse without conflict: counts are constant on
    // e-classes (the collapse errors out otherwise).
    for group in groups_up_to(24) {
        for variant in [Variant::All, Variant::Nonzero] {
            brute_force_counts(&group, variant, BRUTE_FORCE_CAP).unwrap();
        }
    }
    println!("PASS: e(g) max/lcm agreement to order 64; brute-force tables constant on e-classes to order 24");
}

#[test]
fn single_query_on_order_5040_is_fast() {
    let group = grp("5040");
    let zero = group.zero();
    let start = Instant::now();
    let at_zero = count_subsets(&group, 2520, &zero).unwrap();
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "query took {elapsed:?}");

    // Complement symmetry at full scale: the mirror query must agree.
    let mirror = group.element(&[2520]).unwrap();
    let at_mirror = count_subsets(&group, 2520, &mirror).unwrap();
    assert_eq!(at_zero, at_mirror);
    assert!(at_zero > BigUint::zero());

    // And the zero-split recurrence ties both closed forms together here.
    let split = count_subsets_nonzero(&group, 2520, &zero).unwrap()
        + count_subsets_nonzero(&group, 2519, &zero).unwrap();
    assert_eq!(at_zero, split);
    println!(
        "PASS: N(2520, 0) on Z/5040 in {elapsed:?} ({} digits)",
        at_zero.to_string().len()
    );
}
