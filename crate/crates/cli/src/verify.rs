//! The `verify` sweep: formula vs oracles plus every structural identity,
//! with a machine-readable reproducer for the first failure per property.

use std::collections::BTreeMap;

use abelian_subsets::counting::{
    char_class_sum, count_numerator, count_subsets, count_table, generating_coeffs,
    nonzero_count_numerator, CountTable, Variant,
};
use abelian_subsets::group::{isomorphism_classes, parse_group, AbelianGroup, GroupElement};
use abelian_subsets::numtheory::{binomial, divisors, lcm};
use abelian_subsets::oracle::{
    brute_force_counts, char_table, dp_counts, fourier_recover, lemma1_check, lemma2_check,
    CHAR_CAP, NUMERIC_TOLERANCE,
};
use abelian_subsets::{BigInt, Complex64, Error};
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

pub struct VerifyConfig {
    pub max_order: u64,
    pub bf_cap: u64,
    pub dp_cap: u64,
    pub seed: u64,
}

pub struct PropertyReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub counterexample: Option<Value>,
}

impl PropertyReport {
    fn pass(name: &'static str, details: String) -> Self {
        PropertyReport {
            name,
            passed: true,
            details,
            counterexample: None,
        }
    }

    fn fail(name: &'static str, details: String, counterexample: Value) -> Self {
        PropertyReport {
            name,
            passed: false,
            details,
            counterexample: Some(counterexample),
        }
    }
}

/// Fixed spot-check groups beyond the exhaustive bound.
const DP_SPOT: [&str; 10] = [
    "24", "2x12", "32", "2x4x4", "36", "6x6", "48", "2x24", "64", "2x4x8",
];

/// Groups used for the seeded Fourier round trip.
const FOURIER_GROUPS: [&str; 5] = ["6", "4x2", "3x3", "2x2x2", "24"];

/// Sample points for the character product identity.
const LEMMA1_POINTS: [f64; 4] = [0.3, -0.3, 0.7, -0.7];

fn residues_csv(g: &GroupElement) -> String {
    g.residues()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// First element of the given e-class, as a CLI-ready residue list.
fn class_representative(group: &AbelianGroup, class: u64) -> String {
    group
        .elements()
        .expect("verify groups are enumerable")
        .find(|g| group.e_of(g) == class)
        .map(|g| residues_csv(&g))
        .unwrap_or_default()
}

fn table_mismatch(
    group: &AbelianGroup,
    variant: Variant,
    expected: &CountTable,
    got: &CountTable,
) -> Option<Value> {
    if expected.class_sizes != got.class_sizes {
        return Some(json!({
            "group": group.to_string(),
            "variant": variant.as_str(),
            "expected_class_sizes": format!("{:?}", expected.class_sizes),
            "got_class_sizes": format!("{:?}", got.class_sizes),
        }));
    }
    for (i, (exp_row, got_row)) in expected.rows.iter().zip(&got.rows).enumerate() {
        for (d, exp_count) in exp_row {
            if got_row.get(d) != Some(exp_count) {
                return Some(json!({
                    "group": group.to_string(),
                    "variant": variant.as_str(),
                    "i": i,
                    "e_class": d,
                    "g": class_representative(group, *d),
                    "expected": exp_count.to_string(),
                    "got": got_row.get(d).map(|c| c.to_string()),
                }));
            }
        }
    }
    None
}

struct GroupTables {
    group: AbelianGroup,
    all: CountTable,
    nonzero: CountTable,
}

impl GroupTables {
    fn variant(&self, variant: Variant) -> &CountTable {
        match variant {
            Variant::All => &self.all,
            Variant::Nonzero => &self.nonzero,
        }
    }
}

pub fn run(cfg: &VerifyConfig) -> Vec<PropertyReport> {
    let exhaustive: Vec<AbelianGroup> = (1..=cfg.max_order).flat_map(isomorphism_classes).collect();
    let spot: Vec<AbelianGroup> = DP_SPOT
        .iter()
        .map(|s| parse_group(s).expect("fixed list parses"))
        .collect();

    // Closed-form tables for every group in the sweep, built once.
    let closed: Vec<GroupTables> = exhaustive
        .iter()
        .chain(&spot)
        .map(|g| GroupTables {
            group: g.clone(),
            all: count_table(g, Variant::All).expect("sweep groups are enumerable"),
            nonzero: count_table(g, Variant::Nonzero).expect("sweep groups are enumerable"),
        })
        .collect();

    let mut reports = Vec::new();
    let (bf_tables, bf_report) = build_brute_force(&exhaustive, cfg.bf_cap);
    reports.push(bf_report);
    reports.push(check_vs_brute_force(&closed, &bf_tables));
    reports.push(check_vs_dp(&spot, &closed, cfg.dp_cap));
    reports.push(check_row_sums(&closed));
    reports.push(check_zero_split(&closed));
    reports.push(check_complement_symmetry(&closed));
    reports.push(check_divisibility(&closed));
    reports.push(check_generating_coeffs(&exhaustive));
    reports.push(check_e_class_structure());
    reports.push(check_lemma1());
    reports.push(check_lemma2());
    reports.push(check_fourier(cfg.seed));
    reports
}

fn check_generating_coeffs(groups: &[AbelianGroup]) -> PropertyReport {
    let name = "generating coefficients match counts";
    let mut checked = 0u64;
    for group in groups {
        for g in group.elements().expect("sweep groups are enumerable") {
            let coeffs = generating_coeffs(group, &g).expect("within expansion cap");
            for i in 0..=group.order() {
                let count = BigInt::from(count_subsets(group, i, &g).expect("i in range"));
                let expected = if i.is_multiple_of(2) { count } else { -count };
                if coeffs[i as usize] != expected {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} coefficients"),
                        json!({
                            "group": group.to_string(),
                            "i": i,
                            "g": residues_csv(&g),
                            "expected": expected.to_string(),
                            "got": coeffs[i as usize].to_string(),
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} coefficients"))
}

type BfKey = (String, &'static str);

fn build_brute_force(
    groups: &[AbelianGroup],
    bf_cap: u64,
) -> (BTreeMap<BfKey, CountTable>, PropertyReport) {
    let name = "brute force counts constant on e-classes";
    let mut tables = BTreeMap::new();
    let mut built = 0u64;
    for group in groups.iter().filter(|g| g.order() <= bf_cap) {
        for variant in [Variant::All, Variant::Nonzero] {
            match brute_force_counts(group, variant, bf_cap) {
                Ok(table) => {
                    tables.insert((group.to_string(), variant.as_str()), table);
                    built += 1;
                }
                Err(Error::EClassConflict(msg)) => {
                    return (
                        tables,
                        PropertyReport::fail(
                            name,
                            format!("conflict after {built} tables"),
                            json!({ "group": group.to_string(), "variant": variant.as_str(), "conflict": msg }),
                        ),
                    );
                }
                Err(err) => unreachable!("brute force within caps cannot fail: {err}"),
            }
        }
    }
    let report = PropertyReport::pass(name, format!("{built} tables"));
    (tables, report)
}

fn check_vs_brute_force(
    closed: &[GroupTables],
    bf_tables: &BTreeMap<BfKey, CountTable>,
) -> PropertyReport {
    let name = "closed form equals brute force";
    let mut compared = 0u64;
    for tables in closed {
        for variant in [Variant::All, Variant::Nonzero] {
            let Some(brute) = bf_tables.get(&(tables.group.to_string(), variant.as_str())) else {
                continue;
            };
            if let Some(ce) = table_mismatch(&tables.group, variant, brute, tables.variant(variant))
            {
                return PropertyReport::fail(name, format!("after {compared} tables"), ce);
            }
            compared += 1;
        }
    }
    PropertyReport::pass(name, format!("{compared} tables"))
}

fn check_vs_dp(spot: &[AbelianGroup], closed: &[GroupTables], dp_cap: u64) -> PropertyReport {
    let name = "closed form equals dynamic programming";
    let mut compared = 0u64;
    for group in spot.iter().filter(|g| g.order() <= dp_cap) {
        let tables = closed
            .iter()
            .find(|t| t.group == *group)
            .expect("spot groups have closed tables");
        for variant in [Variant::All, Variant::Nonzero] {
            let dp = dp_counts(group, variant, dp_cap).expect("spot groups fit the DP cap");
            if let Some(ce) = table_mismatch(group, variant, &dp, tables.variant(variant)) {
                return PropertyReport::fail(name, format!("after {compared} tables"), ce);
            }
            compared += 1;
        }
    }
    PropertyReport::pass(name, format!("{compared} tables"))
}

fn check_row_sums(closed: &[GroupTables]) -> PropertyReport {
    let name = "row sums equal binomial coefficients";
    let mut checked = 0u64;
    for tables in closed {
        let n = tables.group.order();
        for variant in [Variant::All, Variant::Nonzero] {
            let table = tables.variant(variant);
            let pool = match variant {
                Variant::All => n,
                Variant::Nonzero => n - 1,
            };
            for i in 0..=pool {
                let expected = binomial(pool, i as i64);
                let got = table.row_sum(i);
                if got != expected {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} rows"),
                        json!({
                            "group": tables.group.to_string(),
                            "variant": variant.as_str(),
                            "i": i,
                            "expected": expected.to_string(),
                            "got": got.to_string(),
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} rows"))
}

fn check_zero_split(closed: &[GroupTables]) -> PropertyReport {
    let name = "zero split recurrence";
    let mut checked = 0u64;
    for tables in closed {
        for d in tables.all.class_sizes.keys() {
            for i in 0..=tables.group.order() {
                let expected = match i {
                    0 => tables.nonzero.get(0, *d).cloned().unwrap_or_default(),
                    _ => {
                        tables.nonzero.get(i, *d).cloned().unwrap_or_default()
                            + tables.nonzero.get(i - 1, *d).expect("row exists")
                    }
                };
                if tables.all.get(i, *d) != Some(&expected) {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} cells"),
                        json!({
                            "group": tables.group.to_string(),
                            "i": i,
                            "e_class": d,
                            "g": class_representative(&tables.group, *d),
                            "expected": expected.to_string(),
                            "got": tables.all.get(i, *d).map(|c| c.to_string()),
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} cells"))
}

fn check_complement_symmetry(closed: &[GroupTables]) -> PropertyReport {
    let name = "complement symmetry";
    let mut checked = 0u64;
    for tables in closed {
        let group = &tables.group;
        let n = group.order();
        let total = group.sum_all();
        for g in group.elements().expect("sweep groups are enumerable") {
            let mirror = group.add(&total, &group.neg(&g));
            let class = group.e_of(&g);
            let mirror_class = group.e_of(&mirror);
            for i in 0..=n {
                if tables.all.get(i, class) != tables.all.get(n - i, mirror_class) {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} checks"),
                        json!({
                            "group": group.to_string(),
                            "i": i,
                            "g": residues_csv(&g),
                            "mirror": residues_csv(&mirror),
                            "count": tables.all.get(i, class).map(|c| c.to_string()),
                            "mirror_count": tables.all.get(n - i, mirror_class).map(|c| c.to_string()),
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} checks"))
}

fn check_divisibility(closed: &[GroupTables]) -> PropertyReport {
    let name = "numerators divisible by group order";
    let mut checked = 0u64;
    for tables in closed {
        let group = &tables.group;
        let n = group.order();
        let n_big = BigInt::from(n);
        for class in divisors(group.exponent()) {
            for i in 0..=n {
                let rem = count_numerator(group, i, class) % &n_big;
                if rem != BigInt::from(0) {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} evaluations"),
                        json!({
                            "group": group.to_string(),
                            "variant": "all",
                            "i": i,
                            "e_class": class,
                            "g": class_representative(group, class),
                            "remainder": rem.to_string(),
                        }),
                    );
                }
                checked += 1;
            }
            for i in 0..n {
                let rem = nonzero_count_numerator(group, i, class) % &n_big;
                if rem != BigInt::from(0) {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} evaluations"),
                        json!({
                            "group": group.to_string(),
                            "variant": "nonzero",
                            "i": i,
                            "e_class": class,
                            "g": class_representative(group, class),
                            "remainder": rem.to_string(),
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} evaluations"))
}

fn check_e_class_structure() -> PropertyReport {
    let name = "e(g) max equals lcm characterization";
    let mut checked = 0u64;
    for order in 1..=64 {
        for group in isomorphism_classes(order) {
            let divs = divisors(group.exponent());
            for g in group.elements().expect("order <= 64") {
                let reachable: Vec<u64> = divs
                    .iter()
                    .copied()
                    .filter(|&d| group.in_dg(d, &g))
                    .collect();
                let max = reachable.iter().copied().max().expect("1G is everything");
                let by_lcm = reachable.iter().copied().fold(1, lcm);
                if max != by_lcm || group.e_of(&g) != max {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} elements"),
                        json!({
                            "group": group.to_string(),
                            "g": residues_csv(&g),
                            "max": max,
                            "lcm": by_lcm,
                            "e_of": group.e_of(&g),
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} elements"))
}

fn check_lemma1() -> PropertyReport {
    let name = "character product identity";
    let mut checked = 0u64;
    for order in 1..=24 {
        for group in isomorphism_classes(order) {
            let chars = char_table(&group, CHAR_CAP).expect("order <= 24");
            for chi in &chars {
                if !lemma1_check(&group, chi, &LEMMA1_POINTS) {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} characters"),
                        json!({
                            "group": group.to_string(),
                            "character_coeffs": chi.coeffs(),
                            "character_order": chi.order(),
                            "samples": LEMMA1_POINTS,
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} characters"))
}

fn check_lemma2() -> PropertyReport {
    let name = "torsion character sums";
    let mut checked = 0u64;
    for order in 1..=24 {
        for group in isomorphism_classes(order) {
            for m in divisors(group.exponent()) {
                for g in group.elements().expect("order <= 24") {
                    if !lemma2_check(&group, m, &g) {
                        return PropertyReport::fail(
                            name,
                            format!("after {checked} pairs"),
                            json!({
                                "group": group.to_string(),
                                "m": m,
                                "g": residues_csv(&g),
                            }),
                        );
                    }
                    checked += 1;
                }
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} pairs"))
}

fn check_fourier(seed: u64) -> PropertyReport {
    let name = "fourier inversion round trip";
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut checked = 0u64;
    for spec in FOURIER_GROUPS {
        let group = parse_group(spec).expect("fixed list parses");
        let alpha: BTreeMap<GroupElement, Complex64> = group
            .elements()
            .expect("order <= 24")
            .map(|e| (e, Complex64::new(rng.gen_range(-50..=50) as f64, 0.0)))
            .collect();
        let recovered = fourier_recover(&group, &alpha).expect("order <= 24");
        for (g, value) in &recovered {
            let deviation = (value - alpha[g]).norm();
            if deviation >= NUMERIC_TOLERANCE {
                return PropertyReport::fail(
                    name,
                    format!("after {checked} coefficients"),
                    json!({
                        "group": group.to_string(),
                        "g": residues_csv(g),
                        "expected": alpha[g].re,
                        "got_re": value.re,
                        "got_im": value.im,
                        "deviation": deviation,
                    }),
                );
            }
            checked += 1;
        }
        // Order-by-order character sums against the integer divisor sums.
        let chars = char_table(&group, CHAR_CAP).expect("order <= 24");
        for g in group.elements().expect("order <= 24") {
            for s in divisors(group.exponent()) {
                let numeric: Complex64 = chars
                    .iter()
                    .filter(|chi| chi.order() == s)
                    .map(|chi| chi.eval(&group, &g).conj())
                    .sum();
                let exact: f64 = char_class_sum(&group, s, group.e_of(&g))
                    .to_string()
                    .parse()
                    .expect("integer fits f64 at these orders");
                if (numeric - Complex64::new(exact, 0.0)).norm() >= NUMERIC_TOLERANCE {
                    return PropertyReport::fail(
                        name,
                        format!("after {checked} coefficients"),
                        json!({
                            "group": group.to_string(),
                            "g": residues_csv(&g),
                            "s": s,
                            "expected": exact,
                            "got_re": numeric.re,
                            "got_im": numeric.im,
                        }),
                    );
                }
                checked += 1;
            }
        }
    }
    PropertyReport::pass(name, format!("{checked} coefficients"))
}
