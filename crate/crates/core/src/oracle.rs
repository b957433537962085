//! Independent ground truth for the closed-form counts.
//!
//! Three unrelated routes are provided: exhaustive subset enumeration,
//! dynamic programming over the group, and numeric character sums. The
//! first two are exact and compare whole tables; the character checks run
//! in complex floating point with a small tolerance and validate the
//! structural identities the closed forms are derived from.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::counting::{CountTable, Variant};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::numtheory::{divisors, gcd, lcm};

/// Default order cap for exhaustive 2^n subset enumeration.
pub const BRUTE_FORCE_CAP: u64 = 24;
/// Default order cap for the cubic dynamic-programming oracle.
pub const DP_CAP: u64 = 512;
/// Default order cap for character enumeration and numeric checks.
pub const CHAR_CAP: u64 = 64;
/// Absolute tolerance for all floating-point character checks.
pub const NUMERIC_TOLERANCE: f64 = 1e-6;

/// A character of a finite abelian group, defined by one integer coefficient
/// per cyclic factor: the character maps `g` to
/// `exp(2*pi*i * sum_j coeffs[j] * g[j] / moduli[j])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    coeffs: Vec<u64>,
    order: u64,
}

impl Character {
    fn new(group: &AbelianGroup, coeffs: Vec<u64>) -> Self {
        let order = coeffs
            .iter()
            .zip(group.moduli())
            .map(|(&c, &m)| m / gcd(c, m))
            .fold(1, lcm);
        Character { coeffs, order }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Least `m` with `chi^m` trivial.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Evaluate the character at a group element, on the unit circle.
    pub fn eval(&self, group: &AbelianGroup, g: &GroupElement) -> Complex64 {
        let theta: f64 = self
            .coeffs
            .iter()
            .zip(g.residues())
            .zip(group.moduli())
            .map(|((&c, &r), &m)| {
                // Reduce c*r mod m in integers so the angle stays small.
                (c as u128 * r as u128 % m as u128) as f64 / m as f64
            })
            .sum();
        Complex64::from_polar(1.0, std::f64::consts::TAU * theta)
    }
}

/// All `n` characters of the group, in the lexicographic order of their
/// coefficient vectors. Errors if the order exceeds `cap`.
pub fn char_table(group: &AbelianGroup, cap: u64) -> Result<Vec<Character>> {
    if group.order() > cap {
        return Err(Error::CapExceeded {
            what: "character enumeration",
            limit: cap,
            requested: group.order(),
        });
    }
    Ok(group
        .elements()?
        .map(|e| Character::new(group, e.residues().to_vec()))
        .collect())
}

fn cayley_table(group: &AbelianGroup, elems: &[GroupElement]) -> Vec<Vec<u32>> {
    elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| group.element_rank(&group.add(a, b)) as u32)
                .collect()
        })
        .collect()
}

/// Ranks of the ground-set elements for a variant: every element, or every
/// element except zero (which has rank 0 in lexicographic order).
fn ground_set(group: &AbelianGroup, variant: Variant) -> Vec<u32> {
    let n = group.order() as u32;
    match variant {
        Variant::All => (0..n).collect(),
        Variant::Nonzero => (1..n).collect(),
    }
}

/// Fold a per-element count table into a per-e-class table, verifying that
/// every element of an e-class carries the same column. A conflict would
/// falsify the counting theory and is reported as [`Error::EClassConflict`].
fn collapse_by_eclass(
    group: &AbelianGroup,
    variant: Variant,
    per_rank: Vec<Vec<BigUint>>,
) -> Result<CountTable> {
    let classes: Vec<u64> = group.elements()?.map(|e| group.e_of(&e)).collect();
    let mut class_sizes: BTreeMap<u64, u64> = divisors(group.exponent())
        .into_iter()
        .map(|d| (d, 0))
        .collect();
    for &c in &classes {
        *class_sizes.get_mut(&c).expect("e(g) divides exp") += 1;
    }
    let mut rows = Vec::with_capacity(per_rank.len());
    for (i, counts) in per_rank.into_iter().enumerate() {
        let mut row: BTreeMap<u64, BigUint> = BTreeMap::new();
        for (rank, count) in counts.into_iter().enumerate() {
            match row.entry(classes[rank]) {
                Entry::Vacant(slot) => {
                    slot.insert(count);
                }
                Entry::Occupied(slot) => {
                    if *slot.get() != count {
                        return Err(Error::EClassConflict(format!(
                            "group {group}, size {i}, class {}: {} vs {count}",
                            classes[rank],
                            slot.get(),
                        )));
                    }
                }
            }
        }
        rows.push(row);
    }
    Ok(CountTable {
        group: group.clone(),
        variant,
        class_sizes,
        rows,
    })
}

/// Exact table by enumerating all subsets of the ground set.
///
/// Work is `O(2^n)`, so the order is capped (default
/// [`BRUTE_FORCE_CAP`]). Subsets are visited in lexicographic order over
/// element ranks; the result is order-independent.
pub fn brute_force_counts(group: &AbelianGroup, variant: Variant, cap: u64) -> Result<CountTable> {
    let n = group.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "brute-force enumeration",
            limit: cap,
            requested: n,
        });
    }
    let elems: Vec<GroupElement> = group.elements()?.collect();
    let add = cayley_table(group, &elems);
    let items = ground_set(group, variant);

    fn explore(
        items: &[u32],
        add: &[Vec<u32>],
        idx: usize,
        size: usize,
        sum: u32,
        counts: &mut [Vec<u64>],
    ) {
        if idx == items.len() {
            counts[size][sum as usize] += 1;
            return;
        }
        explore(items, add, idx + 1, size, sum, counts);
        let sum = add[sum as usize][items[idx] as usize];
        explore(items, add, idx + 1, size + 1, sum, counts);
    }

    let mut counts = vec![vec![0u64; n as usize]; items.len() + 1];
    explore(&items, &add, 0, 0, 0, &mut counts);
    let per_rank = counts
        .into_iter()
        .map(|row| row.into_iter().map(BigUint::from).collect())
        .collect();
    collapse_by_eclass(group, variant, per_rank)
}

/// Work counters for one [`dp_counts`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpStats {
    /// Element passes; exactly the ground-set size.
    pub passes: u64,
    /// `(size, element)` source states scanned across all passes.
    pub updates: u64,
}

fn dp_over_items(
    group: &AbelianGroup,
    variant: Variant,
    items: &[u32],
) -> Result<(CountTable, DpStats)> {
    let n = group.order() as usize;
    let elems: Vec<GroupElement> = group.elements()?.collect();
    let add = cayley_table(group, &elems);
    let max_size = items.len();
    let mut dp = vec![vec![BigUint::zero(); n]; max_size + 1];
    dp[0][0] = BigUint::one();
    let mut stats = DpStats {
        passes: 0,
        updates: 0,
    };
    for (k, &item) in items.iter().enumerate() {
        stats.passes += 1;
        // Sizes descend so each pass reads states the pass has not written.
        for size in (0..=k.min(max_size - 1)).rev() {
            let (lo, hi) = dp.split_at_mut(size + 1);
            let src = &lo[size];
            let dst = &mut hi[0];
            for rank in 0..n {
                stats.updates += 1;
                if !src[rank].is_zero() {
                    dst[add[rank][item as usize] as usize] += &src[rank];
                }
            }
        }
    }
    let table = collapse_by_eclass(group, variant, dp)?;
    Ok((table, stats))
}

/// Exact table by dynamic programming: one multiply-accumulate pass per
/// ground-set element over a `(size, group element)` state matrix.
///
/// `O(n^3)` big-integer additions; capped (default [`DP_CAP`]).
pub fn dp_counts_with_stats(
    group: &AbelianGroup,
    variant: Variant,
    cap: u64,
) -> Result<(CountTable, DpStats)> {
    if group.order() > cap {
        return Err(Error::CapExceeded {
            what: "dynamic programming",
            limit: cap,
            requested: group.order(),
        });
    }
    dp_over_items(group, variant, &ground_set(group, variant))
}

/// [`dp_counts_with_stats`] without the counters.
pub fn dp_counts(group: &AbelianGroup, variant: Variant, cap: u64) -> Result<CountTable> {
    dp_counts_with_stats(group, variant, cap).map(|(table, _)| table)
}

/// Numeric check of the factorization
/// `prod_{sigma in G} (1 - chi(sigma) Y) = (1 - Y^m)^(n/m)` for a character
/// of order `m`, at the given sample points.
///
/// Both sides are evaluated in complex floating point; returns whether the
/// largest absolute difference stays below [`NUMERIC_TOLERANCE`].
pub fn lemma1_check(group: &AbelianGroup, chi: &Character, samples: &[f64]) -> bool {
    assert!(
        group.order() <= CHAR_CAP,
        "numeric character checks are limited to order {CHAR_CAP}"
    );
    let values: Vec<Complex64> = group
        .elements()
        .expect("within cap")
        .map(|sigma| chi.eval(group, &sigma))
        .collect();
    let m = chi.order();
    let n = group.order();
    samples.iter().all(|&y| {
        let lhs: Complex64 = values
            .iter()
            .map(|&v| Complex64::new(1.0, 0.0) - v * y)
            .product();
        let rhs = (1.0 - y.powi(m as i32)).powi((n / m) as i32);
        (lhs - Complex64::new(rhs, 0.0)).norm() < NUMERIC_TOLERANCE
    })
}

/// Numeric check that `sum_{chi: chi^m = 1} chi(g)` equals `#G[m]` when `g`
/// lies in `mG` and `0` otherwise. Panics unless `m` divides the exponent.
pub fn lemma2_check(group: &AbelianGroup, m: u64, g: &GroupElement) -> bool {
    assert!(
        m >= 1 && group.exponent().is_multiple_of(m),
        "m = {m} must divide the exponent {}",
        group.exponent()
    );
    let chars = char_table(group, CHAR_CAP).expect("numeric checks are capped");
    let sum: Complex64 = chars
        .iter()
        .filter(|chi| m.is_multiple_of(chi.order()))
        .map(|chi| chi.eval(group, g))
        .sum();
    let expected = if group.in_dg(m, g) {
        group.torsion_size(m) as f64
    } else {
        0.0
    };
    (sum - Complex64::new(expected, 0.0)).norm() < NUMERIC_TOLERANCE
}

/// `sum over characters of order exactly s of conj(chi)(g)`, numerically.
///
/// The integer this approximates is `counting::char_class_sum(group, s,
/// e(g))`; the tests hold the two routes together.
pub fn char_sum_by_order(
    group: &AbelianGroup,
    chars: &[Character],
    s: u64,
    g: &GroupElement,
) -> Complex64 {
    chars
        .iter()
        .filter(|chi| chi.order() == s)
        .map(|chi| chi.eval(group, g).conj())
        .sum()
}

/// Recover group-ring coefficients from their character transform:
/// `alpha_g = (1/n) sum_chi conj(chi)(g) chi(alpha)`.
///
/// Missing keys in `alpha` are treated as zero. A faithful inversion (up to
/// numeric tolerance) is what the test suite asserts.
pub fn fourier_recover(
    group: &AbelianGroup,
    alpha: &BTreeMap<GroupElement, Complex64>,
) -> Result<BTreeMap<GroupElement, Complex64>> {
    let n = group.order();
    if n > CHAR_CAP {
        return Err(Error::CapExceeded {
            what: "character enumeration",
            limit: CHAR_CAP,
            requested: n,
        });
    }
    let elems: Vec<GroupElement> = group.elements()?.collect();
    let chars = char_table(group, CHAR_CAP)?;
    let transforms: Vec<Complex64> = chars
        .iter()
        .map(|chi| {
            elems
                .iter()
                .map(|g| alpha.get(g).copied().unwrap_or_default() * chi.eval(group, g))
                .sum()
        })
        .collect();
    let mut recovered = BTreeMap::new();
    for g in &elems {
        let value: Complex64 = chars
            .iter()
            .zip(&transforms)
            .map(|(chi, t)| chi.eval(group, g).conj() * t)
            .sum();
        recovered.insert(g.clone(), value / n as f64);
    }
    Ok(recovered)
}
