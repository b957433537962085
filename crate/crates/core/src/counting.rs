//! Exact evaluation of the closed-form subset counts.
//!
//! `count_subsets` returns the number of i-element subsets of a finite
//! abelian group summing to a target element; `count_subsets_nonzero`
//! restricts subsets to the nonzero elements. Both counts depend on the
//! target only through its divisibility depth `e(g)`, which is what makes
//! compact per-class tables possible.
//!
//! Every evaluation accumulates a signed arbitrary-precision sum and divides
//! by the group order exactly once, at the end. The division must be exact;
//! a nonzero remainder means the implementation is wrong and panics.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};
use crate::numtheory::{binomial, binomial_row, divisors, gcd, moebius};

/// Largest group order for which `generating_coeffs` will expand the full
/// polynomial.
pub const EXPANSION_CAP: u64 = 1 << 16;

/// Which family of subsets is being counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Subsets of the whole group.
    All,
    /// Subsets of the group minus its zero element.
    Nonzero,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::All => "all",
            Variant::Nonzero => "nonzero",
        }
    }
}

/// The signed divisor sum `sum_{d | gcd(s, e)} mu(s/d) * #G[d]`.
///
/// This equals the sum of `conj(chi)(g)` over the characters of order
/// exactly `s`, for any `g` with `e(g) = e`; the character-side identity is
/// verified numerically by the oracle tests. Panics unless `s` divides the
/// group exponent.
pub fn char_class_sum(group: &AbelianGroup, s: u64, e_class: u64) -> BigInt {
    assert!(
        s >= 1 && group.exponent().is_multiple_of(s),
        "s = {s} must divide the exponent {}",
        group.exponent()
    );
    let mut acc = BigInt::zero();
    for d in divisors(gcd(s, e_class)) {
        let mu = moebius(s / d);
        if mu != 0 {
            acc += BigInt::from(mu * group.torsion_size(d) as i64);
        }
    }
    acc
}

/// Pre-division accumulator for [`count_for_class`]: the signed sum over
/// `s | gcd(exp(G), i)` of `(-1)^(i + i/s) C(n/s, i/s) char_class_sum(s, e)`.
///
/// Always exactly divisible by the group order; exposed so the divisibility
/// invariant can be checked independently of the division.
pub fn count_numerator(group: &AbelianGroup, i: u64, e_class: u64) -> BigInt {
    let n = group.order();
    let mut acc = BigInt::zero();
    for s in divisors(gcd(group.exponent(), i)) {
        let ratio = i / s;
        let term = BigInt::from(binomial(n / s, ratio as i64)) * char_class_sum(group, s, e_class);
        if (i + ratio).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Pre-division accumulator for [`nonzero_count_for_class`]: the signed sum
/// over all `s | exp(G)` of
/// `(-1)^(i + floor(i/s)) C(n/s - 1, floor(i/s)) char_class_sum(s, e)`.
pub fn nonzero_count_numerator(group: &AbelianGroup, i: u64, e_class: u64) -> BigInt {
    let n = group.order();
    let mut acc = BigInt::zero();
    for s in divisors(group.exponent()) {
        let ratio = i / s;
        let binom = binomial(n / s - 1, ratio as i64);
        if binom.is_zero() {
            continue;
        }
        let term = BigInt::from(binom) * char_class_sum(group, s, e_class);
        if (i + ratio).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn divide_exact_signed(numerator: BigInt, n: u64) -> BigInt {
    let n = BigInt::from(n);
    let rem = &numerator % &n;
    assert!(
        rem.is_zero(),
        "formula numerator {numerator} is not divisible by the group order {n}; \
         this is a bug in the counting engine"
    );
    numerator / n
}

fn divide_exact(numerator: BigInt, n: u64) -> BigUint {
    divide_exact_signed(numerator, n)
        .to_biguint()
        .expect("formula produced a negative count; this is a bug in the counting engine")
}

fn check_class(group: &AbelianGroup, e_class: u64) {
    assert!(
        e_class >= 1 && group.exponent().is_multiple_of(e_class),
        "e-class {e_class} must divide the exponent {}",
        group.exponent()
    );
}

/// Number of `i`-element subsets summing to any element of the given
/// e-class. Errors if `i` exceeds the group order.
pub fn count_for_class(group: &AbelianGroup, i: u64, e_class: u64) -> Result<BigUint> {
    check_class(group, e_class);
    if i > group.order() {
        return Err(Error::Range(format!(
            "subset size {i} exceeds the group order {}",
            group.order()
        )));
    }
    Ok(divide_exact(
        count_numerator(group, i, e_class),
        group.order(),
    ))
}

/// Number of `i`-element subsets of `G \ {0}` summing to any element of the
/// given e-class. Errors if `i` exceeds `order - 1`.
pub fn nonzero_count_for_class(group: &AbelianGroup, i: u64, e_class: u64) -> Result<BigUint> {
    check_class(group, e_class);
    if i > group.order() - 1 {
        return Err(Error::Range(format!(
            "subset size {i} exceeds the nonzero-element count {}",
            group.order() - 1
        )));
    }
    Ok(divide_exact(
        nonzero_count_numerator(group, i, e_class),
        group.order(),
    ))
}

/// `N(i, g)`: the number of `i`-element subsets of the group whose elements
/// sum to `g`.
pub fn count_subsets(group: &AbelianGroup, i: u64, g: &GroupElement) -> Result<BigUint> {
    count_for_class(group, i, group.e_of(g))
}

/// `N*(i, g)`: the number of `i`-element subsets of the nonzero elements
/// whose sum is `g`.
pub fn count_subsets_nonzero(group: &AbelianGroup, i: u64, g: &GroupElement) -> Result<BigUint> {
    nonzero_count_for_class(group, i, group.e_of(g))
}

/// Coefficients (in `Y`) of the exact expansion of
/// `(1/n) sum_{s | exp(G)} char_class_sum(s, e(g)) (1 - Y^s)^(n/s)`,
/// a vector of length `n + 1` whose `i`-th entry equals `(-1)^i N(i, g)`.
pub fn generating_coeffs(group: &AbelianGroup, g: &GroupElement) -> Result<Vec<BigInt>> {
    let n = group.order();
    if n > EXPANSION_CAP {
        return Err(Error::CapExceeded {
            what: "polynomial expansion",
            limit: EXPANSION_CAP,
            requested: n,
        });
    }
    let eg = group.e_of(g);
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    for s in divisors(group.exponent()) {
        let css = char_class_sum(group, s, eg);
        if css.is_zero() {
            continue;
        }
        for (k, binom) in binomial_row(n / s).into_iter().enumerate() {
            let term = &css * BigInt::from(binom);
            let idx = s as usize * k;
            if k % 2 == 0 {
                acc[idx] += term;
            } else {
                acc[idx] -= term;
            }
        }
    }
    Ok(acc
        .into_iter()
        .map(|coeff| divide_exact_signed(coeff, n))
        .collect())
}

/// Size of every e-class, keyed by the class divisor, computed by one pass
/// over the group. Errors beyond the enumeration cap.
pub fn eclass_sizes(group: &AbelianGroup) -> Result<BTreeMap<u64, u64>> {
    let mut sizes: BTreeMap<u64, u64> = divisors(group.exponent())
        .into_iter()
        .map(|d| (d, 0))
        .collect();
    for elem in group.elements()? {
        *sizes.get_mut(&group.e_of(&elem)).expect("e(g) divides exp") += 1;
    }
    Ok(sizes)
}

/// Full count table for one group and variant, keyed by e-class divisor.
///
/// Storage is `(max subset size + 1) x #divisors(exp(G))` instead of
/// `n^2`, because counts are constant on e-classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub group: AbelianGroup,
    pub variant: Variant,
    /// Number of elements per e-class divisor; values sum to the order.
    pub class_sizes: BTreeMap<u64, u64>,
    /// `rows[i][d]` is the count for subset size `i` and e-class `d`.
    pub rows: Vec<BTreeMap<u64, BigUint>>,
}

impl CountTable {
    /// Largest subset size in the table: the order for [`Variant::All`],
    /// one less for [`Variant::Nonzero`].
    pub fn max_size(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    pub fn get(&self, i: u64, e_class: u64) -> Option<&BigUint> {
        self.rows.get(i as usize).and_then(|row| row.get(&e_class))
    }

    /// `sum_g N(i, g)` over all group elements, via the class sizes.
    pub fn row_sum(&self, i: u64) -> BigUint {
        let row = &self.rows[i as usize];
        self.class_sizes
            .iter()
            .map(|(d, &size)| BigUint::from(size) * &row[d])
            .sum()
    }
}

/// Evaluate the closed form for every `(subset size, e-class)` cell.
///
/// Character-class sums and binomial rows are computed once per divisor and
/// shared across all cells. Errors beyond the enumeration cap (the class
/// sizes need one pass over the group).
pub fn count_table(group: &AbelianGroup, variant: Variant) -> Result<CountTable> {
    let n = group.order();
    let class_sizes = eclass_sizes(group)?;
    let divs = divisors(group.exponent());
    let classes: Vec<u64> = class_sizes.keys().copied().collect();
    let css: Vec<Vec<BigInt>> = divs
        .iter()
        .map(|&s| {
            classes
                .iter()
                .map(|&d| char_class_sum(group, s, d))
                .collect()
        })
        .collect();
    let binom_rows: Vec<Vec<BigUint>> = divs
        .iter()
        .map(|&s| match variant {
            Variant::All => binomial_row(n / s),
            Variant::Nonzero => binomial_row(n / s - 1),
        })
        .collect();

    let max_size = match variant {
        Variant::All => n,
        Variant::Nonzero => n - 1,
    };
    let mut rows = Vec::with_capacity(max_size as usize + 1);
    for i in 0..=max_size {
        let mut row = BTreeMap::new();
        for (ci, &class) in classes.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (si, &s) in divs.iter().enumerate() {
                if variant == Variant::All && i % s != 0 {
                    continue;
                }
                let ratio = (i / s) as usize;
                if ratio >= binom_rows[si].len() {
                    continue;
                }
                let term = BigInt::from(binom_rows[si][ratio].clone()) * &css[si][ci];
                if (i + i / s) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            row.insert(class, divide_exact(acc, n));
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
