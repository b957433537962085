//! Elementary number-theoretic primitives: divisor enumeration, the Möbius
//! function, gcd/lcm and exact binomial coefficients.
//!
//! Everything here is exact. Binomials are arbitrary precision; all other
//! quantities fit machine words because group orders are capped at
//! [`crate::group::ORDER_CAP`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Greatest common divisor with the convention `gcd(x, 0) = x`.
///
/// The convention matters: a sum indexed by the divisors of `gcd(e, i)`
/// must range over all divisors of `e` when `i = 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple with the convention `lcm(x, 0) = 0`.
///
/// Panics if the result overflows `u64`.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflow")
}

/// Prime factorization by trial division, as ascending `(prime, exponent)` pairs.
///
/// Panics if `m == 0`.
pub fn factorize(m: u64) -> Vec<(u64, u32)> {
    assert!(m >= 1, "factorize(0) is undefined");
    let mut factors = Vec::new();
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut exp = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                exp += 1;
            }
            factors.push((p, exp));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    factors
}

/// All positive divisors of `m`, strictly ascending.
///
/// Trial division up to `sqrt(m)`; `m` never exceeds a group order here, so
/// nothing fancier is needed. Panics if `m == 0`.
pub fn divisors(m: u64) -> Vec<u64> {
    assert!(m >= 1, "divisors(0) is undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The Möbius function: `0` if `m` has a squared prime factor, otherwise
/// `(-1)^k` where `k` is the number of prime factors.
///
/// Panics if `m == 0`.
pub fn moebius(m: u64) -> i64 {
    assert!(m >= 1, "moebius(0) is undefined");
    let factors = factorize(m);
    if factors.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exact binomial coefficient `C(a, b)`, with `C(a, b) = 0` for `b < 0` or `b > a`.
///
/// Multiplicative evaluation with a running exact division; every
/// intermediate value is an integer.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut result = BigUint::one();
    for k in 0..b {
        result *= a - k;
        result /= k + 1;
    }
    result
}

/// The full row `C(a, 0), C(a, 1), ..., C(a, a)`.
///
/// Used when building count tables, where one row serves every table cell
/// sharing the same divisor index.
pub fn binomial_row(a: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(a as usize + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for k in 0..a {
        c *= a - k;
        c /= k + 1;
        row.push(c.clone());
    }
    row
}
