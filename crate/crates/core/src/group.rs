//! Finite abelian groups presented as products of cyclic groups.
//!
//! A group is built from a list of cyclic orders (its `moduli`) and is
//! canonicalized into the invariant-factor chain `d1 | d2 | ... | dk`, so
//! that two presentations of isomorphic groups expose identical structure.
//! The module also computes the quantities the counting formulas consume:
//! the exponent, d-torsion sizes, membership in the subgroup `dG`, and the
//! divisibility depth `e(g)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd, lcm};

/// Largest representable group order. Orders stay machine-width; only
/// counts are arbitrary precision.
pub const ORDER_CAP: u64 = i64::MAX as u64;

/// Largest order for which full element enumeration is allowed.
pub const ENUM_CAP: u64 = 1 << 24;

/// A finite abelian group `Z/n1 x ... x Z/nk`.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
    invariant_factors: Vec<u64>,
    order: u64,
    exponent: u64,
}

/// An element of an [`AbelianGroup`], stored as one residue per modulus,
/// each reduced into `[0, moduli[j])`.
///
/// Elements are plain residue vectors; they are validated against a group
/// when constructed through [`AbelianGroup::element`], and group operations
/// panic on an arity mismatch rather than broadcasting.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, r) in self.residues.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Rewrite a cyclic decomposition as the unique invariant-factor chain
/// `d1 | d2 | ... | dk` presenting the same group.
///
/// Each modulus is split into prime-power local factors; per prime the
/// largest powers are greedily assembled into the largest invariant factor,
/// the second largest into the next, and so on. Entries below 2 are ignored.
pub fn canonicalize(moduli: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &m in moduli {
        if m < 2 {
            continue;
        }
        for (p, e) in factorize(m) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    for exps in by_prime.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    let count = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; count];
    for (p, exps) in &by_prime {
        for (j, &e) in exps.iter().enumerate() {
            let local = p.checked_pow(e).expect("invariant factor overflow");
            factors[j] = factors[j]
                .checked_mul(local)
                .expect("invariant factor overflow");
        }
    }
    factors.reverse();
    factors
}

/// Parse a group spec such as `"4x2"`, `"Z/4 x Z/2"` or `"C2 * C3"`.
///
/// Grammar (case-insensitive, whitespace-tolerant): factors are separated by
/// `x`, `*` or `×`; each factor is an integer, `Z/<integer>` or `C<integer>`.
/// Trivial factors `Z/1` are dropped.
pub fn parse_group(text: &str) -> Result<AbelianGroup> {
    let lowered = text.trim().to_ascii_lowercase();
    if lowered.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let mut moduli = Vec::new();
    for raw in lowered.split(['x', '*', '×']) {
        let token = raw.trim();
        let digits = token
            .strip_prefix("z/")
            .or_else(|| token.strip_prefix('c'))
            .unwrap_or(token)
            .trim();
        let m: u64 = digits.parse().map_err(|_| {
            Error::Parse(format!("bad cyclic order `{}` in `{}`", token, text.trim()))
        })?;
        if m == 0 {
            return Err(Error::Parse(format!(
                "cyclic order must be positive in `{}`",
                text.trim()
            )));
        }
        moduli.push(m);
    }
    AbelianGroup::new(moduli)
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group(s)
    }
}

impl AbelianGroup {
    /// Build a group from cyclic orders. Trivial factors are dropped, so the
    /// trivial group is `AbelianGroup::new(vec![])` or `new(vec![1])`.
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::Range("cyclic order must be positive".into()));
        }
        let moduli: Vec<u64> = moduli.into_iter().filter(|&m| m >= 2).collect();
        let mut order = 1u64;
        for &m in &moduli {
            order = order
                .checked_mul(m)
                .filter(|&n| n <= ORDER_CAP)
                .ok_or_else(|| Error::Range(format!("group order exceeds the cap {ORDER_CAP}")))?;
        }
        let invariant_factors = canonicalize(&moduli);
        let exponent = invariant_factors.last().copied().unwrap_or(1);
        // Cross-check: the last invariant factor must be lcm of the moduli.
        assert_eq!(
            exponent,
            moduli.iter().fold(1u64, |acc, &m| lcm(acc, m)),
            "canonicalization broke the exponent"
        );
        Ok(AbelianGroup {
            moduli,
            invariant_factors,
            order,
            exponent,
        })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    fn assert_arity(&self, g: &GroupElement) {
        assert_eq!(
            g.residues.len(),
            self.moduli.len(),
            "element arity {} does not match group arity {}",
            g.residues.len(),
            self.moduli.len()
        );
    }

    /// Build an element from signed residues, reducing each into range.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        if residues.len() != self.moduli.len() {
            return Err(Error::ArityMismatch {
                expected: self.moduli.len(),
                got: residues.len(),
            });
        }
        let residues = residues
            .iter()
            .zip(&self.moduli)
            .map(|(&r, &m)| r.rem_euclid(m as i64) as u64)
            .collect();
        Ok(GroupElement { residues })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.moduli.len()],
        }
    }

    /// Componentwise sum. Panics on arity mismatch.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.assert_arity(a);
        self.assert_arity(b);
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        GroupElement { residues }
    }

    /// Additive inverse. Panics on arity mismatch.
    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.assert_arity(a);
        let residues = a
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| if x == 0 { 0 } else { m - x })
            .collect();
        GroupElement { residues }
    }

    /// Scalar multiple `c * a` for any signed `c`. Panics on arity mismatch.
    pub fn scalar_mul(&self, c: i64, a: &GroupElement) -> GroupElement {
        self.assert_arity(a);
        let residues = a
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| {
                let c = c.rem_euclid(m as i64) as u128;
                (c * x as u128 % m as u128) as u64
            })
            .collect();
        GroupElement { residues }
    }

    /// Size of the d-torsion subgroup `{h : d*h = 0}`, which is
    /// `prod_j gcd(d, moduli[j])`. Panics if `d == 0`.
    pub fn torsion_size(&self, d: u64) -> u64 {
        assert!(d >= 1, "torsion of d = 0 is undefined");
        self.moduli.iter().map(|&m| gcd(d, m)).product()
    }

    /// Whether `g` lies in the subgroup `dG`. For a cyclic factor `Z/m`,
    /// `d * Z/m` is generated by `gcd(d, m)`, so membership is a
    /// coordinatewise divisibility test. Panics on arity mismatch or `d == 0`.
    pub fn in_dg(&self, d: u64, g: &GroupElement) -> bool {
        assert!(d >= 1, "dG with d = 0 is undefined");
        self.assert_arity(g);
        g.residues
            .iter()
            .zip(&self.moduli)
            .all(|(&r, &m)| r % gcd(d, m) == 0)
    }

    /// The largest divisor `d` of the exponent with `g` in `dG`.
    ///
    /// Computed prime by prime: for each prime power `p^v` dividing the
    /// exponent, the largest `p^j` with `g` in `p^j G` is found, and the
    /// results are multiplied. This agrees with a full divisor scan because
    /// the set `{d | exp : g in dG}` is closed under lcm.
    pub fn e_of(&self, g: &GroupElement) -> u64 {
        self.assert_arity(g);
        let mut result = 1u64;
        for (p, v) in factorize(self.exponent) {
            let mut pk = 1u64;
            for _ in 0..v {
                if !self.in_dg(pk * p, g) {
                    break;
                }
                pk *= p;
            }
            result *= pk;
        }
        result
    }

    /// The sum of all group elements, in closed form per coordinate.
    ///
    /// In coordinate `j` each residue of `Z/m` occurs `order/m` times, so the
    /// total is `m/2` when `m` is even and `order/m` is odd, else `0`.
    pub fn sum_all(&self) -> GroupElement {
        let residues = self
            .moduli
            .iter()
            .map(|&m| {
                if m % 2 == 0 && (self.order / m) % 2 == 1 {
                    m / 2
                } else {
                    0
                }
            })
            .collect();
        GroupElement { residues }
    }

    /// Deterministic stream of all elements, lexicographic by residue vector.
    ///
    /// Errors when the order exceeds [`ENUM_CAP`].
    pub fn elements(&self) -> Result<Elements<'_>> {
        if self.order > ENUM_CAP {
            return Err(Error::CapExceeded {
                what: "element enumeration",
                limit: ENUM_CAP,
                requested: self.order,
            });
        }
        Ok(Elements {
            moduli: &self.moduli,
            next: Some(vec![0; self.moduli.len()]),
        })
    }

    /// Position of `g` in the [`Self::elements`] order.
    pub fn element_rank(&self, g: &GroupElement) -> u64 {
        self.assert_arity(g);
        g.residues
            .iter()
            .zip(&self.moduli)
            .fold(0u64, |acc, (&r, &m)| acc * m + r)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "Z/1");
        }
        for (j, d) in self.invariant_factors.iter().enumerate() {
            if j > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

/// Iterator over all elements of a group, lexicographic by residue vector.
pub struct Elements<'a> {
    moduli: &'a [u64],
    next: Option<Vec<u64>>,
}

impl Iterator for Elements<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for j in (0..self.moduli.len()).rev() {
            succ[j] += 1;
            if succ[j] < self.moduli[j] {
                self.next = Some(succ);
                break;
            }
            succ[j] = 0;
        }
        Some(GroupElement { residues: current })
    }
}

/// All isomorphism classes of abelian groups of the given order, one
/// representative each, built from partitions of the prime exponents.
pub fn isomorphism_classes(order: u64) -> Vec<AbelianGroup> {
    assert!(order >= 1, "order must be positive");
    let mut lists: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factorize(order) {
        let parts = partitions(e);
        let mut extended = Vec::with_capacity(lists.len() * parts.len());
        for base in &lists {
            for part in &parts {
                let mut moduli = base.clone();
                moduli.extend(part.iter().map(|&a| p.pow(a)));
                extended.push(moduli);
            }
        }
        lists = extended;
    }
    lists
        .into_iter()
        .map(|moduli| AbelianGroup::new(moduli).expect("order already validated"))
        .collect()
}

/// Partitions of `n` as descending part lists.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::divisors;
    use proptest::prelude::*;

    fn grp(spec: &str) -> AbelianGroup {
        parse_group(spec).unwrap()
    }

    #[test]
    fn parse_accepts_the_grammar() {
        let g = grp("6");
        assert_eq!(g.moduli(), &[6]);
        assert_eq!(g.invariant_factors(), &[6]);

        let g = grp("2x3");
        assert_eq!(g.moduli(), &[2, 3]);
        assert_eq!(g.invariant_factors(), &[6]);

        let g = grp("Z/4 x Z/2");
        assert_eq!(g.moduli(), &[4, 2]);
        assert_eq!(g.invariant_factors(), &[2, 4]);

        let g = grp("c2 * C3 × 4");
        assert_eq!(g.moduli(), &[2, 3, 4]);
        assert_eq!(g.invariant_factors(), &[2, 12]);

        // Trivial factors are dropped; all-trivial input is the trivial group.
        let g = grp("1 x 1");
        assert_eq!(g.moduli(), &[] as &[u64]);
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
        assert_eq!(g.to_string(), "Z/1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse_group(""), Err(Error::Parse(_))));
        assert!(matches!(parse_group("  "), Err(Error::Parse(_))));
        assert!(matches!(parse_group("0"), Err(Error::Parse(_))));
        assert!(matches!(parse_group("4x"), Err(Error::Parse(_))));
        assert!(matches!(parse_group("abc"), Err(Error::Parse(_))));
        assert!(matches!(parse_group("-4"), Err(Error::Parse(_))));
        assert!(matches!(parse_group("4..2"), Err(Error::Parse(_))));
    }

    #[test]
    fn order_cap_is_enforced() {
        // 2^40 * 2^40 overflows the cap.
        let big = (1u64 << 40).to_string();
        let spec = format!("{big}x{big}");
        assert!(matches!(parse_group(&spec), Err(Error::Range(_))));
        assert!(AbelianGroup::new(vec![1 << 40, 1 << 22]).is_ok());
    }

    /// Multiset of prime-power local factors, the invariant the merge must preserve.
    fn local_factors(moduli: &[u64]) -> Vec<u64> {
        let mut locals: Vec<u64> = moduli
            .iter()
            .filter(|&&m| m >= 2)
            .flat_map(|&m| factorize(m).into_iter().map(|(p, e)| p.pow(e)))
            .collect();
        locals.sort_unstable();
        locals
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(&[2, 3]), vec![6]);
        assert_eq!(canonicalize(&[4, 2]), vec![2, 4]);
        assert_eq!(canonicalize(&[12, 18]), vec![6, 36]);
        assert_eq!(canonicalize(&[]), Vec::<u64>::new());
        assert_eq!(canonicalize(&[1, 1]), Vec::<u64>::new());
    }

    #[test]
    fn canonicalize_output_is_a_divisor_chain_with_same_locals() {
        for moduli in [
            vec![2, 3],
            vec![4, 2],
            vec![12, 18],
            vec![8, 12, 30],
            vec![6, 10, 15],
        ] {
            let chain = canonicalize(&moduli);
            assert!(chain.windows(2).all(|w| w[1] % w[0] == 0), "{chain:?}");
            assert_eq!(local_factors(&chain), local_factors(&moduli));
            // Idempotent.
            assert_eq!(canonicalize(&chain), chain);
        }
    }

    #[test]
    fn element_ops_examples() {
        let g = grp("4x2");
        let a = g.element(&[3, 1]).unwrap();
        let b = g.element(&[2, 1]).unwrap();
        assert_eq!(g.add(&a, &b), g.element(&[1, 0]).unwrap());

        let z5 = grp("5");
        let two = z5.element(&[2]).unwrap();
        assert_eq!(z5.scalar_mul(7, &two), z5.element(&[4]).unwrap());

        // Negative residues reduce into range.
        assert_eq!(z5.element(&[-1]).unwrap(), z5.element(&[4]).unwrap());

        for spec in ["1", "5", "4x2", "2x2x3"] {
            let g = grp(spec);
            for a in g.elements().unwrap() {
                assert_eq!(g.add(&a, &g.neg(&a)), g.zero());
                assert_eq!(g.scalar_mul(0, &a), g.zero());
                assert_eq!(g.scalar_mul(-1, &a), g.neg(&a));
            }
        }
    }

    #[test]
    fn element_arity_is_checked() {
        let g = grp("4x2");
        assert!(matches!(
            g.element(&[1]),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    #[should_panic(expected = "arity")]
    fn add_panics_on_arity_mismatch() {
        let g = grp("4x2");
        let h = grp("5");
        let a = h.element(&[1]).unwrap();
        g.add(&a, &a);
    }

    #[test]
    fn torsion_size_examples() {
        assert_eq!(grp("4x2").torsion_size(2), 4);
        assert_eq!(grp("6").torsion_size(4), 2);
        for spec in ["1", "6", "4x2", "9x3"] {
            assert_eq!(grp(spec).torsion_size(1), 1);
        }
    }

    #[test]
    fn torsion_size_matches_brute_force() {
        for order in 1..=64 {
            for g in isomorphism_classes(order) {
                assert_eq!(g.torsion_size(g.exponent()), g.order());
                for d in divisors(g.exponent()) {
                    let count = g
                        .elements()
                        .unwrap()
                        .filter(|h| g.scalar_mul(d as i64, h).is_zero())
                        .count() as u64;
                    assert_eq!(g.torsion_size(d), count, "group {g}, d = {d}");
                }
            }
        }
    }

    #[test]
    fn in_dg_examples() {
        let g = grp("4x2");
        assert!(g.in_dg(2, &g.element(&[2, 0]).unwrap()));
        assert!(!g.in_dg(4, &g.element(&[2, 0]).unwrap()));
        for d in [1, 2, 3, 4] {
            assert!(g.in_dg(d, &g.zero()));
        }
    }

    #[test]
    fn in_dg_matches_brute_force() {
        for order in 1..=64 {
            for g in isomorphism_classes(order) {
                for d in divisors(g.exponent()) {
                    for target in g.elements().unwrap() {
                        let reachable = g
                            .elements()
                            .unwrap()
                            .any(|h| g.scalar_mul(d as i64, &h) == target);
                        assert_eq!(
                            g.in_dg(d, &target),
                            reachable,
                            "group {g}, d = {d}, g = {target}"
                        );
                    }
                }
            }
        }
    }

    /// Divisor-scan oracle for e(g), straight from the definition.
    fn e_of_scan(g: &AbelianGroup, elem: &GroupElement) -> u64 {
        divisors(g.exponent())
            .into_iter()
            .filter(|&d| g.in_dg(d, elem))
            .max()
            .unwrap()
    }

    #[test]
    fn e_of_examples() {
        let g = grp("4x2");
        assert_eq!(g.e_of(&g.zero()), 4);
        assert_eq!(g.e_of(&g.element(&[2, 0]).unwrap()), 2);
        assert_eq!(grp("6").e_of(&grp("6").element(&[4]).unwrap()), 2);
        assert_eq!(grp("1").e_of(&grp("1").element(&[]).unwrap()), 1);
    }

    #[test]
    fn e_of_agrees_with_divisor_scan_and_lcm() {
        for order in 1..=36 {
            for g in isomorphism_classes(order) {
                for elem in g.elements().unwrap() {
                    let max = e_of_scan(&g, &elem);
                    let by_lcm = divisors(g.exponent())
                        .into_iter()
                        .filter(|&d| g.in_dg(d, &elem))
                        .fold(1u64, lcm);
                    assert_eq!(g.e_of(&elem), max, "group {g}, elem {elem}");
                    assert_eq!(max, by_lcm, "group {g}, elem {elem}");
                }
            }
        }
    }

    #[test]
    fn sum_all_examples_and_oracle() {
        assert_eq!(grp("2").sum_all(), grp("2").element(&[1]).unwrap());
        assert_eq!(grp("3").sum_all(), grp("3").element(&[0]).unwrap());
        for order in 1..=32 {
            for g in isomorphism_classes(order) {
                let by_iteration = g
                    .elements()
                    .unwrap()
                    .fold(g.zero(), |acc, h| g.add(&acc, &h));
                assert_eq!(g.sum_all(), by_iteration, "group {g}");
            }
        }
    }

    #[test]
    fn elements_are_lexicographic_and_complete() {
        let g = grp("2x2");
        let all: Vec<GroupElement> = g.elements().unwrap().collect();
        let expect: Vec<GroupElement> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|r| g.element(&[r[0], r[1]]).unwrap())
            .collect();
        assert_eq!(all, expect);

        let trivial = grp("1");
        let all: Vec<GroupElement> = trivial.elements().unwrap().collect();
        assert_eq!(all, vec![trivial.zero()]);

        let z3 = grp("3");
        assert_eq!(
            z3.elements().unwrap().collect::<Vec<_>>(),
            (0..3)
                .map(|r| z3.element(&[r]).unwrap())
                .collect::<Vec<_>>()
        );

        for spec in ["1", "4", "4x2", "3x3x2"] {
            let g = grp(spec);
            let all: Vec<GroupElement> = g.elements().unwrap().collect();
            assert_eq!(all.len() as u64, g.order());
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for (rank, elem) in all.iter().enumerate() {
                assert_eq!(g.element_rank(elem), rank as u64);
            }
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let g = AbelianGroup::new(vec![1 << 25]).unwrap();
        assert!(matches!(g.elements(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn isomorphism_class_counts() {
        // Number of abelian groups of order p^e is the partition count of e.
        assert_eq!(isomorphism_classes(1).len(), 1);
        assert_eq!(isomorphism_classes(12).len(), 2);
        assert_eq!(isomorphism_classes(16).len(), 5);
        assert_eq!(isomorphism_classes(36).len(), 4);
        assert_eq!(isomorphism_classes(64).len(), 11);
        for g in isomorphism_classes(16) {
            assert_eq!(g.order(), 16);
        }
    }

    proptest! {
        #[test]
        fn canonicalize_is_order_insensitive(
            mut moduli in proptest::collection::vec(2u64..64, 0..5)
        ) {
            let chain = canonicalize(&moduli);
            moduli.reverse();
            prop_assert_eq!(canonicalize(&moduli), chain.clone());
            prop_assert!(chain.windows(2).all(|w| w[1] % w[0] == 0));
            prop_assert_eq!(local_factors(&chain), local_factors(&moduli));
        }

        #[test]
        fn parse_round_trips_canonical_rendering(
            moduli in proptest::collection::vec(2u64..50, 1..4)
        ) {
            let g = AbelianGroup::new(moduli).unwrap();
            let reparsed = parse_group(&g.to_string()).unwrap();
            prop_assert_eq!(reparsed.invariant_factors(), g.invariant_factors());
            prop_assert_eq!(reparsed.order(), g.order());
        }
    }
}
