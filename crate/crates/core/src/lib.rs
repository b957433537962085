//! Exact counting of fixed-size subsets of a finite abelian group with a
//! prescribed sum.
//!
//! For a finite abelian group `G` of order `n`, [`counting::count_subsets`]
//! computes `N(i, g)`, the number of `i`-element subsets of `G` whose
//! elements sum to `g`, and [`counting::count_subsets_nonzero`] the variant
//! `N*(i, g)` drawing subsets from `G \ {0}`. Both are evaluated through a
//! divisor-sum closed form whose cost is polynomial in `n`, instead of the
//! exponential enumeration the definition suggests; the [`oracle`] module
//! carries that enumeration (and a cubic dynamic program, and numeric
//! character-sum checks) as independent ground truth.
//!
//! All counts are exact arbitrary-precision integers.
//!
//! ```
//! use abelian_subsets::counting::count_subsets;
//! use abelian_subsets::group::parse_group;
//!
//! let group = parse_group("Z/4 x Z/2")?;
//! let target = group.element(&[2, 0])?;
//! assert_eq!(count_subsets(&group, 3, &target)?.to_string(), "7");
//! # Ok::<(), abelian_subsets::Error>(())
//! ```

pub mod counting;
pub mod error;
pub mod group;
pub mod numtheory;
pub mod oracle;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_complex::Complex64;
