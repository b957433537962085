//! The `bench` command: wall time and work counts for the closed form
//! against the DP oracle on one group, with an agreement check thrown in.

use std::time::Instant;

use abelian_subsets::counting::{count_table, Variant};
use abelian_subsets::group::AbelianGroup;
use abelian_subsets::oracle::dp_counts_with_stats;
use abelian_subsets::Result;

pub struct BenchReport {
    pub group: AbelianGroup,
    pub variant: Variant,
    pub closed_ms: f64,
    /// `(size, e-class)` cells the closed form evaluated.
    pub closed_cells: u64,
    pub dp_ms: f64,
    pub dp_passes: u64,
    pub dp_updates: u64,
    pub speedup: f64,
    pub tables_agree: bool,
}

pub fn run(group: &AbelianGroup, variant: Variant, dp_cap: u64) -> Result<BenchReport> {
    let start = Instant::now();
    let closed = count_table(group, variant)?;
    let closed_ms = start.elapsed().as_secs_f64() * 1e3;
    let closed_cells = closed.rows.len() as u64 * closed.class_sizes.len() as u64;

    let start = Instant::now();
    let (dp, stats) = dp_counts_with_stats(group, variant, dp_cap)?;
    let dp_ms = start.elapsed().as_secs_f64() * 1e3;

    Ok(BenchReport {
        group: group.clone(),
        variant,
        closed_ms,
        closed_cells,
        dp_ms,
        dp_passes: stats.passes,
        dp_updates: stats.updates,
        speedup: dp_ms / closed_ms,
        tables_agree: closed.class_sizes == dp.class_sizes && closed.rows == dp.rows,
    })
}
