//! Exhaustive counting over `NC(n)²` and related index sets.
//!
//! [`count_all`] makes one pass over all ordered pairs `(π, ρ)` and fills
//! every counter of a [`CountReport`] at once. The outer index is split into
//! contiguous ranges, one per worker; each worker keeps local counters that
//! are summed at the end, so results do not depend on the worker count.
//! With the `parallel` feature disabled, or with one worker, the ranges run
//! sequentially on the calling thread.
//!
//! Single-core timings of an optimised build for [`count_all`]: `n = 8`
//! (2·10⁶ pairs) 0.25 s, `n = 9` 3 s, `n = 10` 45 s; each further step
//! costs about 13× more (`n = 12` takes hours). Divide by the core count
//! when parallel.

mod kernel;
mod report;
mod sums;

pub use report::CountReport;
pub use sums::{
    count_b3, join_power_sum_by_colourings, join_power_sum_full, mixed_join_sum,
    mixed_join_sum_by_colourings, JOIN_SUM_LIMIT, MIXED_SUM_LIMIT,
};

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::meander::{
    is_irreducible_doubled, is_irreducible_lattice, MeanderError, MeandricSystem,
};
use crate::nc_lattice::{enumerate_nc, PartitionError, SetPartition};
use kernel::{Prepared, Tally};

/// Largest `n` enumerated without `force`.
pub const DEFAULT_LIMIT: usize = 12;
/// Largest `n` the pair kernel can represent (`2n` points in one word).
pub const HARD_LIMIT: usize = 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the feasibility limit {limit} (use --force to override)")]
    Infeasible { n: usize, limit: usize },
    #[error("n = {0} is outside the supported range 1..={HARD_LIMIT}")]
    Unsupported(usize),
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("invalid shard {0:?}; expected i/k with 0 <= i < k")]
    InvalidShard(String),
    #[error("nothing to merge")]
    EmptyMerge,
    #[error("shards do not form one complete run")]
    IncompleteMerge,
    #[error("invalid report: {0}")]
    Format(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Meander(#[from] MeanderError),
}

/// Slice `index` (0-based) out of `total` contiguous slices of the outer index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub total: usize,
}

impl Shard {
    pub fn new(index: usize, total: usize) -> Result<Self, EnumerationError> {
        if total == 0 || index >= total {
            return Err(EnumerationError::InvalidShard(format!("{index}/{total}")));
        }
        Ok(Shard { index, total })
    }

    fn range(&self, len: usize) -> Range<usize> {
        split_range(0..len, self.total)[self.index].clone()
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.total)
    }
}

impl FromStr for Shard {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnumerationError::InvalidShard(s.to_string());
        let (i, k) = s.split_once('/').ok_or_else(bad)?;
        let i = i.trim().parse().map_err(|_| bad())?;
        let k = k.trim().parse().map_err(|_| bad())?;
        Shard::new(i, k).map_err(|_| bad())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    pub workers: usize,
    /// Lift the [`DEFAULT_LIMIT`] guard.
    pub force: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            force: false,
        }
    }
}

impl CountOptions {
    pub fn with_workers(workers: usize) -> Self {
        CountOptions {
            workers,
            force: false,
        }
    }
}

pub(crate) fn check_feasible(n: usize, limit: usize, force: bool) -> Result<(), EnumerationError> {
    if n == 0 || n > HARD_LIMIT {
        return Err(EnumerationError::Unsupported(n));
    }
    if n > limit && !force {
        return Err(EnumerationError::Infeasible { n, limit });
    }
    Ok(())
}

/// `len` items in `parts` contiguous ranges whose sizes differ by at most one.
pub(crate) fn split_range(r: Range<usize>, parts: usize) -> Vec<Range<usize>> {
    let len = r.end - r.start;
    let (base, extra) = (len / parts, len % parts);
    let mut out = Vec::with_capacity(parts);
    let mut start = r.start;
    for i in 0..parts {
        let size = base + usize::from(i < extra);
        out.push(start..start + size);
        start += size;
    }
    out
}

/// All counters over every ordered pair in `NC(n)²`.
pub fn count_all(n: usize, opts: &CountOptions) -> Result<CountReport, EnumerationError> {
    count_range(n, None, opts)
}

/// Counters restricted to one shard of the outer index; shards merge back
/// into [`count_all`] through [`CountReport::merge`].
pub fn checkpointed_count(
    n: usize,
    shard: Shard,
    opts: &CountOptions,
) -> Result<CountReport, EnumerationError> {
    count_range(n, Some(shard), opts)
}

fn count_range(
    n: usize,
    shard: Option<Shard>,
    opts: &CountOptions,
) -> Result<CountReport, EnumerationError> {
    check_feasible(n, DEFAULT_LIMIT, opts.force)?;
    if opts.workers == 0 {
        return Err(EnumerationError::NoWorkers);
    }
    let started = Instant::now();
    let prepared: Vec<Prepared> = enumerate_nc(n)?.map(|p| Prepared::new(&p)).collect();
    let outer = shard.map_or(0..prepared.len(), |s| s.range(prepared.len()));
    let ranges = split_range(outer, opts.workers);
    let tally = run_ranges(n, &prepared, ranges, opts.workers)?;
    Ok(CountReport {
        n,
        total_pairs: tally.pairs,
        meanders: tally.histogram[0],
        irreducible: tally.irreducible,
        histogram: tally.histogram,
        strictly_noncrossing: tally.strictly_noncrossing,
        b2: tally.meet_zero,
        shard,
        elapsed: started.elapsed(),
        worker_count: opts.workers,
    })
}

fn run_ranges(
    n: usize,
    prepared: &[Prepared],
    ranges: Vec<Range<usize>>,
    workers: usize,
) -> Result<Tally, EnumerationError> {
    if workers > 1 {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| EnumerationError::ThreadPool(e.to_string()))?;
            return Ok(pool.install(|| {
                ranges
                    .into_par_iter()
                    .map(|r| Tally::count_rows(prepared, r))
                    .reduce(|| Tally::new(n), Tally::merge)
            }));
        }
    }
    Ok(ranges
        .into_iter()
        .map(|r| Tally::count_rows(prepared, r))
        .fold(Tally::new(n), Tally::merge))
}

/// Which of the three equivalent irreducibility tests to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrreducibilityCriterion {
    /// No proper subinterval of `{1..2n}` is invariant under `M_{π,ρ}`.
    IntervalScan,
    /// `A(π) ∨ A(ρ) = 1_{2n}` in `NC(2n)`.
    DoubledJoin,
    /// `π ∨ ρ = 1_n` and `π ∧ ρ = 0_n`.
    MeetJoin,
}

/// `m^{(irr)}_n` through the generic predicates of [`crate::meander`].
pub fn count_irreducible(
    n: usize,
    criterion: IrreducibilityCriterion,
) -> Result<u64, EnumerationError> {
    check_feasible(n, 8, false)?;
    let all: Vec<SetPartition> = enumerate_nc(n)?.collect();
    let mut count = 0;
    for a in &all {
        for b in &all {
            let hit = match criterion {
                IrreducibilityCriterion::IntervalScan => {
                    MeandricSystem::new(a, b)?.is_irreducible_direct()
                }
                IrreducibilityCriterion::DoubledJoin => is_irreducible_doubled(a, b)?,
                IrreducibilityCriterion::MeetJoin => is_irreducible_lattice(a, b)?,
            };
            count += u64::from(hit);
        }
    }
    Ok(count)
}

/// [`count_all`] recomputed pair by pair from [`MeandricSystem`] and the
/// lattice operations; slow, used to cross-check the kernel.
pub fn count_all_reference(n: usize) -> Result<CountReport, EnumerationError> {
    check_feasible(n, 7, false)?;
    let started = Instant::now();
    let all: Vec<SetPartition> = enumerate_nc(n)?.collect();
    let mut report = CountReport {
        n,
        total_pairs: 0,
        meanders: 0,
        irreducible: 0,
        histogram: vec![0; n],
        strictly_noncrossing: 0,
        b2: 0,
        shard: None,
        elapsed: Default::default(),
        worker_count: 1,
    };
    for a in &all {
        for b in &all {
            let m = MeandricSystem::new(a, b)?;
            report.total_pairs += 1;
            report.histogram[m.component_count() - 1] += 1;
            report.irreducible += u64::from(m.is_irreducible_direct());
            report.strictly_noncrossing += u64::from(m.is_strictly_noncrossing());
            report.b2 += u64::from(a.meet(b)?.is_singletons());
        }
    }
    report.meanders = report.histogram[0];
    report.elapsed = started.elapsed();
    Ok(report)
}
