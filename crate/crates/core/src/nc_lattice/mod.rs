//! Set partitions of `{1..n}`, the non-crossing lattice `NC(n)` and the full
//! partition lattice, trace permutations and Catalan-family enumerators.
//!
//! Elements of the ground set are 1-based throughout the public API.

mod enumerate;
mod partition;
mod permutation;

pub use enumerate::{catalan, enumerate_nc, enumerate_nce, enumerate_ncp, DyckWords, NcPartitions};
pub use partition::{kernel, IntervalSignature, SetPartition};
pub use permutation::{orbits, trace_permutation, Permutation};

use thiserror::Error;

/// Largest ground set a [`SetPartition`] may live on.
pub const MAX_GROUND_SET: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("ground set must have between 1 and {MAX_GROUND_SET} elements, got {0}")]
    GroundSetSize(usize),
    #[error("element {element} is outside the ground set {{1..{n}}}")]
    OutOfRange { element: usize, n: usize },
    #[error("element {0} appears in more than one block")]
    Duplicate(usize),
    #[error("element {0} is not covered by any block")]
    Missing(usize),
    #[error("empty block")]
    EmptyBlock,
    #[error("partitions live on different ground sets ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("partition {0} is crossing")]
    Crossing(String),
    #[error("a pairing needs an even ground set, got {0}")]
    OddGroundSet(usize),
    #[error("not a permutation of {{1..{0}}}")]
    NotPermutation(usize),
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
