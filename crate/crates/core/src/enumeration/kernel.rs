//! The pair-counting inner loop.
//!
//! Each partition of `NC(n)` is prepared once: its trace permutation and
//! inverse, per-element block masks and interval signature. A pair is then
//! classified with word operations and a single cycle walk over `2n` points.

use crate::nc_lattice::{trace_permutation, IntervalSignature, SetPartition};

pub(crate) struct Prepared {
    succ: Vec<u8>,
    pred: Vec<u8>,
    block_masks: Vec<u64>,
    signature: IntervalSignature,
}

impl Prepared {
    pub(crate) fn new(p: &SetPartition) -> Self {
        let t = trace_permutation(p);
        let inv = t.inverse();
        Prepared {
            succ: t.images().iter().map(|&v| (v - 1) as u8).collect(),
            pred: inv.images().iter().map(|&v| (v - 1) as u8).collect(),
            block_masks: (1..=p.n()).map(|e| p.block_mask(e)).collect(),
            signature: IntervalSignature::new(p),
        }
    }

    /// `π ∧ ρ = 0_n`.
    #[inline]
    pub(crate) fn meet_is_zero(&self, other: &Self) -> bool {
        self.block_masks
            .iter()
            .zip(&other.block_masks)
            .enumerate()
            .all(|(i, (a, b))| a & b == 1 << i)
    }

    /// `π ∨ ρ = 1_n` in `NC(n)`.
    #[inline]
    pub(crate) fn join_is_one(&self, other: &Self) -> bool {
        !self.signature.shares_interval(&other.signature)
    }
}

/// Per-pair classification of `M_{π,ρ}`.
pub(crate) struct PairClass {
    pub components: usize,
    pub strictly_noncrossing: bool,
}

/// Walks the cycles of `M_{π,ρ}` on 0-based points `0..2n`: even point `2j`
/// goes to `2·P_π⁻¹(j)+1`, odd point `2j+1` goes to `2·P_ρ(j)`.
#[inline]
pub(crate) fn classify(top: &Prepared, bottom: &Prepared) -> PairClass {
    let len = 2 * top.succ.len();
    let mut label = [u8::MAX; 64];
    let mut last = [0u8; 64];
    let mut components = 0usize;
    for start in 0..len {
        if label[start] != u8::MAX {
            continue;
        }
        let id = components as u8;
        components += 1;
        let mut x = start;
        let mut max = start;
        while label[x] == u8::MAX {
            label[x] = id;
            max = max.max(x);
            x = if x % 2 == 0 {
                2 * top.pred[x / 2] as usize + 1
            } else {
                2 * bottom.succ[x / 2] as usize
            };
        }
        last[id as usize] = max as u8;
    }
    let strictly_noncrossing = components == 1 || labels_noncrossing(&label[..len], &last);
    PairClass {
        components,
        strictly_noncrossing,
    }
}

/// Stack test on a labelling whose blocks are numbered by first occurrence.
#[inline]
fn labels_noncrossing(label: &[u8], last: &[u8; 64]) -> bool {
    let mut stack = [0u8; 64];
    let mut depth = 0usize;
    let mut opened = 0u8;
    for (i, &b) in label.iter().enumerate() {
        if b == opened {
            opened += 1;
            stack[depth] = b;
            depth += 1;
        } else if stack[depth - 1] != b {
            return false;
        }
        if last[b as usize] as usize == i {
            depth -= 1;
        }
    }
    true
}

/// Counters for a slice of the pair space; a commutative monoid under `merge`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Tally {
    pub pairs: u64,
    pub histogram: Vec<u64>,
    pub irreducible: u64,
    pub strictly_noncrossing: u64,
    pub meet_zero: u64,
}

impl Tally {
    pub(crate) fn new(n: usize) -> Self {
        Tally {
            histogram: vec![0; n],
            ..Tally::default()
        }
    }

    pub(crate) fn merge(mut self, other: Tally) -> Tally {
        self.pairs += other.pairs;
        self.irreducible += other.irreducible;
        self.strictly_noncrossing += other.strictly_noncrossing;
        self.meet_zero += other.meet_zero;
        for (a, b) in self.histogram.iter_mut().zip(other.histogram) {
            *a += b;
        }
        self
    }

    /// Every pair whose first coordinate has index in `outer`.
    pub(crate) fn count_rows(prepared: &[Prepared], outer: std::ops::Range<usize>) -> Tally {
        let n = prepared.first().map_or(0, |p| p.succ.len());
        let mut tally = Tally::new(n);
        for top in &prepared[outer] {
            for bottom in prepared {
                tally.pairs += 1;
                let class = classify(top, bottom);
                tally.histogram[class.components - 1] += 1;
                if class.strictly_noncrossing {
                    tally.strictly_noncrossing += 1;
                }
                if top.meet_is_zero(bottom) {
                    tally.meet_zero += 1;
                    if top.join_is_one(bottom) {
                        tally.irreducible += 1;
                    }
                }
            }
        }
        tally
    }
}
