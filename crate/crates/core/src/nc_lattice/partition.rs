use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use super::{PartitionError, MAX_GROUND_SET};

/// A partition of `{1..n}` in canonical form.
///
/// Blocks are sorted ascending and ordered by their minimum element, so two
/// partitions are equal exactly when they have the same blocks. The block
/// index of each element is cached alongside for constant-time membership.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl SetPartition {
    /// Builds a partition from blocks given in any order.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        check_size(n)?;
        let mut labels = vec![usize::MAX; n];
        for (id, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(PartitionError::OutOfRange { element: e, n });
                }
                if labels[e - 1] != usize::MAX {
                    return Err(PartitionError::Duplicate(e));
                }
                labels[e - 1] = id;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(PartitionError::Missing(i + 1));
        }
        Ok(Self::from_labels_unchecked(&labels))
    }

    /// Builds the partition whose blocks are the level sets of `labels`:
    /// `i` and `j` share a block iff `labels[i-1] == labels[j-1]`.
    pub fn from_labels<T: Eq + Hash>(labels: &[T]) -> Result<Self, PartitionError> {
        check_size(labels.len())?;
        let mut ids: HashMap<&T, usize> = HashMap::new();
        let dense: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Ok(Self::from_labels_unchecked(&dense))
    }

    /// `labels` must be dense-ish ids (`< labels.len()`), any order.
    pub(crate) fn from_labels_unchecked(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut remap = vec![usize::MAX; n.max(labels.iter().copied().max().map_or(0, |m| m + 1))];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(n);
        for (i, &l) in labels.iter().enumerate() {
            if remap[l] == usize::MAX {
                remap[l] = blocks.len();
                blocks.push(Vec::new());
            }
            let b = remap[l];
            blocks[b].push(i + 1);
            block_of.push(b);
        }
        SetPartition {
            n,
            blocks,
            block_of,
        }
    }

    /// `0_n`: every element on its own.
    pub fn singletons(n: usize) -> Result<Self, PartitionError> {
        check_size(n)?;
        Ok(Self::from_labels_unchecked(&(0..n).collect::<Vec<_>>()))
    }

    /// `1_n`: a single block.
    pub fn full(n: usize) -> Result<Self, PartitionError> {
        check_size(n)?;
        Ok(Self::from_labels_unchecked(&vec![0; n]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index (into [`blocks`](Self::blocks)) of the block holding `element`.
    pub fn block_index(&self, element: usize) -> usize {
        self.block_of[element - 1]
    }

    pub fn block_containing(&self, element: usize) -> &[usize] {
        &self.blocks[self.block_index(element)]
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_index(a) == self.block_index(b)
    }

    /// Block labels in restricted-growth form (0-based, first occurrence order).
    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn is_full(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_pairing(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    pub fn has_even_blocks(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 0)
    }

    /// Bitmask of the block containing `element`, bit `i-1` standing for `i`.
    pub fn block_mask(&self, element: usize) -> u64 {
        self.blocks[self.block_index(element)]
            .iter()
            .fold(0u64, |m, &e| m | (1 << (e - 1)))
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        let last: Vec<usize> = self.blocks.iter().map(|b| *b.last().unwrap()).collect();
        let mut seen = vec![false; self.blocks.len()];
        let mut open: Vec<usize> = Vec::new();
        for i in 1..=self.n {
            let b = self.block_of[i - 1];
            if seen[b] {
                if open.last() != Some(&b) {
                    return false;
                }
            } else {
                seen[b] = true;
                open.push(b);
            }
            if last[b] == i {
                open.pop();
            }
        }
        true
    }

    /// Reverse refinement: every block of `self` sits inside a block of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool, PartitionError> {
        self.check_same_n(other)?;
        Ok(self.blocks.iter().all(|block| {
            let target = other.block_index(block[0]);
            block.iter().all(|&e| other.block_index(e) == target)
        }))
    }

    /// Blocks are all non-empty intersections of a block of `self` with one of `other`.
    pub fn meet(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_same_n(other)?;
        let width = other.blocks.len();
        let labels: Vec<usize> = (0..self.n)
            .map(|i| self.block_of[i] * width + other.block_of[i])
            .collect();
        Ok(Self::from_labels_unchecked(&labels))
    }

    /// Join in the lattice of all partitions: connectivity closure of the
    /// union of both block relations.
    pub fn join_full(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_same_n(other)?;
        let mut uf = UnionFind::new(self.n);
        for part in [self, other] {
            for block in &part.blocks {
                for w in block.windows(2) {
                    uf.union(w[0] - 1, w[1] - 1);
                }
            }
        }
        let labels: Vec<usize> = (0..self.n).map(|i| uf.find(i)).collect();
        Ok(Self::from_labels_unchecked(&labels))
    }

    /// Join in `NC(n)`: the least non-crossing partition above both inputs.
    ///
    /// Starts from the full-lattice join and merges crossing blocks until none
    /// remain. Every non-crossing upper bound must contain each merged pair, so
    /// the fixpoint is the least one.
    pub fn join_nc(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_same_n(other)?;
        for p in [self, other] {
            if !p.is_noncrossing() {
                return Err(PartitionError::Crossing(p.to_string()));
            }
        }
        let mut joined = self.join_full(other)?;
        while let Some((a, b)) = joined.find_crossing_pair() {
            let labels: Vec<usize> = joined
                .block_of
                .iter()
                .map(|&l| if l == b { a } else { l })
                .collect();
            joined = Self::from_labels_unchecked(&labels);
        }
        Ok(joined)
    }

    /// Two block indices whose blocks cross, if any.
    fn find_crossing_pair(&self) -> Option<(usize, usize)> {
        let masks: Vec<u64> = self
            .blocks
            .iter()
            .map(|b| b.iter().fold(0u64, |m, &e| m | (1 << (e - 1))))
            .collect();
        for (v, block) in self.blocks.iter().enumerate() {
            // Gaps between consecutive elements of V; W crosses V iff it has
            // elements both inside one gap and outside it.
            for w in block.windows(2) {
                let gap = span_mask(w[0] + 1, w[1] - 1);
                if gap == 0 {
                    continue;
                }
                for (u, &mask) in masks.iter().enumerate() {
                    if u != v && mask & gap != 0 && mask & !gap != 0 {
                        return Some((v.min(u), v.max(u)));
                    }
                }
            }
        }
        None
    }

    fn check_same_n(&self, other: &Self) -> Result<(), PartitionError> {
        if self.n != other.n {
            Err(PartitionError::SizeMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }
}

/// The proper intervals `[p, q] ⊊ {1..n}` that are unions of blocks.
///
/// Two non-crossing partitions have `NC`-join `1_n` exactly when they share
/// no such interval: a shared interval `I` gives the upper bound `{I, Iᶜ}`,
/// and any upper bound other than `1_n` has a proper interval block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSignature {
    n: usize,
    words: Vec<u64>,
}

impl IntervalSignature {
    pub fn new(p: &SetPartition) -> Self {
        let n = p.n();
        let lo: Vec<usize> = (1..=n).map(|e| p.block_containing(e)[0]).collect();
        let hi: Vec<usize> = (1..=n)
            .map(|e| *p.block_containing(e).last().unwrap())
            .collect();
        let mut words = vec![0u64; (n * n).div_ceil(64)];
        for a in 1..=n {
            let (mut min, mut max) = (usize::MAX, 0);
            for b in a..=n {
                min = min.min(lo[b - 1]);
                max = max.max(hi[b - 1]);
                if min >= a && max <= b && !(a == 1 && b == n) {
                    let bit = (a - 1) * n + (b - 1);
                    words[bit / 64] |= 1 << (bit % 64);
                }
            }
        }
        IntervalSignature { n, words }
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let bit = (a - 1) * self.n + (b - 1);
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    /// Whether some proper interval is a union of blocks of both partitions.
    pub fn shares_interval(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }
}

/// Mask of the 1-based elements `lo..=hi`; empty when `lo > hi`.
fn span_mask(lo: usize, hi: usize) -> u64 {
    if lo > hi {
        return 0;
    }
    let upper = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
    upper & !((1u64 << (lo - 1)) - 1)
}

fn check_size(n: usize) -> Result<(), PartitionError> {
    if n == 0 || n > MAX_GROUND_SET {
        Err(PartitionError::GroundSetSize(n))
    } else {
        Ok(())
    }
}

/// Kernel of a tuple: positions `i` and `j` share a block iff the entries agree.
pub fn kernel(tuple: &[usize]) -> Result<SetPartition, PartitionError> {
    SetPartition::from_labels(tuple)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl fmt::Display for SetPartition {
    /// `{1,2,4|3|5,6}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SetPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| parse_err("expected surrounding braces"))?;
        let mut blocks = Vec::new();
        for block in inner.split('|') {
            let elements = block
                .split(',')
                .map(|e| e.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| parse_err("blocks must be comma-separated positive integers"))?;
            blocks.push(elements);
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::new(n, blocks)
    }
}
