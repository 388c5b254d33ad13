use std::fmt;

use super::{PartitionError, SetPartition};

/// A bijection of `{1..n}`; `images()[i]` is the value at `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PartitionError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(PartitionError::NotPermutation(n));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Number of cycles, `#(τ)`.
    pub fn orbit_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] - 1;
            }
        }
        count
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// Partition into cycles of `t`.
pub fn orbits(t: &Permutation) -> SetPartition {
    let n = t.n();
    let mut labels = vec![usize::MAX; n];
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        let mut i = start;
        while labels[i] == usize::MAX {
            labels[i] = start;
            i = t.images[i] - 1;
        }
    }
    SetPartition::from_labels_unchecked(&labels)
}

/// `P_π`: the increasing cycle `i₁ → i₂ → … → i_k → i₁` on every block.
pub fn trace_permutation(p: &SetPartition) -> Permutation {
    let mut images = vec![0; p.n()];
    for block in p.blocks() {
        for (k, &e) in block.iter().enumerate() {
            images[e - 1] = block[(k + 1) % block.len()];
        }
    }
    Permutation::from_images_unchecked(images)
}
