//! Catalan-family enumerators.
//!
//! Every stream is driven by balanced parenthesis words of length `2n` taken
//! in lexicographic order with `(` before `)`. A word decodes to a
//! non-crossing partition by reading, for each element `i`, the run of `(`
//! just before the `i`-th `)`: a run of length `k > 0` opens a new block of
//! size `k`, and `i` joins the innermost block that still has room. The
//! first word `((…))` is `1_n` and the last word `()()…()` is `0_n`.

use num_bigint::BigUint;

use super::{PartitionError, SetPartition, MAX_GROUND_SET};

/// Balanced parenthesis words of length `2·pairs`, lexicographic order.
#[derive(Debug, Clone)]
pub struct DyckWords {
    word: Vec<u8>,
    pairs: usize,
    done: bool,
}

impl DyckWords {
    pub fn new(pairs: usize) -> Self {
        let mut word = vec![b'('; pairs];
        word.extend(std::iter::repeat_n(b')', pairs));
        DyckWords {
            word,
            pairs,
            done: pairs == 0,
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.word.len();
        let mut opens = vec![0usize; len + 1];
        for (i, &c) in self.word.iter().enumerate() {
            opens[i + 1] = opens[i] + usize::from(c == b'(');
        }
        for i in (0..len).rev() {
            let balance_before = 2 * opens[i] - i;
            if self.word[i] == b'(' && balance_before >= 1 {
                self.word[i] = b')';
                let remaining_opens = self.pairs - opens[i];
                for (k, c) in self.word[i + 1..].iter_mut().enumerate() {
                    *c = if k < remaining_opens { b'(' } else { b')' };
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for DyckWords {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let current = self.word.clone();
        self.done = !self.advance();
        Some(current)
    }
}

/// Decodes a balanced word into the corresponding element of `NC(n)`.
pub(crate) fn decode_word(word: &[u8]) -> SetPartition {
    let mut labels = Vec::with_capacity(word.len() / 2);
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut run = 0usize;
    let mut next_block = 0usize;
    for &c in word {
        if c == b'(' {
            run += 1;
            continue;
        }
        if run > 0 {
            stack.push((next_block, run));
            next_block += 1;
            run = 0;
        }
        let top = stack.last_mut().expect("balanced word");
        labels.push(top.0);
        top.1 -= 1;
        if top.1 == 0 {
            stack.pop();
        }
    }
    SetPartition::from_labels_unchecked(&labels)
}

/// Matching-parenthesis pairing of a balanced word.
fn word_to_pairing(word: &[u8]) -> SetPartition {
    let mut labels = vec![0usize; word.len()];
    let mut stack = Vec::new();
    for (i, &c) in word.iter().enumerate() {
        if c == b'(' {
            stack.push(i);
        } else {
            let j = stack.pop().expect("balanced word");
            labels[i] = j;
            labels[j] = j;
        }
    }
    SetPartition::from_labels_unchecked(&labels)
}

fn runs_are_even(word: &[u8]) -> bool {
    word.split(|&c| c == b')').all(|run| run.len() % 2 == 0)
}

/// Stream over `NC(n)`.
#[derive(Debug, Clone)]
pub struct NcPartitions {
    words: DyckWords,
    kind: StreamKind,
}

#[derive(Debug, Clone, Copy)]
enum StreamKind {
    All,
    EvenBlocks,
    Pairings,
}

impl Iterator for NcPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        loop {
            let word = self.words.next()?;
            match self.kind {
                StreamKind::All => return Some(decode_word(&word)),
                StreamKind::EvenBlocks if runs_are_even(&word) => return Some(decode_word(&word)),
                StreamKind::EvenBlocks => continue,
                StreamKind::Pairings => return Some(word_to_pairing(&word)),
            }
        }
    }
}

/// Every element of `NC(n)` once, in balanced-word order.
pub fn enumerate_nc(n: usize) -> Result<NcPartitions, PartitionError> {
    check_ground_set(n)?;
    Ok(NcPartitions {
        words: DyckWords::new(n),
        kind: StreamKind::All,
    })
}

/// Elements of `NC(m)` whose blocks all have even size.
pub fn enumerate_nce(m: usize) -> Result<NcPartitions, PartitionError> {
    check_ground_set(m)?;
    if m % 2 == 1 {
        return Err(PartitionError::OddGroundSet(m));
    }
    Ok(NcPartitions {
        words: DyckWords::new(m),
        kind: StreamKind::EvenBlocks,
    })
}

/// Non-crossing pairings `NCP(m)`.
pub fn enumerate_ncp(m: usize) -> Result<NcPartitions, PartitionError> {
    check_ground_set(m)?;
    if m % 2 == 1 {
        return Err(PartitionError::OddGroundSet(m));
    }
    Ok(NcPartitions {
        words: DyckWords::new(m / 2),
        kind: StreamKind::Pairings,
    })
}

fn check_ground_set(n: usize) -> Result<(), PartitionError> {
    if n == 0 || n > MAX_GROUND_SET {
        Err(PartitionError::GroundSetSize(n))
    } else {
        Ok(())
    }
}

/// `C_n = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::from(1u32);
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyck_words_small() {
        let words: Vec<String> = DyckWords::new(3)
            .map(|w| String::from_utf8(w).unwrap())
            .collect();
        assert_eq!(words, ["((()))", "(()())", "(())()", "()(())", "()()()"]);
    }

    #[test]
    fn decode_matches_examples() {
        assert_eq!(decode_word(b"(()())").to_string(), "{1,3|2}");
        assert_eq!(decode_word(b"((()))").to_string(), "{1,2,3}");
        assert_eq!(decode_word(b"()()()").to_string(), "{1|2|3}");
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_nc(1).unwrap().count(), 1);
        assert_eq!(enumerate_nc(4).unwrap().count(), 14);
        assert_eq!(enumerate_ncp(2).unwrap().count(), 1);
        assert_eq!(enumerate_ncp(8).unwrap().count(), 14);
        assert_eq!(enumerate_nce(2).unwrap().count(), 1);
    }

    #[test]
    fn nce_four() {
        let got: Vec<String> = enumerate_nce(4).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(got, ["{1,2,3,4}", "{1,4|2,3}", "{1,2|3,4}"]);
    }

    #[test]
    fn odd_and_empty_ground_sets_rejected() {
        assert_eq!(
            enumerate_ncp(3).err(),
            Some(PartitionError::OddGroundSet(3))
        );
        assert_eq!(
            enumerate_nce(5).err(),
            Some(PartitionError::OddGroundSet(5))
        );
        assert_eq!(
            enumerate_nc(0).err(),
            Some(PartitionError::GroundSetSize(0))
        );
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(4), BigUint::from(14u32));
        assert_eq!(catalan(10), BigUint::from(16796u32));
    }
}
