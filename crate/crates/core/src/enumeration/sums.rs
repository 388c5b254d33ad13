//! Triple counts and weighted join sums over non-crossing partitions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::kernel::Prepared;
use super::{check_feasible, EnumerationError};
use crate::nc_lattice::{enumerate_nc, enumerate_ncp, SetPartition};

/// Largest `n` accepted by [`count_b3`] and [`join_power_sum_full`].
pub const JOIN_SUM_LIMIT: usize = 8;
/// Largest `n` accepted by [`mixed_join_sum`] (the partitions live on `2n`).
pub const MIXED_SUM_LIMIT: usize = 6;

/// `#{(π₁, π₂, π₃) ∈ NC(n)³ : π₁ ∧ π₂ = 0_n, π₂ ∨ π₃ = 1_n}`.
///
/// The two constraints only share `π₂`, so for each `π₂` the number of
/// admissible `π₁` and `π₃` are counted separately and multiplied.
pub fn count_b3(n: usize) -> Result<BigUint, EnumerationError> {
    check_feasible(n, JOIN_SUM_LIMIT, false)?;
    let prepared: Vec<Prepared> = enumerate_nc(n)?.map(|p| Prepared::new(&p)).collect();
    let row = |mid: &Prepared| -> u128 {
        let mut below = 0u128;
        let mut above = 0u128;
        for other in &prepared {
            below += u128::from(other.meet_is_zero(mid));
            above += u128::from(mid.join_is_one(other));
        }
        below * above
    };
    #[cfg(feature = "parallel")]
    let total: u128 = {
        use rayon::prelude::*;
        prepared.par_iter().map(row).sum()
    };
    #[cfg(not(feature = "parallel"))]
    let total: u128 = prepared.iter().map(row).sum();
    Ok(BigUint::from(total))
}

/// Number of blocks of `π ∨ ρ` in the full partition lattice, from the
/// label vectors of both partitions.
fn full_join_blocks(a: &[usize], b: &[usize]) -> usize {
    let n = a.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut blocks = n;
    for labels in [a, b] {
        // first element seen with each label
        let mut first = vec![usize::MAX; n];
        for (i, &l) in labels.iter().enumerate() {
            if first[l] == usize::MAX {
                first[l] = i;
                continue;
            }
            let (x, y) = (find(&mut parent, first[l]), find(&mut parent, i));
            if x != y {
                parent[x] = y;
                blocks -= 1;
            }
        }
    }
    blocks
}

/// `Σ_{k} h_k · d^k` for a histogram indexed by block count.
fn evaluate(histogram: &[u64], d: u64) -> BigUint {
    let d = BigUint::from(d);
    let mut power = BigUint::one();
    let mut total = BigUint::zero();
    for &h in histogram {
        total += &power * h;
        power *= &d;
    }
    total
}

fn join_histogram(left: &[SetPartition], right: &[SetPartition], len: usize) -> Vec<u64> {
    let mut histogram = vec![0u64; len + 1];
    for a in left {
        for b in right {
            histogram[full_join_blocks(a.labels(), b.labels())] += 1;
        }
    }
    histogram
}

/// `Σ_{π,ρ ∈ NC(n)} d^{|π ∨ ρ|}` with the join taken in the full lattice.
pub fn join_power_sum_full(n: usize, d: u64) -> Result<BigUint, EnumerationError> {
    check_feasible(n, JOIN_SUM_LIMIT, false)?;
    let all: Vec<SetPartition> = enumerate_nc(n)?.collect();
    Ok(evaluate(&join_histogram(&all, &all, n), d))
}

/// `Σ_{σ ∈ NC(2n), θ ∈ NCP(2n)} d^{|σ ∨ θ|}` with the join taken in the
/// full lattice.
pub fn mixed_join_sum(n: usize, d: u64) -> Result<BigUint, EnumerationError> {
    check_feasible(n, MIXED_SUM_LIMIT, false)?;
    let all: Vec<SetPartition> = enumerate_nc(2 * n)?.collect();
    let pairings: Vec<SetPartition> = enumerate_ncp(2 * n)?.collect();
    Ok(evaluate(&join_histogram(&all, &pairings, 2 * n), d))
}

/// Colourings `[d]^len` in lexicographic order, 1-based.
fn colourings(len: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = d
        .checked_pow(len as u32)
        .expect("colouring count fits in usize");
    (0..total).map(move |mut code| {
        let mut c = vec![0; len];
        for slot in c.iter_mut().rev() {
            *slot = code % d + 1;
            code /= d;
        }
        c
    })
}

fn compatible(p: &SetPartition, colour: &[usize]) -> bool {
    p.labels()
        .iter()
        .zip(colour)
        .all(|(&l, &c)| colour[p.blocks()[l][0] - 1] == c)
}

/// [`join_power_sum_full`] expanded over colourings:
/// `Σ_{i∈[d]^n} (#{σ ∈ NC(n) : σ ≤ ker i})²`. Exponential in `n`.
pub fn join_power_sum_by_colourings(n: usize, d: u64) -> Result<BigUint, EnumerationError> {
    check_feasible(n, 6, false)?;
    let all: Vec<SetPartition> = enumerate_nc(n)?.collect();
    Ok(colourings(n, d as usize)
        .map(|c| {
            let k = all.iter().filter(|p| compatible(p, &c)).count() as u64;
            BigUint::from(k * k)
        })
        .sum())
}

/// [`mixed_join_sum`] expanded over colourings:
/// `Σ_{i∈[d]^{2n}} #{θ ∈ NCP(2n) : θ ≤ ker i} · #{σ ∈ NC(2n) : σ ≤ ker i}`.
pub fn mixed_join_sum_by_colourings(n: usize, d: u64) -> Result<BigUint, EnumerationError> {
    check_feasible(n, 3, false)?;
    let all: Vec<SetPartition> = enumerate_nc(2 * n)?.collect();
    let pairings: Vec<SetPartition> = enumerate_ncp(2 * n)?.collect();
    Ok(colourings(2 * n, d as usize)
        .map(|c| {
            let a = pairings.iter().filter(|p| compatible(p, &c)).count() as u64;
            let b = all.iter().filter(|p| compatible(p, &c)).count() as u64;
            BigUint::from(a * b)
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_block_count_matches_lattice_join() {
        let all: Vec<SetPartition> = enumerate_nc(5).unwrap().collect();
        for a in &all {
            for b in &all {
                assert_eq!(
                    full_join_blocks(a.labels(), b.labels()),
                    a.join_full(b).unwrap().block_count()
                );
            }
        }
    }

    #[test]
    fn colouring_expansions_agree() {
        for n in 1..=4 {
            for d in 1..=3 {
                assert_eq!(
                    join_power_sum_full(n, d).unwrap(),
                    join_power_sum_by_colourings(n, d).unwrap()
                );
            }
        }
        for d in 1..=3 {
            assert_eq!(
                mixed_join_sum(2, d).unwrap(),
                mixed_join_sum_by_colourings(2, d).unwrap()
            );
        }
        assert_eq!(
            colourings(2, 2).collect::<Vec<_>>(),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
    }

    #[test]
    fn small_values() {
        assert_eq!(count_b3(1).unwrap(), BigUint::from(1u32));
        assert_eq!(join_power_sum_full(1, 7).unwrap(), BigUint::from(7u32));
        assert_eq!(join_power_sum_full(4, 1).unwrap(), BigUint::from(196u32));
        // NC(2) × NCP(2): {1,2} with {1,2} and {1|2} with {1,2}, both joins full
        assert_eq!(mixed_join_sum(1, 3).unwrap(), BigUint::from(6u32));
        assert_eq!(mixed_join_sum(3, 1).unwrap(), BigUint::from(132u32 * 5));
        assert!(count_b3(9).is_err());
        assert!(mixed_join_sum(7, 2).is_err());
    }
}
