//! Brute-force oracles shared by the integration tests. They deliberately
//! avoid the lattice and enumeration fast paths of the library.
#![allow(dead_code)]

use meandric::nc_lattice::{enumerate_nc, enumerate_ncp, SetPartition};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// All tuples in `[d]^len`, lexicographically.
pub fn tuples(len: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=d).map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// Every block of `p` is monochromatic under `colour`.
pub fn monochromatic(p: &SetPartition, colour: &[usize]) -> bool {
    p.blocks()
        .iter()
        .all(|b| b.iter().all(|&e| colour[e - 1] == colour[b[0] - 1]))
}

/// `Σ_{i∈[d]^n} (#{σ ∈ NC(n) : σ ≤ ker i})²`.
pub fn join_power_oracle(n: usize, d: usize) -> BigUint {
    let all: Vec<SetPartition> = enumerate_nc(n).unwrap().collect();
    tuples(n, d)
        .iter()
        .map(|i| {
            let c = all.iter().filter(|s| monochromatic(s, i)).count() as u64;
            BigUint::from(c * c)
        })
        .sum()
}

/// `Σ_{i∈[d]^{2n}} #{θ ∈ NCP(2n) : θ ≤ ker i} · #{σ ∈ NC(2n) : σ ≤ ker i}`.
pub fn mixed_join_oracle(n: usize, d: usize) -> BigUint {
    let all: Vec<SetPartition> = enumerate_nc(2 * n).unwrap().collect();
    let pairings: Vec<SetPartition> = enumerate_ncp(2 * n).unwrap().collect();
    tuples(2 * n, d)
        .iter()
        .map(|i| {
            let a = pairings.iter().filter(|s| monochromatic(s, i)).count() as u64;
            let b = all.iter().filter(|s| monochromatic(s, i)).count() as u64;
            BigUint::from(a * b)
        })
        .sum()
}

/// Literal triple loop for `#{π₁∧π₂ = 0, π₂∨π₃ = 1}` using the generic
/// lattice operations.
pub fn b3_triple_loop(n: usize) -> u64 {
    let all: Vec<SetPartition> = enumerate_nc(n).unwrap().collect();
    let mut count = 0;
    for p2 in &all {
        for p1 in &all {
            if !p1.meet(p2).unwrap().is_singletons() {
                continue;
            }
            for p3 in &all {
                if p2.join_nc(p3).unwrap().is_full() {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::from(0);
    for j in 0..m.len() {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut StdRng) -> BigRational {
    BigRational::new(
        rng.gen_range(-20i64..=20).into(),
        rng.gen_range(1i64..=9).into(),
    )
}

/// Table 1 moment column, `ν(X^{2n})` for `n = 1..24`.
pub const NU_MOMENTS: [&str; 24] = [
    "1",
    "4",
    "25",
    "192",
    "1664",
    "15626",
    "155439",
    "1615208",
    "17371372",
    "192116692",
    "2174556080",
    "25101780538",
    "294692569630",
    "3510877767198",
    "42371895120585",
    "517281396522616",
    "6380271752428956",
    "79428025047086276",
    "997137221492794404",
    "12614196796924143524",
    "160696941192856063186",
    "2060412248079723985072",
    "26575640310738797507800",
    "344671815256362419882958",
];

/// Table 1 ratio column.
pub const NU_RATIOS: [&str; 24] = [
    "1.00000", "1.00000", "1.00000", "0.97959", "0.94331", "0.89681", "0.84459", "0.78987",
    "0.73486", "0.68101", "0.62925", "0.58013", "0.53396", "0.49085", "0.45081", "0.41377",
    "0.37960", "0.34816", "0.31926", "0.29276", "0.26845", "0.24619", "0.22581", "0.20715",
];

/// Table 1 cumulant column for the enumerable range.
pub const MEANDERS: [u64; 8] = [1, 2, 8, 42, 262, 1828, 13820, 110954];
