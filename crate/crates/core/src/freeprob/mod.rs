//! Moments, free cumulants and R-transforms in exact rational arithmetic.
//!
//! The moment-cumulant formula sums block products over `NC(n)`. Grouping
//! the sum by the block that contains `1` gives the functional equation
//! `M(z) = R(z(1 + M(z)))`, i.e.
//!
//! ```text
//! μ(X^n) = Σ_{s=1..n} κ_s · [z^{n-s}] (1 + M(z))^s
//! ```
//!
//! which [`cumulants_to_moments`] and [`moments_to_cumulants`] evaluate in
//! `O(N³)` rational operations. The literal sum over `NC(n)` is available as
//! [`moment_by_nc_sum`] for small `n`.

mod sequence;
mod series;
mod tpoly;

pub use sequence::{
    parse_rational, render_rational, CumulantSequence, Cumulants, MomentSequence, Moments, Sequence,
};
pub use series::RationalSeries;
pub use tpoly::TPolynomial;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::nc_lattice::{
    enumerate_nc, enumerate_nce, enumerate_ncp, IntervalSignature, PartitionError, SetPartition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeProbError {
    #[error("sequence must have at least one term")]
    EmptySequence,
    #[error("sequence flagged symmetric has a non-zero odd term")]
    NotSymmetric,
    #[error("invalid JSON sequence: {0}")]
    Json(String),
    #[error("inner series of a composition must have zero constant term")]
    CompositionConstantTerm,
    #[error("need {needed} terms but only {available} are available")]
    OrderTooSmall { needed: usize, available: usize },
    #[error("free convolution power must be positive")]
    NonPositivePower,
    #[error("histogram for n = {n} must have {n} entries, got {len}")]
    HistogramLength { n: usize, len: usize },
    #[error("dimension must be at least 1")]
    DimensionTooSmall,
    #[error("meander table is empty")]
    EmptyTable,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// `[z^j](1 + M(z))^s` for `s + j ≤ order`, filled as moments become known.
struct PowerTable {
    order: usize,
    moments: Vec<BigRational>,
    // rows[s][j]
    rows: Vec<Vec<BigRational>>,
}

impl PowerTable {
    fn new(order: usize) -> Self {
        let rows = (0..=order)
            .map(|s| {
                let mut row = vec![BigRational::zero(); order + 1 - s];
                row[0] = BigRational::one();
                row
            })
            .collect();
        PowerTable {
            order,
            moments: vec![BigRational::one()],
            rows,
        }
    }

    /// Appends moment `μ(X^j)` (`j = moments.len()`) and fills column `j`.
    fn push_moment(&mut self, m: BigRational) {
        self.moments.push(m);
        let j = self.moments.len() - 1;
        for s in 1..=self.order - j {
            let mut acc = BigRational::zero();
            for i in 0..=j {
                if self.moments[i].is_zero() {
                    continue;
                }
                let prev = &self.rows[s - 1];
                if let Some(p) = prev.get(j - i) {
                    if !p.is_zero() {
                        acc += &self.moments[i] * p;
                    }
                }
            }
            self.rows[s][j] = acc;
        }
    }

    /// `Σ_{s=1}^{limit} κ_s [z^{n-s}](1+M)^s`.
    fn block_sum(&self, cumulants: &[BigRational], n: usize, limit: usize) -> BigRational {
        let mut acc = BigRational::zero();
        for s in 1..=limit {
            let k = &cumulants[s - 1];
            if !k.is_zero() {
                acc += k * &self.rows[s][n - s];
            }
        }
        acc
    }
}

/// Moments from free cumulants: `μ(X^n) = Σ_{π∈NC(n)} Π_{V∈π} κ_{|V|}`.
pub fn cumulants_to_moments(k: &CumulantSequence) -> MomentSequence {
    let order = k.order();
    let mut table = PowerTable::new(order);
    let mut moments = Vec::with_capacity(order);
    for n in 1..=order {
        let m = if k.is_symmetric() && n % 2 == 1 {
            BigRational::zero()
        } else {
            table.block_sum(k.values(), n, n)
        };
        moments.push(m.clone());
        if n < order {
            table.push_moment(m);
        }
    }
    MomentSequence::with_symmetry(moments, k.is_symmetric())
        .expect("odd moments of a symmetric sequence vanish")
}

/// Free cumulants from moments, inverting [`cumulants_to_moments`] term by term.
pub fn moments_to_cumulants(m: &MomentSequence) -> CumulantSequence {
    let order = m.order();
    let mut table = PowerTable::new(order);
    let mut cumulants: Vec<BigRational> = Vec::with_capacity(order);
    for n in 1..=order {
        let k = if m.is_symmetric() && n % 2 == 1 {
            BigRational::zero()
        } else {
            m.term(n) - table.block_sum(&cumulants, n, n - 1)
        };
        cumulants.push(k);
        if n < order {
            table.push_moment(m.term(n));
        }
    }
    CumulantSequence::with_symmetry(cumulants, m.is_symmetric())
        .expect("odd cumulants of a symmetric sequence vanish")
}

/// Sum over `NC(n)` of `Π_{V∈π} weight(|V|)`, by explicit enumeration.
pub fn nc_block_product_sum<F>(n: usize, mut weight: F) -> Result<BigRational, FreeProbError>
where
    F: FnMut(usize) -> BigRational,
{
    let weights: Vec<BigRational> = (0..=n).map(&mut weight).collect();
    let mut total = BigRational::zero();
    for p in enumerate_nc(n)? {
        total += block_product(&p, &weights);
    }
    Ok(total)
}

fn block_product(p: &SetPartition, weights: &[BigRational]) -> BigRational {
    let mut acc = BigRational::one();
    for b in p.blocks() {
        let w = &weights[b.len()];
        if w.is_zero() {
            return BigRational::zero();
        }
        acc *= w;
    }
    acc
}

/// `μ(X^n)` by literal summation over `NC(n)`.
pub fn moment_by_nc_sum(k: &CumulantSequence, n: usize) -> Result<BigRational, FreeProbError> {
    require_order(k.order(), n)?;
    nc_block_product_sum(n, |s| {
        if s == 0 {
            BigRational::one()
        } else {
            k.term(s)
        }
    })
}

/// `R(z) = Σ κ_n z^n`, truncated at the sequence order.
pub fn r_transform(k: &CumulantSequence) -> RationalSeries {
    RationalSeries::from_tail(BigRational::zero(), k.values())
}

/// `M(z) = Σ μ(X^n) z^n`, truncated at the sequence order.
pub fn moment_series(m: &MomentSequence) -> RationalSeries {
    RationalSeries::from_tail(BigRational::zero(), m.values())
}

/// `R(z(1 + M(z))) - M(z)` through `z^order`, by series composition.
pub fn functional_equation_residual(
    m: &MomentSequence,
    k: &CumulantSequence,
    order: usize,
) -> Result<RationalSeries, FreeProbError> {
    require_order(m.order(), order)?;
    require_order(k.order(), order)?;
    let moments = moment_series(m).truncate(order);
    let r = r_transform(k).truncate(order);
    let shifted = &RationalSeries::one(order) + &moments;
    let w = &RationalSeries::variable(order) * &shifted;
    Ok(&r.compose(&w)? - &moments)
}

/// Whether `R_μ(z(1 + M_μ(z))) = M_μ(z)` holds through `z^order`.
pub fn verify_functional_equation(
    m: &MomentSequence,
    k: &CumulantSequence,
    order: usize,
) -> Result<bool, FreeProbError> {
    Ok(functional_equation_residual(m, k, order)?.is_zero())
}

/// Free cumulant `κ_n(ξη)` of a product of classically independent variables:
/// the sum over `(π, ρ) ∈ NC(n)²` with `π ∨ ρ = 1_n` of the block products.
pub fn product_cumulants(
    kx: &CumulantSequence,
    ky: &CumulantSequence,
    n: usize,
) -> Result<BigRational, FreeProbError> {
    require_order(kx.order(), n)?;
    require_order(ky.order(), n)?;
    let wx = block_weights(kx, n);
    let wy = block_weights(ky, n);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for p in enumerate_nc(n)? {
        let a = block_product(&p, &wx);
        let b = block_product(&p, &wy);
        let sig = IntervalSignature::new(&p);
        if !a.is_zero() {
            left.push((sig.clone(), a));
        }
        if !b.is_zero() {
            right.push((sig, b));
        }
    }
    let mut total = BigRational::zero();
    for (sa, a) in &left {
        for (sb, b) in &right {
            if !sa.shares_interval(sb) {
                total += a * b;
            }
        }
    }
    Ok(total)
}

fn block_weights(k: &CumulantSequence, n: usize) -> Vec<BigRational> {
    (0..=n)
        .map(|s| {
            if s == 0 {
                BigRational::one()
            } else {
                k.term(s)
            }
        })
        .collect()
}

/// `κ_n(X²)` for a symmetric `X`: `Σ_{π∈NC(n)} Π_{V∈π} κ_{2|V|}(X)`.
pub fn square_cumulants(k: &CumulantSequence, n: usize) -> Result<BigRational, FreeProbError> {
    require_order(k.order(), 2 * n)?;
    let even: Vec<BigRational> = (1..=n).map(|j| k.term(2 * j)).collect();
    let moments = cumulants_to_moments(&CumulantSequence::new(even)?);
    Ok(moments.term(n))
}

/// Cumulants of `μ^{⊞t}`: every cumulant scaled by `t > 0`.
pub fn boxplus_power(
    k: &CumulantSequence,
    t: &BigRational,
) -> Result<CumulantSequence, FreeProbError> {
    if !t.is_positive() {
        return Err(FreeProbError::NonPositivePower);
    }
    CumulantSequence::with_symmetry(k.values().iter().map(|v| v * t).collect(), k.is_symmetric())
}

/// Cumulants of `ν`: `κ_{2n} = m^{(1)}_n`, odd cumulants zero.
pub fn nu_cumulants(meanders: &[BigInt]) -> Result<CumulantSequence, FreeProbError> {
    if meanders.is_empty() {
        return Err(FreeProbError::EmptyTable);
    }
    let even: Vec<BigRational> = meanders
        .iter()
        .map(|m| BigRational::from_integer(m.clone()))
        .collect();
    CumulantSequence::from_even_terms(&even)
}

/// `ν_t(X^{2n}) = Σ_k m^{(k)}_n t^k` from the component histogram
/// (`hist[k-1]` pairs with `k` components).
pub fn nu_t_moment(n: usize, hist: &[BigInt]) -> Result<TPolynomial, FreeProbError> {
    if hist.len() != n {
        return Err(FreeProbError::HistogramLength { n, len: hist.len() });
    }
    let mut coeffs = vec![BigInt::zero()];
    coeffs.extend_from_slice(hist);
    Ok(TPolynomial::new(coeffs))
}

/// `Q_1, …, Q_P` with `κ_{2p}(ν_t) = Q_p(t)`, from histograms `hists[p-1]`.
///
/// Uses `Q_p = ν_t(X^{2p}) - Σ_{σ∈NCE(2p), σ≠1} Π_{W∈σ} Q_{|W|/2}`, which only
/// involves even-block partitions since `ν_t` is symmetric.
pub fn nu_t_cumulant_polynomials(hists: &[Vec<BigInt>]) -> Result<Vec<TPolynomial>, FreeProbError> {
    let mut q: Vec<TPolynomial> = Vec::with_capacity(hists.len());
    for (idx, hist) in hists.iter().enumerate() {
        let p = idx + 1;
        let moment = nu_t_moment(p, hist)?;
        let mut lower = TPolynomial::zero();
        for sigma in enumerate_nce(2 * p)? {
            if sigma.is_full() {
                continue;
            }
            let term = sigma
                .blocks()
                .iter()
                .fold(TPolynomial::one(), |acc, w| &acc * &q[w.len() / 2 - 1]);
            lower = &lower + &term;
        }
        q.push(&moment - &lower);
    }
    Ok(q)
}

/// `Σ_k m^{(k)}_n d^k`, the `2n`-th moment of the `d`-fold tensor model.
pub fn tensor_model_moment(n: usize, d: u64, hist: &[BigInt]) -> Result<BigInt, FreeProbError> {
    if d < 1 {
        return Err(FreeProbError::DimensionTooSmall);
    }
    Ok(nu_t_moment(n, hist)?.eval(&BigInt::from(d)))
}

/// `#{σ ∈ NCP(2n) : σ ≤ ker i}` for a colouring `i` of `{1..2n}`.
pub fn compatible_pairings(colouring: &[usize]) -> Result<u64, FreeProbError> {
    let mut count = 0;
    for sigma in enumerate_ncp(colouring.len())? {
        if sigma
            .blocks()
            .iter()
            .all(|b| colouring[b[0] - 1] == colouring[b[1] - 1])
        {
            count += 1;
        }
    }
    Ok(count)
}

fn require_order(available: usize, needed: usize) -> Result<(), FreeProbError> {
    if available < needed {
        Err(FreeProbError::OrderTooSmall { needed, available })
    } else {
        Ok(())
    }
}
