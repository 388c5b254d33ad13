//! Rigorous enclosures for `r₁ = r_o (1 + M_μ(r_o))`, where
//! `M_μ(z) = Σ_{n≥1} μ(X^n) zⁿ`.
//!
//! The series is summed exactly up to the truncation order of the moment
//! sequence; the remainder is bounded from the growth condition
//! `μ(X^n) ≤ c · r_o^{-n} · n^{-β}`, which gives
//! `Σ_{n>N} μ(X^n) r_oⁿ ≤ c Σ_{n>N} n^{-β} ≤ c N^{1-β} / (β-1)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::decimal::{parse_decimal, render_decimal_directed, Rounding};
use super::AnalysisError;
use crate::freeprob::MomentSequence;

/// `π` truncated to 50 decimal places; the true value lies in
/// `[PI_50, PI_50 + 10⁻⁵⁰]`.
pub const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";

/// Truncation order used by [`c_irr_constant`].
pub const RADIUS_TRUNCATION: usize = 2000;

/// Closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Endpoints rounded outward to `places` decimals.
    pub fn render(&self, places: usize) -> String {
        format!(
            "[{}, {}]",
            render_decimal_directed(&self.lo, places, Rounding::Floor),
            render_decimal_directed(&self.hi, places, Rounding::Ceiling)
        )
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(12))
    }
}

/// Parameters of the growth bound `μ(X^n) ≤ c · r_o^{-n} · n^{-β}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailBound {
    pub c: BigRational,
    pub beta: u32,
}

impl TailBound {
    /// Upper bound for `c Σ_{n>N} n^{-β}`.
    fn remainder(&self, truncation: usize) -> Result<BigRational, AnalysisError> {
        if self.beta <= 1 {
            return Err(AnalysisError::DivergentTail(self.beta));
        }
        let b1 = BigRational::from_integer(BigInt::from(self.beta - 1));
        if truncation == 0 {
            // 1 + ∫_1^∞ x^{-β} dx
            return Ok(&self.c * (BigRational::one() + b1.recip()));
        }
        let n_pow = BigRational::from_integer(BigInt::from(truncation).pow(self.beta - 1));
        Ok(&self.c / (n_pow * b1))
    }
}

/// Encloses `r_o (1 + Σ_{n≥1} μ(X^n) r_oⁿ)` using every available moment
/// and the tail bound beyond them.
pub fn radius_estimate(
    moments: &MomentSequence,
    r_o: &BigRational,
    tail: &TailBound,
) -> Result<RationalInterval, AnalysisError> {
    if !r_o.is_positive() {
        return Err(AnalysisError::NonPositiveRadius);
    }
    let remainder = tail.remainder(moments.order())?;
    let mut partial = BigRational::zero();
    let mut power = BigRational::one();
    for (i, m) in moments.values().iter().enumerate() {
        power *= r_o;
        if m.is_negative() {
            return Err(AnalysisError::NegativeMoment(i + 1));
        }
        if !m.is_zero() {
            partial += m * &power;
        }
    }
    let lo = r_o * (BigRational::one() + &partial);
    let hi = r_o * (BigRational::one() + partial + remainder);
    Ok(RationalInterval::new(lo, hi))
}

/// Moments `μ(X^{2k}) = C_k²`, odd moments zero, up to `order`.
pub fn catalan_squared_moments(order: usize) -> MomentSequence {
    let mut values = Vec::with_capacity(order);
    let mut c = BigInt::one();
    for n in 1..=order {
        if n % 2 == 1 {
            values.push(BigInt::zero());
        } else {
            let k = n / 2;
            // C_k = C_{k-1} · 2(2k-1) / (k+1)
            c = c * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k + 1);
            values.push(&c * &c);
        }
    }
    MomentSequence::from_integers(values).expect("non-empty unless order is zero")
}

/// `[1/hi², 1/lo²]` for a positive radius interval.
pub fn c_irr_from_radius(r: &RationalInterval) -> RationalInterval {
    let sq = |x: &BigRational| (x * x).recip();
    RationalInterval::new(sq(r.hi()), sq(r.lo()))
}

/// Enclosure of `(1/r₁)²` for the squared-Catalan moments at `r_o = 1/4`,
/// truncated at [`RADIUS_TRUNCATION`] with tail constants `c = 3`, `β = 3`.
///
/// `C_k ≤ 4^k / (√π k^{3/2})` gives `C_k² 4^{-2k} ≤ (8/π)(2k)^{-3}`, and
/// `8/π < 3`.
pub fn c_irr_constant() -> RationalInterval {
    let moments = catalan_squared_moments(RADIUS_TRUNCATION);
    let tail = TailBound {
        c: BigRational::from_integer(3.into()),
        beta: 3,
    };
    let r = radius_estimate(&moments, &BigRational::new(1.into(), 4.into()), &tail)
        .expect("fixed parameters are valid");
    c_irr_from_radius(&r)
}

/// Interval of width `10⁻⁵⁰` containing `π`.
pub fn pi_interval() -> RationalInterval {
    let lo = parse_decimal(PI_50).expect("constant parses");
    let ulp = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(50));
    RationalInterval::new(lo.clone(), lo + ulp)
}

/// Enclosure of `(4 − π)/π`, the radius attained by the squared-Catalan
/// moments.
pub fn irreducible_radius_target() -> RationalInterval {
    let pi = pi_interval();
    let four = BigRational::from_integer(4.into());
    let f = |p: &BigRational| &four / p - BigRational::one();
    RationalInterval::new(f(pi.hi()), f(pi.lo()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn zero_moments_give_r_o() {
        let zero = MomentSequence::from_integers(vec![0; 10]).unwrap();
        let tail = TailBound {
            c: q(0, 1),
            beta: 2,
        };
        let r = radius_estimate(&zero, &q(1, 3), &tail).unwrap();
        assert_eq!(r, RationalInterval::point(q(1, 3)));
        assert_eq!(c_irr_from_radius(&r), RationalInterval::point(q(9, 1)));
    }

    #[test]
    fn parameter_errors() {
        let m = catalan_squared_moments(4);
        let bad = TailBound {
            c: q(1, 1),
            beta: 1,
        };
        assert_eq!(
            radius_estimate(&m, &q(1, 4), &bad),
            Err(AnalysisError::DivergentTail(1))
        );
        let ok = TailBound {
            c: q(1, 1),
            beta: 2,
        };
        assert_eq!(
            radius_estimate(&m, &q(0, 1), &ok),
            Err(AnalysisError::NonPositiveRadius)
        );
        let neg = MomentSequence::from_integers(vec![1, -1]).unwrap();
        assert_eq!(
            radius_estimate(&neg, &q(1, 4), &ok),
            Err(AnalysisError::NegativeMoment(2))
        );
    }

    #[test]
    fn squared_catalan_prefix() {
        let m = catalan_squared_moments(8);
        let v: Vec<BigInt> = m.values().iter().map(|x| x.to_integer()).collect();
        let want: Vec<BigInt> = [0, 1, 0, 4, 0, 25, 0, 196]
            .iter()
            .map(|&x| x.into())
            .collect();
        assert_eq!(v, want);
        assert!(m.is_symmetric());
    }

    #[test]
    fn width_shrinks_with_truncation() {
        let tail = TailBound {
            c: q(3, 1),
            beta: 3,
        };
        let mut last: Option<BigRational> = None;
        for order in [10, 50, 200, 400] {
            let r = radius_estimate(&catalan_squared_moments(order), &q(1, 4), &tail).unwrap();
            assert!(
                r.contains_interval(&irreducible_radius_target()),
                "order {order}"
            );
            if let Some(prev) = &last {
                assert!(r.width() < *prev);
            }
            last = Some(r.width());
        }
    }

    #[test]
    fn pi_enclosure() {
        let p = pi_interval();
        assert!(!p.contains(&q(314159265358979, 100000000000000)));
        assert!(p.lo() > &q(314159, 100000) && p.hi() < &q(314160, 100000));
        assert_eq!(p.render(5), "[3.14159, 3.14160]");
    }
}
