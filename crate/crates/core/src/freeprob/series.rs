use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::FreeProbError;

/// A power series `c_0 + c_1 z + … + c_N z^N` known modulo `z^{N+1}`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `z`, truncated at `order`.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// From coefficients `c_0, c_1, …`; the order is `coeffs.len() - 1`.
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        RationalSeries { coeffs }
    }

    /// `constant + Σ_{k≥1} tail[k-1] z^k`.
    pub fn from_tail(constant: BigRational, tail: &[BigRational]) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(constant);
        coeffs.extend_from_slice(tail);
        RationalSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        RationalSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `self(inner(z))` by Horner's rule; `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, FreeProbError> {
        if !inner.coeffs[0].is_zero() {
            return Err(FreeProbError::CompositionConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;

    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;

    fn neg(self) -> RationalSeries {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;

    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> RationalSeries {
        RationalSeries::from_coefficients(
            v.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    #[test]
    fn arithmetic_truncates_to_smaller_order() {
        let a = s(&[1, 1, 1, 1]);
        let b = s(&[1, -1]);
        assert_eq!(&a * &b, s(&[1, 0]));
        assert_eq!(&a + &b, s(&[2, 0]));
        assert_eq!((&a - &a).order(), 3);
    }

    #[test]
    fn geometric_series_inverse() {
        // (1 - z) * (1 + z + z^2 + ...) = 1
        let geo = s(&[1, 1, 1, 1, 1, 1]);
        let one_minus = s(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(&geo * &one_minus, RationalSeries::one(5));
    }

    #[test]
    fn composition() {
        // (1 + w)^2 with w = z + z^2  ->  1 + 2z + 3z^2 + 2z^3 + z^4
        let outer = s(&[1, 2, 1, 0, 0]);
        let inner = s(&[0, 1, 1, 0, 0]);
        assert_eq!(outer.compose(&inner).unwrap(), s(&[1, 2, 3, 2, 1]));
        assert_eq!(
            outer.compose(&s(&[1, 1])),
            Err(FreeProbError::CompositionConstantTerm)
        );
    }

    #[test]
    fn powers() {
        let one_plus = s(&[1, 1, 0, 0]);
        assert_eq!(one_plus.pow(3), s(&[1, 3, 3, 1]));
        assert_eq!(one_plus.pow(0), RationalSeries::one(3));
    }
}
