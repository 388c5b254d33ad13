use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Integer polynomial in a formal parameter `t`, dense ascending coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TPolynomial {
    coeffs: Vec<BigInt>,
}

impl TPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        TPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPolynomial::new(vec![BigInt::one()])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        TPolynomial::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value of the derivative at `t = 0`.
    pub fn derivative_at_zero(&self) -> BigInt {
        self.coeff(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * t + BigRational::from_integer(c.clone())
            })
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;

    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;

    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;

    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return TPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPolynomial::new(out)
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}t")?,
                _ => write!(f, "{c}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> TPolynomial {
        TPolynomial::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn ring_operations() {
        let a = poly(&[0, 1, 2]);
        let b = poly(&[1, -1]);
        assert_eq!(&a * &b, poly(&[0, 1, 1, -2]));
        assert_eq!(&a + &b, poly(&[1, 0, 2]));
        assert_eq!(&a - &a, TPolynomial::zero());
        assert_eq!((&a - &a).degree(), None);
    }

    #[test]
    fn evaluation() {
        let a = poly(&[0, 42, 150]);
        assert_eq!(a.eval(&BigInt::from(1)), BigInt::from(192));
        assert_eq!(a.derivative_at_zero(), BigInt::from(42));
        assert_eq!(
            a.eval_rational(&BigRational::new(1.into(), 2.into())),
            BigRational::new(117.into(), 2.into())
        );
        assert_eq!(a.to_string(), "42t + 150t^2");
    }
}
