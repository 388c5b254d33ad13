use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::AnalysisError;
use crate::freeprob::MomentSequence;

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> Result<BigInt, AnalysisError> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(AnalysisError::NotSquare);
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// `det [μ(X^{2i+2j})]_{0≤i,j<size}`, with `μ(X⁰) = 1`.
pub fn hankel_determinant(moments: &MomentSequence, size: usize) -> Result<BigInt, AnalysisError> {
    if size == 0 {
        return Ok(BigInt::one());
    }
    let needed = 4 * (size - 1);
    if moments.order() < needed {
        return Err(AnalysisError::InsufficientMoments {
            needed,
            available: moments.order(),
        });
    }
    let entry = |k: usize| -> Result<BigInt, AnalysisError> {
        let v = moments.term(k);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(AnalysisError::NonIntegerMoment(k))
        }
    };
    let matrix = (0..size)
        .map(|i| (0..size).map(|j| entry(2 * i + 2 * j)).collect())
        .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
    bareiss_determinant(&matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(bareiss_determinant(&m(&[&[5]])).unwrap(), 5.into());
        assert_eq!(
            bareiss_determinant(&m(&[&[1, 2], &[3, 4]])).unwrap(),
            (-2).into()
        );
        // zero leading pivot forces a row swap
        assert_eq!(
            bareiss_determinant(&m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])).unwrap(),
            (-2).into()
        );
        assert_eq!(
            bareiss_determinant(&m(&[&[1, 2], &[2, 4]])).unwrap(),
            0.into()
        );
        assert_eq!(
            bareiss_determinant(&m(&[&[1, 2], &[3]])),
            Err(AnalysisError::NotSquare)
        );
    }

    #[test]
    fn catalan_hankel_is_one() {
        // semicircle moments: Hankel determinants of Catalan numbers are 1
        let cat = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430];
        let mut values = Vec::new();
        for c in &cat[1..] {
            values.push(0);
            values.push(*c);
        }
        let seq = MomentSequence::from_integers(values).unwrap();
        for size in 1..=5 {
            assert_eq!(hankel_determinant(&seq, size).unwrap(), BigInt::one());
        }
        assert!(hankel_determinant(&seq, 6).is_err());
    }
}
