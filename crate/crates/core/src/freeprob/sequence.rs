use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::FreeProbError;

/// Marker for sequences of moments `μ(X^k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Moments;

/// Marker for sequences of free cumulants `κ_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cumulants;

/// An exact sequence indexed from 1: `values()[k-1]` is the `k`-th term.
///
/// The `symmetric` flag promises that every odd-indexed term vanishes; it is
/// checked on construction and enables the even-block fast paths.
#[derive(Clone, PartialEq, Eq)]
pub struct Sequence<K> {
    values: Vec<BigRational>,
    symmetric: bool,
    kind: PhantomData<K>,
}

pub type MomentSequence = Sequence<Moments>;
pub type CumulantSequence = Sequence<Cumulants>;

impl<K> Sequence<K> {
    /// Flags the sequence symmetric iff all odd terms are zero.
    pub fn new(values: Vec<BigRational>) -> Result<Self, FreeProbError> {
        if values.is_empty() {
            return Err(FreeProbError::EmptySequence);
        }
        let symmetric = odd_terms_vanish(&values);
        Ok(Sequence {
            values,
            symmetric,
            kind: PhantomData,
        })
    }

    /// Explicit flag; `true` is rejected when an odd term is non-zero.
    pub fn with_symmetry(values: Vec<BigRational>, symmetric: bool) -> Result<Self, FreeProbError> {
        if values.is_empty() {
            return Err(FreeProbError::EmptySequence);
        }
        if symmetric && !odd_terms_vanish(&values) {
            return Err(FreeProbError::NotSymmetric);
        }
        Ok(Sequence {
            values,
            symmetric,
            kind: PhantomData,
        })
    }

    pub fn from_integers<I, T>(values: I) -> Result<Self, FreeProbError>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    /// Symmetric sequence of order `2·even.len()` with the given even terms.
    pub fn from_even_terms(even: &[BigRational]) -> Result<Self, FreeProbError> {
        let mut values = Vec::with_capacity(2 * even.len());
        for v in even {
            values.push(BigRational::zero());
            values.push(v.clone());
        }
        Self::with_symmetry(values, true)
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Term `k` (1-based); index 0 is the normalisation `1`.
    pub fn term(&self, k: usize) -> BigRational {
        if k == 0 {
            BigRational::one()
        } else {
            self.values[k - 1].clone()
        }
    }

    /// The same sequence cut down to `order` terms.
    pub fn truncate(&self, order: usize) -> Self {
        let values = self.values[..order.min(self.order())].to_vec();
        Sequence {
            symmetric: self.symmetric,
            values,
            kind: PhantomData,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("plain struct serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, FreeProbError> {
        let wire: SequenceWire =
            serde_json::from_str(s).map_err(|e| FreeProbError::Json(e.to_string()))?;
        if wire.order != wire.values.len() {
            return Err(FreeProbError::Json(format!(
                "order {} does not match {} values",
                wire.order,
                wire.values.len()
            )));
        }
        let values = wire
            .values
            .iter()
            .map(|v| parse_rational(v))
            .collect::<Result<Vec<_>, _>>()?;
        Self::with_symmetry(values, wire.symmetric)
    }

    fn to_wire(&self) -> SequenceWire {
        SequenceWire {
            order: self.order(),
            symmetric: self.symmetric,
            values: self.values.iter().map(render_rational).collect(),
        }
    }
}

impl<K> fmt::Debug for Sequence<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.values.iter().map(render_rational).collect();
        f.debug_struct("Sequence")
            .field("symmetric", &self.symmetric)
            .field("values", &values)
            .finish()
    }
}

fn odd_terms_vanish(values: &[BigRational]) -> bool {
    values.iter().step_by(2).all(Zero::is_zero)
}

#[derive(Serialize, Deserialize)]
struct SequenceWire {
    order: usize,
    symmetric: bool,
    values: Vec<String>,
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, FreeProbError> {
    let bad = || FreeProbError::Json(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s.trim()).map_err(|_| bad())?,
        )),
    }
}
