//! Bundled meander numbers for `n = 1..24`, beyond the reach of enumeration.

use num_bigint::BigInt;
use thiserror::Error;

/// Contents of `data/meanders.txt`.
pub const MEANDERS_TXT: &str = include_str!("../data/meanders.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReferenceError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: expected n = {expected}")]
    OutOfSequence { line: usize, expected: usize },
    #[error("no entries")]
    Empty,
}

/// Parses `n value` lines (`#` starts a comment line); `n` must run 1, 2, ….
pub fn parse_meander_table(text: &str) -> Result<Vec<BigInt>, ReferenceError> {
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |reason: &str| ReferenceError::Syntax {
            line: idx + 1,
            reason: reason.to_string(),
        };
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(syntax("expected two fields"));
        };
        let n: usize = n.parse().map_err(|_| syntax("bad index"))?;
        if n != values.len() + 1 {
            return Err(ReferenceError::OutOfSequence {
                line: idx + 1,
                expected: values.len() + 1,
            });
        }
        values.push(v.parse().map_err(|_| syntax("bad value"))?);
    }
    if values.is_empty() {
        return Err(ReferenceError::Empty);
    }
    Ok(values)
}

/// `m^{(1)}_1, …, m^{(1)}_{24}` from the bundled table.
pub fn meander_numbers() -> Vec<BigInt> {
    parse_meander_table(MEANDERS_TXT).expect("bundled table is well formed")
}
