use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::AnalysisError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Nearest, ties away from zero.
    HalfUp,
    Floor,
    Ceiling,
    /// Truncate to one extra digit, then round half down: the result rounds
    /// up only when the first dropped digit is 6 or more. This is the rule
    /// behind the published ratio column of the `ν` moment table, where
    /// e.g. `0.3192658…` appears as `0.31926`.
    GuardDigitHalfDown,
}

/// Fixed-point rendering with exactly `places` digits after the point,
/// rounding half up (ties away from zero).
pub fn render_decimal(x: &BigRational, places: usize) -> String {
    render_decimal_directed(x, places, Rounding::HalfUp)
}

pub fn render_decimal_directed(x: &BigRational, places: usize, mode: Rounding) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = x * BigRational::from_integer(scale.clone());
    let units = match mode {
        Rounding::Floor => scaled.floor().to_integer(),
        Rounding::Ceiling => scaled.ceil().to_integer(),
        Rounding::GuardDigitHalfDown => {
            let ten = BigInt::from(10u32);
            let fine = (scaled.abs() * BigRational::from_integer(ten.clone()))
                .floor()
                .to_integer();
            let (base, guard) = fine.div_rem(&ten);
            let mag = if guard >= BigInt::from(6u32) {
                base + 1u32
            } else {
                base
            };
            if scaled.is_negative() {
                -mag
            } else {
                mag
            }
        }
        Rounding::HalfUp => {
            let half = BigRational::new(1.into(), 2.into());
            if scaled.is_negative() {
                -(-scaled + half).floor().to_integer()
            } else {
                (scaled + half).floor().to_integer()
            }
        }
    };
    let negative = units.is_negative();
    let (int, frac) = units.abs().div_rem(&scale);
    let sign = if negative && !(int.is_zero() && frac.is_zero()) {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>places$}")
    }
}

/// Parses `[-]digits[.digits]` into an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRational, AnalysisError> {
    let bad = || AnalysisError::Decimal(s.to_string());
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let value = BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32));
    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn half_up() {
        assert_eq!(render_decimal(&q(192, 196), 5), "0.97959");
        assert_eq!(render_decimal(&q(1, 8), 2), "0.13");
        assert_eq!(render_decimal(&q(-1, 8), 2), "-0.13");
        assert_eq!(render_decimal(&q(1, 1), 5), "1.00000");
        assert_eq!(render_decimal(&q(7, 2), 0), "4");
        assert_eq!(render_decimal(&q(-1, 1000), 2), "0.00");
    }

    #[test]
    fn directed() {
        assert_eq!(
            render_decimal_directed(&q(2, 3), 3, Rounding::Floor),
            "0.666"
        );
        assert_eq!(
            render_decimal_directed(&q(2, 3), 3, Rounding::Ceiling),
            "0.667"
        );
        assert_eq!(
            render_decimal_directed(&q(-2, 3), 3, Rounding::Floor),
            "-0.667"
        );
    }

    #[test]
    fn guard_digit() {
        let g = |a, b| render_decimal_directed(&q(a, b), 2, Rounding::GuardDigitHalfDown);
        assert_eq!(g(1259, 10000), "0.12");
        assert_eq!(g(1260, 10000), "0.13");
        assert_eq!(g(1255, 10000), "0.12");
        assert_eq!(g(-1261, 10000), "-0.13");
        assert_eq!(g(1, 1), "1.00");
    }

    #[test]
    fn parse_render_idempotent() {
        for s in ["0.97959", "12.5", "-3.14159", "7", "0.00001"] {
            let x = parse_decimal(s).unwrap();
            let places = s.split_once('.').map_or(0, |(_, f)| f.len());
            assert_eq!(render_decimal(&x, places), s);
        }
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal(".5").is_err());
        assert!(parse_decimal("").is_err());
    }
}
