//! Arbitrary-precision rationals and their `p/q` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational `{0}`")]
pub struct ParseRationalError(pub String);

/// Parses `"p"` or `"p/q"` with a nonzero denominator.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = BigInt::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `p/q` form; integers print without a denominator.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), q_frac(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), q(-3));
        assert_eq!(parse_rational(" 6/-4 ").unwrap(), q_frac(-3, 2));
        assert_eq!(format_rational(&q_frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&q(0)), "0");
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }
}
