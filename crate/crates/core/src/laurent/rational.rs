//! Exact rationals for stability parameters and specialization points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::LaurentError;

/// Reduced fraction with positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` (optionally signed) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<ExactRational, LaurentError> {
    let bad = || LaurentError::BadRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(ExactRational::new(num, den))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn rational_string(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest integer `≤ r`.
pub fn floor_int(r: &ExactRational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Smallest integer `≥ r`.
pub fn ceil_int(r: &ExactRational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

pub(crate) fn is_negative(r: &ExactRational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("3/-6").unwrap(), frac(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert_eq!(rational_string(&frac(10, 4)), "5/2");
        assert_eq!(rational_string(&int(-7)), "-7");
    }

    #[test]
    fn floors() {
        assert_eq!(floor_int(&frac(-1, 2)), BigInt::from(-1));
        assert_eq!(ceil_int(&frac(-1, 2)), BigInt::from(0));
        assert_eq!(floor_int(&int(3)), BigInt::from(3));
        assert_eq!(ceil_int(&frac(7, 3)), BigInt::from(3));
    }
}
