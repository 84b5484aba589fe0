use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::{
    ceil_int, floor_int, parse_rational, rational_string, ExactRational, LaurentError,
};

/// Which side of a wall a stability value refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Exact,
    /// Infinitesimally above the value.
    Plus,
    /// Infinitesimally below the value.
    Minus,
}

/// A stability parameter `σ` (or `τ`), optionally pushed off a wall.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityValue {
    pub value: ExactRational,
    pub side: Side,
}

impl StabilityValue {
    pub fn exact(value: ExactRational) -> Self {
        StabilityValue {
            value,
            side: Side::Exact,
        }
    }

    pub fn plus(value: ExactRational) -> Self {
        StabilityValue {
            value,
            side: Side::Plus,
        }
    }

    pub fn minus(value: ExactRational) -> Self {
        StabilityValue {
            value,
            side: Side::Minus,
        }
    }

    /// True if the parameter lies strictly above `bound`.
    pub fn is_above(&self, bound: &ExactRational) -> bool {
        self.value > *bound || (self.value == *bound && self.side == Side::Plus)
    }

    /// True if the parameter lies strictly below `bound`.
    pub fn is_below(&self, bound: &ExactRational) -> bool {
        self.value < *bound || (self.value == *bound && self.side == Side::Minus)
    }

    /// `⌊(value + shift) / 3⌋` evaluated at the parameter, limits taken from
    /// the tagged side.
    pub(crate) fn floor_third(&self, shift: i64) -> BigInt {
        let x = (&self.value + ExactRational::from_integer(shift.into()))
            / ExactRational::from_integer(3.into());
        side_floor(&x, self.side)
    }

    /// `⌊value⌋` with the side resolved.
    pub(crate) fn floor(&self) -> BigInt {
        side_floor(&self.value, self.side)
    }
}

pub(crate) fn side_floor(x: &ExactRational, side: Side) -> BigInt {
    match side {
        Side::Exact | Side::Plus => floor_int(x),
        Side::Minus => ceil_int(x) - BigInt::one(),
    }
}

impl FromStr for StabilityValue {
    type Err = LaurentError;

    /// Accepts `p`, `p/q`, and either with a trailing `+` or `-`.
    fn from_str(s: &str) -> Result<Self, LaurentError> {
        let s = s.trim();
        let (body, side) = if let Some(rest) = s.strip_suffix('+') {
            (rest, Side::Plus)
        } else if let Some(rest) = s.strip_suffix('-').filter(|r| !r.is_empty()) {
            (rest, Side::Minus)
        } else {
            (s, Side::Exact)
        };
        Ok(StabilityValue {
            value: parse_rational(body)?,
            side,
        })
    }
}

impl fmt::Display for StabilityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = match self.side {
            Side::Exact => "",
            Side::Plus => "+",
            Side::Minus => "-",
        };
        write!(f, "{}{}", rational_string(&self.value), suffix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{frac, int};

    #[test]
    fn parsing() {
        let s: StabilityValue = "3/4".parse().unwrap();
        assert_eq!(s, StabilityValue::exact(frac(3, 4)));
        let s: StabilityValue = "7+".parse().unwrap();
        assert_eq!(s, StabilityValue::plus(int(7)));
        let s: StabilityValue = "-5/2-".parse().unwrap();
        assert_eq!(s, StabilityValue::minus(frac(-5, 2)));
        assert!("x+".parse::<StabilityValue>().is_err());
        assert_eq!(s.to_string(), "-5/2-");
    }

    #[test]
    fn side_resolution() {
        assert_eq!(StabilityValue::plus(int(2)).floor(), BigInt::from(2));
        assert_eq!(StabilityValue::minus(int(2)).floor(), BigInt::from(1));
        assert_eq!(StabilityValue::minus(frac(5, 2)).floor(), BigInt::from(2));
        assert!(StabilityValue::plus(int(1)).is_above(&int(1)));
        assert!(!StabilityValue::exact(int(1)).is_above(&int(1)));
        assert!(StabilityValue::minus(int(1)).is_below(&int(1)));
    }
}
