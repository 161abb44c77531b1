//! Exact rational membership levels in `[0, 1]`.
//!
//! Membership levels are compared exactly; floating point is never used. The
//! denominators that occur in practice are tiny (block lengths), so `u64`
//! components with `u128` cross-multiplication are ample.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Error raised by [`Rational`] construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("{numer}/{denom} lies outside [0, 1]")]
    OutOfRange { numer: u64, denom: u64 },
    #[error("malformed rational `{0}`: expected `a/b` or an integer 0 or 1")]
    Malformed(String),
}

/// An exact rational in `[0, 1]`, stored in lowest terms.
///
/// Equality and ordering are exact. `Rational` is `Copy` and hashable, so it
/// can key tables of membership levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: u64,
    denom: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// Builds `numer/denom` reduced to lowest terms.
    ///
    /// Fails if `denom == 0` or the value lies outside `[0, 1]`.
    pub fn new(numer: u64, denom: u64) -> Result<Self, RationalError> {
        if denom == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        if numer > denom {
            return Err(RationalError::OutOfRange { numer, denom });
        }
        if numer == 0 {
            return Ok(Rational { numer: 0, denom: 1 });
        }
        let g = gcd(numer, denom);
        Ok(Rational {
            numer: numer / g,
            denom: denom / g,
        })
    }

    pub fn zero() -> Self {
        Rational { numer: 0, denom: 1 }
    }

    pub fn one() -> Self {
        Rational { numer: 1, denom: 1 }
    }

    pub fn half() -> Self {
        Rational { numer: 1, denom: 2 }
    }

    pub fn numer(&self) -> u64 {
        self.numer
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn is_one(&self) -> bool {
        self.numer == self.denom
    }

    /// Exact complement `1 - self`.
    pub fn complement(&self) -> Self {
        Rational::new(self.denom - self.numer, self.denom).expect("complement stays in [0, 1]")
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numer as u128 * other.denom as u128;
        let rhs = other.numer as u128 * self.denom as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numer == 0 {
            write!(f, "0")
        } else if self.numer == self.denom {
            write!(f, "1")
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    /// Parses `a/b`, or the integers `0` and `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let malformed = || RationalError::Malformed(s.to_string());
        match s.split_once('/') {
            Some((a, b)) => {
                let numer: u64 = a.trim().parse().map_err(|_| malformed())?;
                let denom: u64 = b.trim().parse().map_err(|_| malformed())?;
                Rational::new(numer, denom)
            }
            None => {
                let n: u64 = s.parse().map_err(|_| malformed())?;
                if n > 1 {
                    return Err(RationalError::OutOfRange { numer: n, denom: 1 });
                }
                Rational::new(n, 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(6, 8).unwrap();
        assert_eq!((r.numer(), r.denom()), (3, 4));
        assert_eq!(r, Rational::new(3, 4).unwrap());
    }

    #[test]
    fn rejects_out_of_range_and_zero_denominator() {
        assert_eq!(Rational::new(3, 2), Err(RationalError::OutOfRange { numer: 3, denom: 2 }));
        assert_eq!(Rational::new(1, 0), Err(RationalError::ZeroDenominator));
    }

    #[test]
    fn exact_ordering() {
        let a = Rational::new(1, 3).unwrap();
        let b = Rational::new(1, 2).unwrap();
        let c = Rational::new(2, 3).unwrap();
        assert!(a < b && b < c);
        assert!(Rational::zero() < a && c < Rational::one());
    }

    #[test]
    fn complement_is_exact() {
        assert_eq!(Rational::new(3, 8).unwrap().complement(), Rational::new(5, 8).unwrap());
        assert_eq!(Rational::one().complement(), Rational::zero());
        assert_eq!(Rational::half().complement(), Rational::half());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "1", "1/2", "7/8", "3/4", "26/32"] {
            let r: Rational = s.parse().unwrap();
            let back: Rational = r.to_string().parse().unwrap();
            assert_eq!(r, back);
        }
        assert_eq!("26/32".parse::<Rational>().unwrap().to_string(), "13/16");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
        assert!("5/4".parse::<Rational>().is_err());
    }
}
