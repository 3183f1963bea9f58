//! Exact rational scores.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational kept in lowest terms with a positive denominator.
///
/// Renders as `num/den` always, including integers (`2/1`) and zero (`0/1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScore(BigRational);

impl ExactScore {
    pub fn zero() -> Self {
        ExactScore(BigRational::zero())
    }

    pub fn from_integer(v: i64) -> Self {
        ExactScore(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num / den`; panics when `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        ExactScore(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_biguints(num: &BigUint, den: &BigUint) -> Self {
        ExactScore(BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone())))
    }

    /// `1 / v`, with the reciprocal of zero defined as zero.
    pub fn reciprocal_or_zero(v: u64) -> Self {
        if v == 0 {
            Self::zero()
        } else {
            ExactScore(BigRational::new(BigInt::from(1), BigInt::from(v)))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for ExactScore {
    fn from(r: BigRational) -> Self {
        ExactScore(r)
    }
}

impl Add for ExactScore {
    type Output = ExactScore;
    fn add(self, rhs: ExactScore) -> ExactScore {
        ExactScore(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactScore> for &'a ExactScore {
    type Output = ExactScore;
    fn add(self, rhs: &ExactScore) -> ExactScore {
        ExactScore(&self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactScore> for ExactScore {
    fn add_assign(&mut self, rhs: &ExactScore) {
        self.0 += &rhs.0;
    }
}

impl Sub for ExactScore {
    type Output = ExactScore;
    fn sub(self, rhs: ExactScore) -> ExactScore {
        ExactScore(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a ExactScore> for &'a ExactScore {
    type Output = ExactScore;
    fn sub(self, rhs: &ExactScore) -> ExactScore {
        ExactScore(&self.0 - &rhs.0)
    }
}

impl fmt::Display for ExactScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational '{0}', expected num/den")]
pub struct ParseScoreError(String);

impl FromStr for ExactScore {
    type Err = ParseScoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScoreError(s.to_string());
        let (num, den) = s.split_once('/').ok_or_else(err)?;
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(ExactScore(BigRational::new(num, den)))
    }
}

impl Serialize for ExactScore {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactScore {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
