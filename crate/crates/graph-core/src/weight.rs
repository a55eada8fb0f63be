use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact nonnegative integer edge weight.
///
/// Serialized as a decimal string so that values beyond 2^64 survive JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigUint);

impl Weight {
    pub fn zero() -> Self {
        Weight(BigUint::zero())
    }

    pub fn one() -> Self {
        Weight(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn from_big(v: BigUint) -> Self {
        Weight(v)
    }

    pub fn as_big(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn pow(&self, e: u32) -> Self {
        Weight(self.0.pow(e))
    }

    pub fn checked_sub(&self, other: &Weight) -> Option<Weight> {
        if self.0 >= other.0 {
            Some(Weight(&self.0 - &other.0))
        } else {
            None
        }
    }

    /// Exact quotient, or `None` when `d` does not divide `self` (or is zero).
    pub fn exact_div(&self, d: &Weight) -> Option<Weight> {
        if d.0.is_zero() {
            return None;
        }
        let q = &self.0 / &d.0;
        if &q * &d.0 == self.0 {
            Some(Weight(q))
        } else {
            None
        }
    }

    pub fn is_multiple_of(&self, d: &Weight) -> bool {
        self.exact_div(d).is_some()
    }
}

impl From<u64> for Weight {
    fn from(v: u64) -> Self {
        Weight(BigUint::from(v))
    }
}

impl From<u128> for Weight {
    fn from(v: u128) -> Self {
        Weight(BigUint::from(v))
    }
}

impl From<u32> for Weight {
    fn from(v: u32) -> Self {
        Weight(BigUint::from(v))
    }
}

impl From<usize> for Weight {
    fn from(v: usize) -> Self {
        Weight(BigUint::from(v))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl<'a> Add<&'a Weight> for Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0 + &rhs.0)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl Mul for Weight {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for &Weight {
    type Output = Weight;
    fn mul(self, rhs: u64) -> Weight {
        Weight(&self.0 * BigUint::from(rhs))
    }
}

impl Mul<u64> for Weight {
    type Output = Weight;
    fn mul(self, rhs: u64) -> Weight {
        Weight(self.0 * BigUint::from(rhs))
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        let mut acc = Weight::zero();
        for w in iter {
            acc += w;
        }
        acc
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid weight literal {0:?}: expected a nonnegative decimal integer")]
pub struct ParseWeightError(pub String);

impl FromStr for Weight {
    type Err = ParseWeightError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseWeightError(s.to_string()));
        }
        BigUint::from_str(t)
            .map(Weight)
            .map_err(|_| ParseWeightError(s.to_string()))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Weight::from_str(&s).map_err(serde::de::Error::custom)
    }
}
