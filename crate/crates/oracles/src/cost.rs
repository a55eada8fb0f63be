use num_bigint::BigUint;

use graph_core::Weight;

/// Additive cost with an absorbing infinity.
pub trait Cost: Clone + Ord + Send + Sync {
    fn zero() -> Self;
    fn infinity() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn is_inf(&self) -> bool;
    fn from_weight(w: &Weight) -> Self;
    fn to_weight(&self) -> Option<Weight>;
}

impl Cost for u128 {
    #[inline]
    fn zero() -> Self {
        0
    }
    #[inline]
    fn infinity() -> Self {
        u128::MAX
    }
    #[inline]
    fn plus(&self, other: &Self) -> Self {
        self.saturating_add(*other)
    }
    #[inline]
    fn is_inf(&self) -> bool {
        *self == u128::MAX
    }
    fn from_weight(w: &Weight) -> Self {
        w.to_u128().expect("caller checked the u128 range")
    }
    fn to_weight(&self) -> Option<Weight> {
        (!self.is_inf()).then(|| Weight::from(*self))
    }
}

/// Arbitrary-precision fallback.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BigCost {
    Finite(BigUint),
    Inf,
}

impl Cost for BigCost {
    fn zero() -> Self {
        BigCost::Finite(BigUint::default())
    }
    fn infinity() -> Self {
        BigCost::Inf
    }
    fn plus(&self, other: &Self) -> Self {
        match (self, other) {
            (BigCost::Finite(a), BigCost::Finite(b)) => BigCost::Finite(a + b),
            _ => BigCost::Inf,
        }
    }
    fn is_inf(&self) -> bool {
        matches!(self, BigCost::Inf)
    }
    fn from_weight(w: &Weight) -> Self {
        BigCost::Finite(w.as_big().clone())
    }
    fn to_weight(&self) -> Option<Weight> {
        match self {
            BigCost::Finite(b) => Some(Weight::from_big(b.clone())),
            BigCost::Inf => None,
        }
    }
}

/// True when every sum the DP can form stays below `u128::MAX`.
pub fn fits_u128(total: &Weight) -> bool {
    match total.to_u128() {
        Some(t) => t < u128::MAX / 4,
        None => false,
    }
}
