use crate::rat::Rat;
use num::{One, Zero};
use std::fmt::Debug;

/// Coefficient ring used by [`crate::LaurentPoly2`].
///
/// Method names avoid the std operator traits so that `Rat` can implement
/// both without ambiguity at call sites.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Embeds an integer; used for signs and multiplicities.
    #[allow(clippy::wrong_self_convention)]
    fn from_int_like(&self, n: i64) -> Self;
}

/// A coefficient ring where nonzero-valued elements can be inverted.
pub trait Field: Coeff {
    fn inverse(&self) -> Option<Self>;
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int_like(&self, n: i64) -> Self {
        crate::rat::int(n)
    }
}

impl Field for Rat {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}
