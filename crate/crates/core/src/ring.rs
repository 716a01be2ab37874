use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring operations shared by numeric and symbolic coefficients.
///
/// Elements know how to build their own zero and one because symbolic elements
/// carry their variable table. Mixing elements from different tables is a
/// programming error and panics; the fallible entry points live on
/// [`crate::poly::Polynomial`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, k: &BigInt) -> Self;
    /// Exact division by an integer; `None` if some coefficient is not divisible.
    fn div_exact(&self, k: &BigInt) -> Option<Self>;

    fn scaled_i64(&self, k: i64) -> Self {
        self.scaled(&BigInt::from(k))
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &BigInt) -> Self {
        self * k
    }
    fn div_exact(&self, k: &BigInt) -> Option<Self> {
        if Zero::is_zero(k) {
            return None;
        }
        let (q, r) = self.div_rem(k);
        Zero::is_zero(&r).then_some(q)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, k: &BigInt) -> Self {
        self * BigRational::from_integer(k.clone())
    }
    fn div_exact(&self, k: &BigInt) -> Option<Self> {
        if Zero::is_zero(k) {
            return None;
        }
        Some(self / BigRational::from_integer(k.clone()))
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}
