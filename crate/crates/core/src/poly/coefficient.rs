use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::Ring;

/// Scalar coefficient domain of a [`super::Polynomial`]: big integers by
/// default, big rationals where division is unavoidable.
pub trait Coefficient: Ring + Eq + core::hash::Hash + fmt::Display + Send + Sync + 'static {
    fn from_bigint(n: BigInt) -> Self;
    fn to_rational(&self) -> BigRational;
    fn is_negative(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn parse_coefficient(s: &str) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn parse_coefficient(s: &str) -> Option<Self> {
        BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).ok()
    }
}

impl Coefficient for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn parse_coefficient(s: &str) -> Option<Self> {
        let s = s.strip_prefix('+').unwrap_or(s);
        let r = BigRational::from_str(s).ok()?;
        // from_str rejects a zero denominator already; normalise sign and gcd.
        Some(BigRational::new(r.numer().clone(), r.denom().clone()))
    }
}
