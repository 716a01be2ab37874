//! Binomial sums for the coefficients of individual monomials in the
//! quadratics `a_e a_f - a_g a_h` that make up the cofactor coefficients.
//!
//! A monomial with column sums 2 is described by its [`ColumnTypeCount`];
//! the sums below depend only on the mixed counts `(ũ, ṽ, w̃)`, under a parity
//! condition that differs per case. The general per-column count in
//! [`SplitMemo`](super::SplitMemo) computes the same numbers without any
//! parity bookkeeping.

use num_bigint::BigInt;
use num_traits::Zero;

use super::quadratic::{QuadTerm, Quadratic};
use crate::combinat::binomial;
use crate::{Error, Result};

/// The quadratics with a closed binomial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Section3Case {
    /// `a300 a030`, with `ũ = 2u+1`, `ṽ = 2v`, `w̃ = 2w`.
    A300A030,
    /// `a210 a120`, same parities.
    A210A120,
    /// `a300 a030 - a210 a120`, the `x1 x2` coefficient of `B33 / 36`.
    B33X1X2,
    /// `a300 a021 - a210 a111`, with `ṽ = 2v+1`, `ũ = 2u`, `w̃ = 2w`.
    A300A021,
    /// `a201 a120 - a210 a111`, same parities.
    A201A120,
    /// `a102 a012 - a111 a003`, the `x3^2` coefficient of `B12 / 36`, with
    /// `ũ = 2u+1`, `ṽ = 2v`, `w̃ = 2w`.
    B12X3Sq,
    /// `a111 a012 - a102 a021`, the `x3^2` coefficient of `B13 / 36`, with
    /// `ṽ = 2v+1`, `ũ = 2u`, `w̃ = 2w`.
    B13X3Sq,
}

impl Section3Case {
    pub const ALL: [Section3Case; 7] = [
        Section3Case::A300A030,
        Section3Case::A210A120,
        Section3Case::B33X1X2,
        Section3Case::A300A021,
        Section3Case::A201A120,
        Section3Case::B12X3Sq,
        Section3Case::B13X3Sq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section3Case::A300A030 => "a300a030",
            Section3Case::A210A120 => "a210a120",
            Section3Case::B33X1X2 => "b33_x1x2",
            Section3Case::A300A021 => "a300a021-a210a111",
            Section3Case::A201A120 => "a201a120-a210a111",
            Section3Case::B12X3Sq => "b12_x3x3",
            Section3Case::B13X3Sq => "b13_x3x3",
        }
    }

    /// Index of the mixed count that must be odd.
    fn odd_index(self) -> usize {
        match self {
            Section3Case::A300A030 | Section3Case::A210A120 | Section3Case::B33X1X2 | Section3Case::B12X3Sq => 0,
            Section3Case::A300A021 | Section3Case::A201A120 | Section3Case::B13X3Sq => 1,
        }
    }

    /// The expected sign of every coefficient, if the case is a cofactor
    /// coefficient with a definite sign.
    pub fn expected_sign(self) -> Option<i8> {
        match self {
            Section3Case::A300A030 | Section3Case::A210A120 => None,
            Section3Case::B33X1X2 | Section3Case::A300A021 | Section3Case::A201A120 => Some(-1),
            Section3Case::B12X3Sq | Section3Case::B13X3Sq => Some(1),
        }
    }

    /// The quadratic in the `a_ijk`.
    pub fn quadratic(self) -> Quadratic {
        let t = |e: [u32; 3], f: [u32; 3], c: i64| QuadTerm { e, f, coeff: BigInt::from(c) };
        let terms = match self {
            Section3Case::A300A030 => alloc::vec![t([3, 0, 0], [0, 3, 0], 1)],
            Section3Case::A210A120 => alloc::vec![t([2, 1, 0], [1, 2, 0], 1)],
            Section3Case::B33X1X2 => alloc::vec![t([3, 0, 0], [0, 3, 0], 1), t([2, 1, 0], [1, 2, 0], -1)],
            Section3Case::A300A021 => alloc::vec![t([3, 0, 0], [0, 2, 1], 1), t([2, 1, 0], [1, 1, 1], -1)],
            Section3Case::A201A120 => alloc::vec![t([2, 0, 1], [1, 2, 0], 1), t([2, 1, 0], [1, 1, 1], -1)],
            Section3Case::B12X3Sq => alloc::vec![t([1, 0, 2], [0, 1, 2], 1), t([1, 1, 1], [0, 0, 3], -1)],
            Section3Case::B13X3Sq => alloc::vec![t([1, 1, 1], [0, 1, 2], 1), t([1, 0, 2], [0, 2, 1], -1)],
        };
        Quadratic { terms }
    }

    /// Splits mixed counts into the half-parameters `(u, v, w)`.
    pub fn parameters(self, mixed: [u32; 3]) -> Result<[u32; 3]> {
        let odd = self.odd_index();
        for (i, &m) in mixed.iter().enumerate() {
            if (m % 2 == 1) != (i == odd) {
                return Err(Error::ParityMismatch);
            }
        }
        Ok(mixed.map(|m| m / 2))
    }
}

fn c(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

/// `a201 a120 - a210 a111` at `ũ = 2u`, `ṽ = 2v+1`, `w̃ = 2w`.
fn a201a120(u: i64, v: i64, w: i64) -> BigInt {
    let mut sum = BigInt::zero();
    for k in 0..=2 * v + 1 {
        sum += c(2 * v + 1, k) * c(2 * u, u + v - k) * (c(2 * w, w + v - (k - 1)) - c(2 * w, w + v - k));
    }
    sum
}

/// Coefficient of a monomial with mixed counts `(ũ, ṽ, w̃)` in the quadratic
/// of `case`, from its binomial sum.
pub fn section3_binomial_coefficient(case: Section3Case, mixed: [u32; 3]) -> Result<BigInt> {
    let [u, v, w] = case.parameters(mixed)?.map(i64::from);
    let mut sum = BigInt::zero();
    match case {
        Section3Case::A300A030 | Section3Case::A210A120 | Section3Case::B33X1X2 => {
            for k in 0..=2 * u + 1 {
                let first = c(2 * v, v + u - (k + 1)) * c(2 * w, w + u - (k + 1));
                let second = c(2 * v, v + u - k) * c(2 * w, w + u - k);
                let inner = match case {
                    Section3Case::A300A030 => first,
                    Section3Case::A210A120 => second,
                    _ => first - second,
                };
                sum += c(2 * u + 1, k) * inner;
            }
        }
        Section3Case::A300A021 => {
            for k in 0..=2 * v + 1 {
                sum += c(2 * v + 1, k) * c(2 * w, w + v - k) * (c(2 * u, u + v - (k + 1)) - c(2 * u, u + v - k));
            }
        }
        Section3Case::A201A120 => sum = a201a120(u, v, w),
        Section3Case::B12X3Sq => {
            for k in 0..=2 * u + 1 {
                sum += c(2 * u + 1, k) * c(2 * v, v + u - k) * (c(2 * w, w + u - k) - c(2 * w, w + u - (k - 1)));
            }
        }
        Section3Case::B13X3Sq => sum = -a201a120(w, v, u),
    }
    Ok(sum)
}
