//! Exact invariant theory for ternary cubic forms.
//!
//! The crate builds the cubic forms attached to complete intersections in a
//! product of three projective spaces, computes their Hessian, cofactors and
//! Aronhold `S`-invariant, evaluates the curvature of the associated Hessian
//! metric at rational points, and checks positivity statements about the
//! resulting coefficient polynomials, either by full symbolic expansion or by a
//! per-monomial factorisation algorithm over symmetry-reduced monomial types.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers or
//! rationals and no floating point is used. The crate is `no_std` (it needs
//! `alloc`); file formats, parallel drivers and the command line live in the
//! companion `cubinv` crate.
//!
//! Module map:
//!
//! * [`poly`]: sparse multivariate polynomials over a shared [`poly::VariableTable`].
//! * [`ternary`]: dense forms in `x1, x2, x3` with coefficients in any [`Ring`].
//! * [`cubic`]: degree data, factor triples and the product construction.
//! * [`invariants`]: Hessian, cofactors, `H`, `S` and the exact identity checks.
//! * [`curvature`]: rational evaluation of the Hessian metric and its curvature.
//! * [`positivity`]: exponent matrices, canonical types and positivity reports.
//! * [`coeffalgo`]: coefficient of a single monomial of `S` and closed forms.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod coeffalgo;
pub mod combinat;
pub mod cubic;
pub mod curvature;
mod error;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod positivity;
mod ring;
pub mod ternary;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ring::Ring;
