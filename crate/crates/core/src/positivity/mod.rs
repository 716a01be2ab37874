//! Monomial types and the sign statements about `S`, `9H^2 - 6^6 S F^2`,
//! the cofactors `B_pq` and `H`.
//!
//! Monomials in the factor variables are [`ExponentMatrix`]es. Permuting the
//! factor triples (columns) preserves every polynomial here, as does
//! permuting rows of equal degree together with the x-variables, so
//! coefficients are computed once per [`CanonicalType`].

mod matrix;
mod report;
mod sign;

pub use matrix::*;
pub use report::*;
pub use sign::*;
