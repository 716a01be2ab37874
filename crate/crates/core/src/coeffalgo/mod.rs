//! Coefficients of single monomials of `S` without expanding `S`.
//!
//! Every term of `∂²B_pq/∂x3²` and of `∂²B_33/∂x_p∂x_q` is a quadratic in
//! the coefficients `a_ijk` of the cubic, and each `a_ijk` of the product
//! construction is the sum of all monomials taking one variable from each
//! factor triple with prescribed row counts. The coefficient of a monomial
//! `M` of `S` is therefore a sum over splittings `M = M1 · M2` into monomials
//! with column sums 2, weighted by how often `M1` and `M2` arise in the two
//! quadratics; see [`CoefficientEngine`].
//!
//! Besides the general algorithm the module carries the closed formula for
//! one family of monomials ([`closed_form_t`]), the six-part sum for the
//! monomials `s · [3,0,1; 1,3,0; 0,1,3]` ([`appendix`]) and the binomial sums
//! for the cofactor coefficients ([`section3`]), which serve as independent
//! checks.

pub mod appendix;
mod closed;
mod monomial;
mod quadratic;
pub mod section3;

pub use closed::{closed_form_t, example_4_1_matrix, t_family_matrix};
pub use monomial::{monomial_coefficient_in_s, CoefficientBreakdown, CoefficientEngine};
pub use quadratic::{
    coefficient_in_quadratic, split_count, ColumnTypeCount, QuadTerm, Quadratic, QuadraticTable, SplitMemo,
    TridegreeTable,
};
