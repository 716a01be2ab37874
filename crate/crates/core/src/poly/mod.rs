//! Sparse multivariate polynomials with exact coefficients.
//!
//! Every polynomial is tied to an [`Arc`](alloc::sync::Arc)-shared
//! [`VariableTable`]. The table always starts with `x1, x2, x3`, followed by
//! the factor variables `a_j, b_j, c_j` and any auxiliary scalars. Terms are
//! kept sorted in descending graded lexicographic order, so iteration, text
//! output and equality are deterministic.

mod coefficient;
mod monomial;
mod polynomial;
mod table;
mod text;

pub use coefficient::Coefficient;
pub use monomial::Monomial;
pub use polynomial::{Assignment, Polynomial, TermAccumulator};
pub use table::{FactorRow, Role, Var, VariableTable, VariableTableBuilder};
