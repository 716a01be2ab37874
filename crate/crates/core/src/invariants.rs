//! Hessian, cofactors, Hessian determinant and the Aronhold invariant `S`.
//!
//! `S` is obtained from the cofactor identity
//!
//! ```text
//! Σ_{p,q} (∂²B_pq/∂x3²)(∂²B_33/∂x_p∂x_q) = 4 · 6^4 · S
//! ```
//!
//! where `B` is the adjugate of the Hessian matrix `(f_pq)`. The division by
//! `4 · 6^4` must be exact; a remainder is reported as
//! [`Error::NotDivisible`]. With this normalisation the Hesse cubic
//! `x1^3 + x2^3 + x3^3 + 6λ x1 x2 x3` has `S = λ^4 - λ`.
//!
//! Indices in this module are zero-based: `(0, 1)` means `(x1, x2)`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cubic::CubicForm;
use crate::linalg::{self, Mat3};
use crate::poly::{Coefficient, Polynomial};
use crate::ternary::TernaryForm;
use crate::{Error, Result, Ring};

/// `6^4`.
pub const SIX_POW_4: i64 = 1296;
/// `6^5`.
pub const SIX_POW_5: i64 = 7776;

/// Second partials `f_pq` (linear forms) and third partials `f_pqr` (constants).
#[derive(Debug, Clone, PartialEq)]
pub struct HessianMatrix<R> {
    entries: Mat3<TernaryForm<R>>,
    third: [[[R; 3]; 3]; 3],
}

impl<R: Ring> HessianMatrix<R> {
    pub fn of(f: &TernaryForm<R>) -> Self {
        assert_eq!(f.degree(), 3, "Hessian of a non-cubic");
        let first: [TernaryForm<R>; 3] = core::array::from_fn(|p| f.partial(p));
        let entries: Mat3<TernaryForm<R>> = core::array::from_fn(|p| core::array::from_fn(|q| first[p].partial(q)));
        let third = core::array::from_fn(|p| {
            core::array::from_fn(|q| core::array::from_fn(|r| entries[p][q].partial(r).constant().clone()))
        });
        HessianMatrix { entries, third }
    }

    pub fn entry(&self, p: usize, q: usize) -> &TernaryForm<R> {
        &self.entries[p][q]
    }

    pub fn entries(&self) -> &Mat3<TernaryForm<R>> {
        &self.entries
    }

    pub fn third(&self, p: usize, q: usize, r: usize) -> &R {
        &self.third[p][q][r]
    }

    pub fn at(&self, x: &[R; 3]) -> Mat3<R> {
        linalg::map(&self.entries, |e| e.eval(x))
    }
}

/// The adjugate `B` of the Hessian matrix; entries are quadratic forms.
#[derive(Debug, Clone, PartialEq)]
pub struct CofactorMatrix<R> {
    entries: Mat3<TernaryForm<R>>,
}

impl<R: Ring> CofactorMatrix<R> {
    pub fn of(h: &HessianMatrix<R>) -> Self {
        CofactorMatrix { entries: linalg::adjugate(&h.entries) }
    }

    pub fn entry(&self, p: usize, q: usize) -> &TernaryForm<R> {
        &self.entries[p][q]
    }

    pub fn entries(&self) -> &Mat3<TernaryForm<R>> {
        &self.entries
    }

    pub fn at(&self, x: &[R; 3]) -> Mat3<R> {
        linalg::map(&self.entries, |e| e.eval(x))
    }
}

/// `∂²B_pq/∂x3²` and `∂²B_33/∂x_p∂x_q` as constants.
pub fn s_quadratics<R: Ring>(b: &CofactorMatrix<R>) -> (Mat3<R>, Mat3<R>) {
    let q = linalg::map(&b.entries, |e| e.second_partial(2, 2).constant().clone());
    let r = core::array::from_fn(|p| core::array::from_fn(|s| b.entries[2][2].second_partial(p, s).constant().clone()));
    (q, r)
}

/// `S` from the cofactor matrix, with the exact division by `4 · 6^4`.
pub fn s_from_cofactors<R: Ring>(b: &CofactorMatrix<R>) -> Result<R> {
    let (q, r) = s_quadratics(b);
    let mut sum = q[0][0].zero_like();
    for p in 0..3 {
        for s in 0..3 {
            sum.add_assign_ref(&q[p][s].times(&r[p][s]));
        }
    }
    sum.div_exact(&BigInt::from(4 * SIX_POW_4))
        .ok_or(Error::NotDivisible { divisor: "4*6^4".into(), context: "S invariant" })
}

/// Hessian data, `H` and `S` of one cubic, with the identity checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Invariants<R> {
    pub form: TernaryForm<R>,
    pub hessian: HessianMatrix<R>,
    pub cofactors: CofactorMatrix<R>,
    pub h: TernaryForm<R>,
    pub s: R,
}

/// Outcome of every exact identity check on one cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdentityChecks {
    pub adjugate: bool,
    /// Indexed `[i][j]`.
    pub lemma_1_1: [[bool; 3]; 3],
    pub remark_1_2: [[bool; 3]; 3],
    pub adjoint: [[bool; 3]; 3],
    pub s_f: bool,
}

impl IdentityChecks {
    pub fn all(&self) -> bool {
        let all9 = |m: &[[bool; 3]; 3]| m.iter().flatten().all(|&b| b);
        self.adjugate && all9(&self.lemma_1_1) && all9(&self.remark_1_2) && all9(&self.adjoint) && self.s_f
    }
}

impl<R: Ring> Invariants<R> {
    pub fn compute(f: &TernaryForm<R>) -> Result<Self> {
        let hessian = HessianMatrix::of(f);
        let cofactors = CofactorMatrix::of(&hessian);
        // first-row expansion reuses the cofactors
        let h = (0..3).map(|q| hessian.entries[0][q].mul(&cofactors.entries[q][0])).reduce(|a, b| a.add(&b)).unwrap();
        let s = s_from_cofactors(&cofactors)?;
        Ok(Invariants { form: f.clone(), hessian, cofactors, h, s })
    }

    fn monomial_xixj(&self, i: usize, j: usize) -> TernaryForm<R> {
        let like = self.form.ring_zero();
        TernaryForm::coordinate(i, like).mul(&TernaryForm::coordinate(j, like))
    }

    /// `(f_pq) · B = H · I`.
    pub fn adjugate_identity(&self) -> bool {
        let p = linalg::mul(&self.hessian.entries, &self.cofactors.entries);
        (0..3).all(|i| (0..3).all(|j| if i == j { p[i][j] == self.h } else { p[i][j].is_zero() }))
    }

    /// `½ Σ_{p,q} B_pq ∂²B_ij/∂x_p∂x_q = 6^4 S x_i x_j`.
    pub fn lemma_1_1(&self, i: usize, j: usize) -> bool {
        let bij = &self.cofactors.entries[i][j];
        let mut lhs = TernaryForm::zero(2, self.form.ring_zero());
        for p in 0..3 {
            for q in 0..3 {
                let c = bij.second_partial(p, q).constant().clone();
                lhs = lhs.add(&self.cofactors.entries[p][q].scale(&c));
            }
        }
        let rhs = self.monomial_xixj(i, j).scale(&self.s.scaled_i64(2 * SIX_POW_4));
        lhs == rhs
    }

    /// `½ Σ_{p,q} (∂²B_pq/∂x_i∂x_j)(∂²B_ij/∂x_p∂x_q) = 6^4 (1 + δ_ij) S`.
    pub fn remark_1_2(&self, i: usize, j: usize) -> bool {
        let bij = &self.cofactors.entries[i][j];
        let mut lhs = self.s.zero_like();
        for p in 0..3 {
            for q in 0..3 {
                let a = self.cofactors.entries[p][q].second_partial(i, j).constant().clone();
                let b = bij.second_partial(p, q).constant().clone();
                lhs.add_assign_ref(&a.times(&b));
            }
        }
        let k = if i == j { 4 } else { 2 };
        lhs == self.s.scaled_i64(k * SIX_POW_4)
    }

    /// Adjugate of `B` equals `H · (f_pq)` entrywise (nine products of
    /// cofactors, e.g. `f_12 H = -B_33 B_12 + B_23 B_13`).
    pub fn adjoint_identity(&self) -> [[bool; 3]; 3] {
        let adj = linalg::adjugate(&self.cofactors.entries);
        core::array::from_fn(|i| core::array::from_fn(|j| adj[i][j] == self.hessian.entries[i][j].mul(&self.h)))
    }

    /// `½ Σ_{i,j} B_ij ∂²H/∂x_i∂x_j = 6^5 S F`.
    pub fn s_f_identity(&self) -> bool {
        let mut lhs = TernaryForm::zero(3, self.form.ring_zero());
        for i in 0..3 {
            for j in 0..3 {
                lhs = lhs.add(&self.cofactors.entries[i][j].mul(&self.h.second_partial(i, j)));
            }
        }
        lhs == self.form.scale(&self.s.scaled_i64(2 * SIX_POW_5))
    }

    pub fn check_all(&self) -> IdentityChecks {
        IdentityChecks {
            adjugate: self.adjugate_identity(),
            lemma_1_1: core::array::from_fn(|i| core::array::from_fn(|j| self.lemma_1_1(i, j))),
            remark_1_2: core::array::from_fn(|i| core::array::from_fn(|j| self.remark_1_2(i, j))),
            adjoint: self.adjoint_identity(),
            s_f: self.s_f_identity(),
        }
    }
}

pub fn hessian<C: Coefficient>(f: &CubicForm<C>) -> HessianMatrix<Polynomial<C>> {
    HessianMatrix::of(f.raw())
}

pub fn cofactors<C: Coefficient>(h: &HessianMatrix<Polynomial<C>>) -> CofactorMatrix<Polynomial<C>> {
    CofactorMatrix::of(h)
}

/// `H = det(f_pq)` as one polynomial in the x-variables and the coefficient
/// variables.
pub fn hessian_determinant<C: Coefficient>(f: &CubicForm<C>) -> Polynomial<C> {
    let hm = hessian(f);
    linalg::det(hm.entries()).to_polynomial()
}

/// The Aronhold invariant; a polynomial in the coefficient variables.
pub fn s_invariant<C: Coefficient>(f: &CubicForm<C>) -> Result<Polynomial<C>> {
    s_from_cofactors(&cofactors(&hessian(f)))
}

pub fn invariants<C: Coefficient>(f: &CubicForm<C>) -> Result<Invariants<Polynomial<C>>> {
    Invariants::compute(f.raw())
}

pub fn verify_lemma_1_1<C: Coefficient>(f: &CubicForm<C>, i: usize, j: usize) -> Result<bool> {
    Ok(invariants(f)?.lemma_1_1(i, j))
}

pub fn verify_remark_1_2<C: Coefficient>(f: &CubicForm<C>, i: usize, j: usize) -> Result<bool> {
    Ok(invariants(f)?.remark_1_2(i, j))
}

pub fn verify_adjoint_identity<C: Coefficient>(f: &CubicForm<C>) -> Result<bool> {
    Ok(invariants(f)?.adjoint_identity().iter().flatten().all(|&b| b))
}

pub fn verify_sf_identity<C: Coefficient>(f: &CubicForm<C>) -> Result<bool> {
    Ok(invariants(f)?.s_f_identity())
}

/// Flattened `B_pq` polynomials in the order `11, 12, 13, 22, 23, 33`.
pub fn cofactor_polynomials<C: Coefficient>(b: &CofactorMatrix<Polynomial<C>>) -> Vec<((usize, usize), Polynomial<C>)> {
    let mut out = Vec::with_capacity(6);
    for p in 0..3 {
        for q in p..3 {
            out.push(((p, q), b.entry(p, q).to_polynomial()));
        }
    }
    out
}
