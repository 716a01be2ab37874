//! The Hessian metric `g = -(f_pq)/6` of a ternary cubic at rational points.
//!
//! On the index cone (`f > 0`, Hessian of signature `(1, 2)`) the level set
//! `f = 1` is Riemannian. Its curvature, the curvature tensor of `g` and the
//! Ricci tensor are all evaluated exactly. Conventions:
//!
//! * `h = det(g) = -H/6^3`;
//! * `R_ijkl = -(1/144) Σ_pq g^pq (f_jlp f_ikq - f_ilp f_jkq)`, so that
//!   `R(ξ, η, ξ, η) = Σ R_ijkl ξ_i η_j ξ_k η_l`;
//! * `Ric_jl = Σ_ik g^ik R_ijkl`, the contraction for which `Ric(v, v)` is
//!   the sum of `R(e_i, v, e_i, v)` over a `g`-orthonormal frame.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cubic::CubicForm;
use crate::invariants::{s_from_cofactors, CofactorMatrix, HessianMatrix};
use crate::linalg::{self, Inertia, Mat3};
use crate::poly::Polynomial;
use crate::ternary::TernaryForm;
use crate::{Error, Result};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Everything the curvature formulas need at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvaturePoint {
    pub x: [Q; 3],
    pub f: Q,
    /// `f_pq(x)`.
    pub hessian: Mat3<Q>,
    /// `f_pqr`, constant for a cubic.
    pub third: [[[Q; 3]; 3]; 3],
    /// `H(x) = det f_pq(x)`.
    pub big_h: Q,
    /// `h = -H/6^3 = det g`.
    pub h: Q,
    /// `B_pq(x)`.
    pub cofactors: Mat3<Q>,
    pub g: Mat3<Q>,
    pub g_inv: Mat3<Q>,
    /// `S` of the cubic.
    pub s: Q,
}

impl CurvaturePoint {
    /// Evaluates the metric data of the cubic `f` (raw coefficients) at `x`.
    pub fn new(f: &TernaryForm<Q>, x: [Q; 3]) -> Result<Self> {
        if f.degree() != 3 {
            return Err(Error::NotACubic);
        }
        if x.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        let hm = HessianMatrix::of(f);
        let bm = CofactorMatrix::of(&hm);
        let s = s_from_cofactors(&bm)?;
        let hessian = hm.at(&x);
        let cofactors = bm.at(&x);
        let big_h = linalg::det(&hessian);
        if big_h.is_zero() {
            return Err(Error::DegenerateMetric);
        }
        let third =
            core::array::from_fn(|p| core::array::from_fn(|r| core::array::from_fn(|t| hm.third(p, r, t).clone())));
        let g = linalg::map(&hessian, |v| -v / q(6));
        // g^-1 = -6 (f_pq)^-1 = -6 B / H
        let g_inv = linalg::map(&cofactors, |b| -(b * q(6)) / &big_h);
        let h = -&big_h / q(216);
        Ok(CurvaturePoint { f: f.eval(&x), x, hessian, third, big_h, h, cofactors, g, g_inv, s })
    }

    pub fn of_cubic(f: &CubicForm, x: [Q; 3]) -> Result<Self> {
        let raw = f.numeric_raw().ok_or_else(|| Error::MissingAssignment("cubic has symbolic coefficients".into()))?;
        Self::new(&raw.map_to_rational(), x)
    }

    /// `h = det g`, checked against the stored value.
    pub fn h_is_det_g(&self) -> bool {
        linalg::det(&self.g) == self.h
    }

    /// `g · g^-1 = I`.
    pub fn inverse_ok(&self) -> bool {
        let p = linalg::mul(&self.g, &self.g_inv);
        (0..3).all(|i| (0..3).all(|j| p[i][j] == if i == j { Q::one() } else { Q::zero() }))
    }
}

impl TernaryForm<BigInt> {
    pub fn map_to_rational(&self) -> TernaryForm<Q> {
        TernaryForm::from_coeffs(self.degree(), self.coeffs().iter().map(|c| Q::from_integer(c.clone())).collect())
    }
}

/// All 81 components `R_ijkl`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureTensor {
    pub r: [[[[Q; 3]; 3]; 3]; 3],
}

impl CurvatureTensor {
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Q {
        &self.r[i][j][k][l]
    }

    /// `Σ R_ijkl a_i b_j c_k d_l`.
    pub fn apply(&self, a: &[Q; 3], b: &[Q; 3], c: &[Q; 3], d: &[Q; 3]) -> Q {
        let mut sum = Q::zero();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let v = &self.r[i][j][k][l];
                        if v.is_zero() {
                            continue;
                        }
                        sum += v * &a[i] * &b[j] * &c[k] * &d[l];
                    }
                }
            }
        }
        sum
    }

    /// Antisymmetry in each pair, pair exchange and the first Bianchi identity.
    pub fn symmetries_hold(&self) -> bool {
        let r = &self.r;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let v = &r[i][j][k][l];
                        if *v != -&r[j][i][k][l] || *v != -&r[i][j][l][k] || *v != r[k][l][i][j] {
                            return false;
                        }
                        if !(v + &r[j][k][i][l] + &r[k][i][j][l]).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

pub fn curvature_tensor(p: &CurvaturePoint) -> CurvatureTensor {
    let t = &p.third;
    // contracted products c[a][b][c][d] = Σ g^pq f_abp f_cdq
    let mut c: Vec<Q> = alloc::vec![Q::zero(); 81];
    for a in 0..3 {
        for b in 0..3 {
            for cc in 0..3 {
                for d in 0..3 {
                    let mut sum = Q::zero();
                    for pp in 0..3 {
                        for qq in 0..3 {
                            if t[a][b][pp].is_zero() || t[cc][d][qq].is_zero() {
                                continue;
                            }
                            sum += &p.g_inv[pp][qq] * &t[a][b][pp] * &t[cc][d][qq];
                        }
                    }
                    c[((a * 3 + b) * 3 + cc) * 3 + d] = sum;
                }
            }
        }
    }
    let at = |a: usize, b: usize, cc: usize, d: usize| &c[((a * 3 + b) * 3 + cc) * 3 + d];
    let k = Q::new(BigInt::from(-1), BigInt::from(144));
    let r = core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            core::array::from_fn(|kk| core::array::from_fn(|l| &k * (at(j, l, i, kk) - at(i, l, j, kk))))
        })
    });
    CurvatureTensor { r }
}

/// `λ1μ2x3 + λ2μ3x1 + λ3μ1x2 - λ2μ1x3 - λ3μ2x1 - λ1μ3x2`.
pub fn plane_bracket(x: &[Q; 3], xi: &[Q; 3], eta: &[Q; 3]) -> Q {
    linalg::det(&[xi.clone(), eta.clone(), x.clone()])
}

/// Both sides of `-4h R(ξ, η, ξ, η) = S · bracket(ξ, η, x)^2`.
pub fn theorem_1_3_sides(p: &CurvaturePoint, t: &CurvatureTensor, xi: &[Q; 3], eta: &[Q; 3]) -> (Q, Q) {
    let lhs = q(-4) * &p.h * t.apply(xi, eta, xi, eta);
    let b = plane_bracket(&p.x, xi, eta);
    (lhs, &p.s * &b * &b)
}

pub fn theorem_1_3_check(p: &CurvaturePoint, t: &CurvatureTensor, xi: &[Q; 3], eta: &[Q; 3]) -> bool {
    let (l, r) = theorem_1_3_sides(p, t, xi, eta);
    l == r
}

/// `-4h R_1212 = S x3^2` and `4h R_1323 = S x1 x2`.
pub fn coordinate_identities(p: &CurvaturePoint, t: &CurvatureTensor) -> [bool; 2] {
    let four_h = q(4) * &p.h;
    let a = -(&four_h * t.get(0, 1, 0, 1)) == &p.s * &p.x[2] * &p.x[2];
    let b = &four_h * t.get(0, 2, 1, 2) == &p.s * &p.x[0] * &p.x[1];
    [a, b]
}

/// Curvature of the level surface `f = 1` where the ray through `x` meets it:
/// `-9/4 + 6^6 S f^2 / (4 H^2)`.
pub fn level_set_curvature(p: &CurvaturePoint) -> Q {
    let v = q(46656) * &p.s * &p.f * &p.f / (q(4) * &p.big_h * &p.big_h);
    v - Q::new(BigInt::from(9), BigInt::from(4))
}

/// Whether `x` lies in the index cone of `f`: `f(x) > 0` and the Hessian has
/// one positive and two negative eigenvalues.
pub fn index_cone_membership(f: &TernaryForm<Q>, x: &[Q; 3]) -> Result<bool> {
    if x.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let hm = HessianMatrix::of(f).at(x);
    let inertia = linalg::inertia(&hm);
    if inertia.zero > 0 {
        return Err(Error::SingularHessian);
    }
    Ok(f.eval(x).is_positive() && inertia.positive == 1 && inertia.negative == 2)
}

/// `Ric_jl = Σ_ik g^ik R_ijkl`.
pub fn ricci_tensor(p: &CurvaturePoint, t: &CurvatureTensor) -> Mat3<Q> {
    core::array::from_fn(|j| {
        core::array::from_fn(|l| {
            let mut sum = Q::zero();
            for i in 0..3 {
                for k in 0..3 {
                    sum += &p.g_inv[i][k] * &t.r[i][j][k][l];
                }
            }
            sum
        })
    })
}

/// Signs of the eigenvalues of the Ricci form.
pub fn ricci_signs(ric: &Mat3<Q>) -> Inertia {
    linalg::inertia(ric)
}

/// Everything reported for one point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointReport {
    pub x: [Q; 3],
    pub f: Q,
    pub big_h: Q,
    pub s: Q,
    pub level_set_curvature: Q,
    pub ricci: Mat3<Q>,
    pub ricci_signs: Inertia,
    pub in_index_cone: bool,
}

pub fn evaluate_point(f: &TernaryForm<Q>, x: [Q; 3]) -> Result<PointReport> {
    let in_index_cone = index_cone_membership(f, &x)?;
    let p = CurvaturePoint::new(f, x)?;
    let t = curvature_tensor(&p);
    let ricci = ricci_tensor(&p, &t);
    Ok(PointReport {
        level_set_curvature: level_set_curvature(&p),
        ricci_signs: ricci_signs(&ricci),
        ricci,
        in_index_cone,
        x: p.x,
        f: p.f,
        big_h: p.big_h,
        s: p.s,
    })
}

/// `9 H^2 - 6^6 S F^2`.
pub fn conjecture_2_2_polynomial(f: &CubicForm) -> Result<Polynomial> {
    crate::positivity::bound_polynomial(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(v: [i64; 3]) -> [Q; 3] {
        v.map(q)
    }

    fn triple() -> TernaryForm<Q> {
        CubicForm::triple_product().numeric_raw().unwrap().map_to_rational()
    }

    #[test]
    fn flat_case() {
        let f = triple();
        let p = CurvaturePoint::new(&f, qv([1, 1, 1])).unwrap();
        assert_eq!(p.s, Q::one());
        assert!(p.h_is_det_g() && p.inverse_ok());
        assert_eq!(level_set_curvature(&p), Q::zero());
        let t = curvature_tensor(&p);
        assert!(t.symmetries_hold());
        assert_eq!(coordinate_identities(&p, &t), [true, true]);
        assert!(index_cone_membership(&f, &qv([1, 1, 1])).unwrap());
        assert!(!index_cone_membership(&f, &qv([1, 1, -1])).unwrap());
    }

    #[test]
    fn fermat_not_in_cone() {
        let f =
            CubicForm::from_normalized_ints(&[1, 0, 0, 0, 0, 0, 1, 0, 0, 1]).numeric_raw().unwrap().map_to_rational();
        assert!(!index_cone_membership(&f, &qv([1, 1, 1])).unwrap());
        assert_eq!(index_cone_membership(&f, &qv([1, 0, 0])), Err(Error::SingularHessian));
    }
}
