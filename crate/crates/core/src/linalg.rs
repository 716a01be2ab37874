//! 3×3 matrices over a [`Ring`]: determinant, adjugate, characteristic
//! polynomial and exact signature of symmetric rational matrices.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::Ring;

pub type Mat3<R> = [[R; 3]; 3];

pub fn det<R: Ring>(m: &Mat3<R>) -> R {
    let t0 = m[1][1].times(&m[2][2]).minus(&m[1][2].times(&m[2][1]));
    let t1 = m[1][0].times(&m[2][2]).minus(&m[1][2].times(&m[2][0]));
    let t2 = m[1][0].times(&m[2][1]).minus(&m[1][1].times(&m[2][0]));
    m[0][0].times(&t0).minus(&m[0][1].times(&t1)).plus(&m[0][2].times(&t2))
}

/// Signed cofactor `(-1)^(i+j) · minor(i, j)`.
pub fn cofactor<R: Ring>(m: &Mat3<R>, i: usize, j: usize) -> R {
    let r = [(i + 1) % 3, (i + 2) % 3];
    let c = [(j + 1) % 3, (j + 2) % 3];
    // cyclic index order absorbs the checkerboard sign
    m[r[0]][c[0]].times(&m[r[1]][c[1]]).minus(&m[r[0]][c[1]].times(&m[r[1]][c[0]]))
}

/// Adjugate: `adj(m)[i][j] = cofactor(m, j, i)`, so `m · adj(m) = det(m) · I`.
pub fn adjugate<R: Ring>(m: &Mat3<R>) -> Mat3<R> {
    core::array::from_fn(|i| core::array::from_fn(|j| cofactor(m, j, i)))
}

pub fn mul<R: Ring>(a: &Mat3<R>, b: &Mat3<R>) -> Mat3<R> {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| a[i][0].times(&b[0][j]).plus(&a[i][1].times(&b[1][j])).plus(&a[i][2].times(&b[2][j])))
    })
}

pub fn transpose<R: Ring>(m: &Mat3<R>) -> Mat3<R> {
    core::array::from_fn(|i| core::array::from_fn(|j| m[j][i].clone()))
}

pub fn map<R, S>(m: &Mat3<R>, f: impl Fn(&R) -> S) -> Mat3<S> {
    core::array::from_fn(|i| core::array::from_fn(|j| f(&m[i][j])))
}

pub fn is_symmetric<R: Ring>(m: &Mat3<R>) -> bool {
    m[0][1] == m[1][0] && m[0][2] == m[2][0] && m[1][2] == m[2][1]
}

/// `(c1, c2, c3)` with `det(t·I − m) = t³ − c1·t² + c2·t − c3`.
pub fn char_poly<R: Ring>(m: &Mat3<R>) -> (R, R, R) {
    let c1 = m[0][0].plus(&m[1][1]).plus(&m[2][2]);
    let c2 = cofactor(m, 0, 0).plus(&cofactor(m, 1, 1)).plus(&cofactor(m, 2, 2));
    (c1, c2, det(m))
}

/// Numbers of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: u8,
    pub negative: u8,
    pub zero: u8,
}

fn sign_changes(coeffs: &[BigRational]) -> u8 {
    let mut last = 0i8;
    let mut n = 0;
    for c in coeffs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Inertia of a symmetric rational matrix from the signs of its characteristic
/// coefficients. The characteristic polynomial of a symmetric matrix is real
/// rooted, so Descartes' rule of signs counts its roots exactly.
pub fn inertia(m: &Mat3<BigRational>) -> Inertia {
    debug_assert!(is_symmetric(m));
    let (c1, c2, c3) = char_poly(m);
    let zero = if !Zero::is_zero(&c3) {
        0
    } else if !Zero::is_zero(&c2) {
        1
    } else if !Zero::is_zero(&c1) {
        2
    } else {
        3
    };
    let one = BigRational::from_integer(1.into());
    // p(t) = t^3 - c1 t^2 + c2 t - c3 and p(-t) up to sign = t^3 + c1 t^2 + c2 t + c3
    let positive = sign_changes(&[one.clone(), -c1.clone(), c2.clone(), -c3.clone()]);
    let negative = sign_changes(&[one, c1, c2, c3]);
    Inertia { positive, negative, zero }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qm(rows: [[i64; 3]; 3]) -> Mat3<BigRational> {
        map(&rows, |&v| q(v))
    }

    #[test]
    fn adjugate_identity() {
        let m: Mat3<BigInt> = map(&[[2, -1, 3], [0, 4, 5], [7, 1, -2]], |&v| BigInt::from(v));
        let d = det(&m);
        let p = mul(&m, &adjugate(&m));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p[i][j], if i == j { d.clone() } else { BigInt::from(0) });
            }
        }
    }

    #[test]
    fn inertia_examples() {
        let e = inertia(&qm([[0, 6, 6], [6, 0, 6], [6, 6, 0]]));
        assert_eq!(e, Inertia { positive: 1, negative: 2, zero: 0 });
        let e = inertia(&qm([[6, 0, 0], [0, 6, 0], [0, 0, 6]]));
        assert_eq!(e, Inertia { positive: 3, negative: 0, zero: 0 });
        let e = inertia(&qm([[1, 1, 0], [1, 1, 0], [0, 0, -3]]));
        assert_eq!(e, Inertia { positive: 1, negative: 1, zero: 1 });
    }
}
