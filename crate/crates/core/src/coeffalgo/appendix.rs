//! The six-part binomial sum for the coefficient of `s · [3,0,1; 1,3,0; 0,1,3]`
//! in `S`.
//!
//! Part `k` has the shape `Σ_l W_k(s,l) · J_k(l) · I_k(s-l)`, where the
//! inner sums `J_k` over `j` and `I_k` over `i` depend only on `l` and on
//! `s - l`. [`parts`] evaluates the sums as written, one term per
//! `(l, j, i)`; [`Sweep`] tabulates the inner sums once and reuses them
//! across many `s`. The two routes share nothing beyond the binomial
//! function.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinat::{binomial, Pascal};

/// Values of the six parts and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixValue {
    pub s: u32,
    pub parts: [BigInt; 6],
    pub total: BigInt,
}

impl AppendixValue {
    fn from_parts(s: u32, parts: [BigInt; 6]) -> Self {
        let total = parts.iter().sum();
        AppendixValue { s, parts, total }
    }

    /// Whether every part is larger in modulus than the total.
    pub fn parts_dominate(&self) -> bool {
        let t = self.total.abs();
        self.parts.iter().all(|p| p.abs() > t)
    }
}

fn c(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

/// Direct evaluation, one summand per index triple.
pub fn parts(s: u32) -> AppendixValue {
    let s = s as i64;
    let mut a: [BigInt; 6] = Default::default();

    for l in 0..=s {
        for j in 0..=l {
            for i in 0..=s - l {
                let m = s - l;
                a[0] += c(s, l).pow(3)
                    * c(l, j).pow(2)
                    * (c(l, j + 1) - c(l, j))
                    * c(m, i).pow(2)
                    * (c(m, i + 1) - c(m, i));
            }
        }
    }
    for l in 0..s {
        let m = s - l;
        for j in 0..=l {
            for i in 0..=m {
                a[1] += c(s, l).pow(2)
                    * c(s, l + 1)
                    * c(l, j)
                    * (c(l, j + 1) * c(l + 1, j + 2) + c(l, j + 1) * c(l + 1, j + 1) - 2 * c(l, j) * c(l + 1, j + 1))
                    * c(m, i)
                    * (c(m, i) * c(m - 1, i - 1) - c(m, i + 1) * c(m - 1, i));
            }
        }
    }
    for l in 0..s - 1 {
        let m = s - l;
        for j in 0..=l {
            for i in 0..=m {
                a[2] += c(s, l).pow(2)
                    * c(s, l + 2)
                    * c(l, j)
                    * (c(l, j + 1) * c(l + 2, j + 2) - c(l, j) * c(l + 2, j + 1))
                    * c(m, i)
                    * c(m - 2, i - 1)
                    * (c(m, i + 1) - c(m, i));
            }
        }
    }
    for l in 0..s {
        let m = s - l;
        for j in 0..=l + 1 {
            for i in 0..=m - 1 {
                a[3] += c(s, l + 1).pow(2)
                    * c(s, l)
                    * (c(l, j + 1) * c(l + 1, j + 1) + c(l, j) * c(l + 1, j + 1) - 2 * c(l + 1, j) * c(l, j - 1))
                    * c(l + 1, j)
                    * c(m - 1, i)
                    * c(m, i + 1)
                    * (c(m - 1, i) - c(m - 1, i + 1));
            }
        }
    }
    for l in 0..s - 1 {
        let m = s - l;
        for j in 0..=l {
            for i in 0..=m - 1 {
                a[4] += c(s, l)
                    * c(s, l + 1)
                    * c(s, l + 2)
                    * c(l + 1, j)
                    * (c(l, j + 1) * c(l + 2, j + 2) - c(l, j) * c(l + 2, j + 1))
                    * c(m - 1, i)
                    * c(m, i + 1)
                    * (c(m - 2, i) - c(m - 2, i - 1));
            }
        }
    }
    for l in 0..s - 1 {
        let m = s - l;
        for j in 1..=l + 2 {
            for i in 0..=m - 2 {
                a[5] += c(s, l + 2).pow(2)
                    * c(s, l)
                    * c(l + 2, j)
                    * (c(l, j - 2) * c(l + 2, j - 1) - c(l, j - 1) * c(l + 2, j))
                    * c(m - 2, i)
                    * c(m, i + 1)
                    * (c(m - 2, i - 1) - c(m - 2, i));
            }
        }
    }
    AppendixValue::from_parts(s as u32, a)
}

/// Tabulated inner sums for evaluating the parts at every `s` up to a bound.
#[derive(Debug, Clone)]
pub struct Sweep {
    max_s: u32,
    pascal: Pascal,
    /// `j_sums[k][l]`.
    j_sums: [Vec<BigInt>; 6],
    /// `i_sums[k][m]`.
    i_sums: [Vec<BigInt>; 6],
}

impl Sweep {
    pub fn new(max_s: u32) -> Self {
        let n = max_s as usize + 3;
        let pascal = Pascal::new(n);
        let b = |x: i64, y: i64| -> BigInt { pascal.get(x, y) };
        let mut j_sums: [Vec<BigInt>; 6] = Default::default();
        let mut i_sums: [Vec<BigInt>; 6] = Default::default();
        for l in 0..=max_s as i64 {
            let mut j =
                [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
            for jj in 0..=l + 2 {
                let (l0, l1, l2) = (b(l, jj), b(l, jj + 1), b(l + 1, jj + 1));
                if jj <= l {
                    j[0] += &l0 * &l0 * (&l1 - &l0);
                    j[1] += &l0 * (&l1 * b(l + 1, jj + 2) + &l1 * &l2 - 2 * &l0 * &l2);
                    let mixed = &l1 * b(l + 2, jj + 2) - &l0 * b(l + 2, jj + 1);
                    j[2] += &l0 * &mixed;
                    j[4] += b(l + 1, jj) * &mixed;
                }
                if jj <= l + 1 {
                    j[3] += (&l1 * &l2 + &l0 * &l2 - 2 * b(l + 1, jj) * b(l, jj - 1)) * b(l + 1, jj);
                }
                if jj >= 1 {
                    j[5] += b(l + 2, jj) * (b(l, jj - 2) * b(l + 2, jj - 1) - b(l, jj - 1) * b(l + 2, jj));
                }
            }
            for (k, v) in j.into_iter().enumerate() {
                j_sums[k].push(v);
            }
        }
        for m in 0..=max_s as i64 {
            let mut i =
                [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
            for ii in 0..=m {
                let (m0, m1) = (b(m, ii), b(m, ii + 1));
                i[0] += &m0 * &m0 * (&m1 - &m0);
                i[1] += &m0 * (&m0 * b(m - 1, ii - 1) - &m1 * b(m - 1, ii));
                i[2] += &m0 * b(m - 2, ii - 1) * (&m1 - &m0);
                if ii < m {
                    let p = b(m - 1, ii) * &m1;
                    i[3] += &p * (b(m - 1, ii) - b(m - 1, ii + 1));
                    i[4] += &p * (b(m - 2, ii) - b(m - 2, ii - 1));
                }
                if ii + 1 < m {
                    i[5] += b(m - 2, ii) * &m1 * (b(m - 2, ii - 1) - b(m - 2, ii));
                }
            }
            for (k, v) in i.into_iter().enumerate() {
                i_sums[k].push(v);
            }
        }
        Sweep { max_s, pascal, j_sums, i_sums }
    }

    pub fn max_s(&self) -> u32 {
        self.max_s
    }

    pub fn value(&self, s: u32) -> AppendixValue {
        assert!(s <= self.max_s, "s = {s} beyond the tabulated range");
        let s = s as i64;
        let b = |x: i64, y: i64| -> BigInt { self.pascal.get(x, y) };
        let mut a: [BigInt; 6] = Default::default();
        for l in 0..=s {
            let (lu, mu) = (l as usize, (s - l) as usize);
            let weights = [
                b(s, l).pow(3),
                b(s, l).pow(2) * b(s, l + 1),
                b(s, l).pow(2) * b(s, l + 2),
                b(s, l + 1).pow(2) * b(s, l),
                b(s, l) * b(s, l + 1) * b(s, l + 2),
                b(s, l + 2).pow(2) * b(s, l),
            ];
            for k in 0..6 {
                if weights[k].is_zero() {
                    continue;
                }
                a[k] += &weights[k] * &self.j_sums[k][lu] * &self.i_sums[k][mu];
            }
        }
        AppendixValue::from_parts(s as u32, a)
    }
}
