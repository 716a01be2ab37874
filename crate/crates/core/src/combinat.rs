//! Binomials, factorials and multinomials over big integers.
//!
//! Out-of-range binomials `C(n, k)` with `k < 0`, `k > n` or `n < 0` are zero,
//! which is the convention the truncated binomial sums in [`crate::coeffalgo`]
//! rely on.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let total: u32 = parts.iter().sum();
    let mut acc = factorial(total);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// Multinomial `3! / (i! j! k!)` for an exponent triple of a cubic monomial.
pub fn cubic_multinomial(e: [u32; 3]) -> u32 {
    debug_assert_eq!(e.iter().sum::<u32>(), 3);
    let f = |n: u32| -> u32 { (1..=n).product() };
    6 / (f(e[0]) * f(e[1]) * f(e[2]))
}

/// Pascal's triangle up to a fixed row, for repeated lookups in nested sums.
#[derive(Debug, Clone)]
pub struct Pascal {
    rows: Vec<Vec<BigInt>>,
}

impl Pascal {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                if k == 0 || k == n {
                    row.push(BigInt::one());
                } else {
                    let prev = &rows[n - 1];
                    row.push(&prev[k - 1] + &prev[k]);
                }
            }
            rows.push(row);
        }
        Pascal { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)` with the zero convention; panics if `n` exceeds the table.
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    /// Borrowing variant of [`Pascal::get`]; returns `None` for the zero cases.
    pub fn get_ref(&self, n: i64, k: i64) -> Option<&BigInt> {
        if n < 0 || k < 0 || k > n {
            return None;
        }
        Some(&self.rows[n as usize][k as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn pascal_matches_binomial() {
        let p = Pascal::new(40);
        for n in 0..=40 {
            for k in -2..=42 {
                assert_eq!(p.get(n, k), binomial(n, k));
            }
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(cubic_multinomial([1, 1, 1]), 6);
        assert_eq!(cubic_multinomial([2, 1, 0]), 3);
        assert_eq!(cubic_multinomial([0, 0, 3]), 1);
        assert_eq!(multinomial(&[2, 2, 2]), BigInt::from(90));
    }
}
