//! Dense homogeneous forms in `x1, x2, x3`.
//!
//! A [`TernaryForm`] of degree `n` stores one coefficient per exponent triple
//! `(i, j, k)` with `i + j + k = n`, in descending lexicographic order of
//! `(i, j)`. Coefficients live in any [`Ring`], so the same code differentiates
//! a numeric cubic and a cubic whose coefficients are polynomials in the factor
//! variables.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::poly::{Coefficient, Monomial, Polynomial, TermAccumulator, VariableTable};
use crate::{Error, Result, Ring};
use alloc::sync::Arc;

/// Number of monomials of degree `n` in three variables.
pub const fn slot_count(n: u32) -> usize {
    ((n as usize + 1) * (n as usize + 2)) / 2
}

/// Position of `x1^i x2^j x3^(n-i-j)` in the dense layout.
pub const fn slot(n: u32, i: u32, j: u32) -> usize {
    let a = (n - i) as usize;
    a * (a + 1) / 2 + (n - i - j) as usize
}

/// All exponent triples of degree `n` in storage order.
pub fn exponents(n: u32) -> impl Iterator<Item = [u32; 3]> {
    (0..=n).rev().flat_map(move |i| (0..=n - i).rev().map(move |j| [i, j, n - i - j]))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TernaryForm<R> {
    degree: u32,
    coeffs: Vec<R>,
    zero: R,
}

impl<R: Ring> TernaryForm<R> {
    /// The zero form of degree `n`; `like` supplies the coefficient ring.
    pub fn zero(n: u32, like: &R) -> Self {
        let zero = like.zero_like();
        TernaryForm { degree: n, coeffs: alloc::vec![zero.clone(); slot_count(n)], zero }
    }

    /// Builds a form from coefficients in storage order.
    pub fn from_coeffs(n: u32, coeffs: Vec<R>) -> Self {
        assert_eq!(coeffs.len(), slot_count(n), "wrong number of coefficients");
        let zero = coeffs[0].zero_like();
        TernaryForm { degree: n, coeffs, zero }
    }

    /// Builds a form by evaluating `f` on every exponent triple.
    pub fn from_fn(n: u32, like: &R, mut f: impl FnMut([u32; 3]) -> R) -> Self {
        let mut out = Self::zero(n, like);
        for (slot, e) in exponents(n).enumerate() {
            out.coeffs[slot] = f(e);
        }
        out
    }

    /// The linear form `x_p` (0-based `p`).
    pub fn coordinate(p: usize, like: &R) -> Self {
        let mut e = [0u32; 3];
        e[p] = 1;
        let mut out = Self::zero(1, like);
        out.set(e, like.one_like());
        out
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn ring_zero(&self) -> &R {
        &self.zero
    }

    pub fn get(&self, e: [u32; 3]) -> &R {
        debug_assert_eq!(e[0] + e[1] + e[2], self.degree);
        &self.coeffs[slot(self.degree, e[0], e[1])]
    }

    pub fn set(&mut self, e: [u32; 3], c: R) {
        assert_eq!(e[0] + e[1] + e[2], self.degree, "exponent triple has wrong degree");
        let s = slot(self.degree, e[0], e[1]);
        self.coeffs[s] = c;
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], &R)> {
        exponents(self.degree).zip(self.coeffs.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Only meaningful for degree 0.
    pub fn constant(&self) -> &R {
        assert_eq!(self.degree, 0, "not a constant form");
        &self.coeffs[0]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect();
        TernaryForm { degree: self.degree, coeffs, zero: self.zero.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "subtracting forms of different degree");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect();
        TernaryForm { degree: self.degree, coeffs, zero: self.zero.clone() }
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|c| c.times(k))
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.map(|c| c.scaled(k))
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.div_exact(k)).collect::<Option<Vec<_>>>()?;
        Some(TernaryForm { degree: self.degree, coeffs, zero: self.zero.clone() })
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        TernaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(f).collect(), zero: self.zero.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.degree + other.degree;
        let mut out = Self::zero(n, &self.zero);
        for (ea, a) in self.terms() {
            if a.is_zero() {
                continue;
            }
            for (eb, b) in other.terms() {
                if b.is_zero() {
                    continue;
                }
                let s = slot(n, ea[0] + eb[0], ea[1] + eb[1]);
                out.coeffs[s].add_assign_ref(&a.times(b));
            }
        }
        out
    }

    /// `∂/∂x_p` (0-based `p`); the derivative of a constant is the zero constant.
    pub fn partial(&self, p: usize) -> Self {
        assert!(p < 3, "variable index out of range");
        if self.degree == 0 {
            return Self::zero(0, &self.zero);
        }
        let n = self.degree - 1;
        let mut out = Self::zero(n, &self.zero);
        for (e, c) in self.terms() {
            if e[p] == 0 || c.is_zero() {
                continue;
            }
            let mut d = e;
            d[p] -= 1;
            out.set(d, c.scaled_i64(e[p] as i64));
        }
        out
    }

    pub fn second_partial(&self, p: usize, q: usize) -> Self {
        self.partial(p).partial(q)
    }

    /// Evaluation at a point whose coordinates lie in the coefficient ring.
    pub fn eval(&self, x: &[R; 3]) -> R {
        let mut pows: [Vec<R>; 3] = Default::default();
        for (p, powers) in pows.iter_mut().enumerate() {
            let mut cur = self.zero.one_like();
            powers.push(cur.clone());
            for _ in 0..self.degree {
                cur = cur.times(&x[p]);
                powers.push(cur.clone());
            }
        }
        let mut total = self.zero.clone();
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let t = c.times(&pows[0][e[0] as usize]).times(&pows[1][e[1] as usize]).times(&pows[2][e[2] as usize]);
            total.add_assign_ref(&t);
        }
        total
    }

    /// Substitutes `x_p -> x_{perm[p]}`.
    pub fn permute_vars(&self, perm: [usize; 3]) -> Self {
        let mut out = Self::zero(self.degree, &self.zero);
        for (e, c) in self.terms() {
            let mut d = [0u32; 3];
            for p in 0..3 {
                d[perm[p]] = e[p];
            }
            out.set(d, c.clone());
        }
        out
    }
}

/// Forms multiply like polynomials; sums are only defined between forms of
/// equal degree, which is all the determinant and cofactor code needs.
impl<R: Ring> Ring for TernaryForm<R> {
    fn zero_like(&self) -> Self {
        Self::zero(self.degree, &self.zero)
    }
    fn one_like(&self) -> Self {
        Self::from_coeffs(0, alloc::vec![self.zero.one_like()])
    }
    fn is_zero(&self) -> bool {
        TernaryForm::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, k: &BigInt) -> Self {
        self.scale_int(k)
    }
    fn div_exact(&self, k: &BigInt) -> Option<Self> {
        TernaryForm::div_exact(self, k)
    }
}

impl<C: Coefficient> TernaryForm<C> {
    /// The form as a sparse polynomial in the x-variables of `table`.
    pub fn to_polynomial(&self, table: &Arc<VariableTable>) -> Polynomial<C> {
        let terms = self.terms().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (x_monomial(table, e), c.clone()));
        Polynomial::from_terms(table, terms)
    }

    /// Reads a polynomial in `x1, x2, x3` only, homogeneous of degree `n`.
    pub fn from_polynomial(p: &Polynomial<C>, n: u32) -> Result<Self> {
        let zero = C::from_bigint(BigInt::from(0));
        let mut out = Self::zero(n, &zero);
        for (m, c) in p.terms() {
            let e = x_exponents(m, p.table());
            if e[0] + e[1] + e[2] != n || m.degree() != n {
                return Err(Error::NotACubic);
            }
            out.set(e, c.clone());
        }
        Ok(out)
    }
}

impl<C: Coefficient> TernaryForm<Polynomial<C>> {
    /// Flattens a form with polynomial coefficients into one polynomial.
    pub fn to_polynomial(&self) -> Polynomial<C> {
        let table = self.zero.table().clone();
        let mut acc = TermAccumulator::new(&table);
        for (e, c) in self.terms() {
            let xm = x_monomial(&table, e);
            for (m, k) in c.terms() {
                let m = m.checked_mul(&xm).expect("x exponents fit");
                acc.add(m, k.clone());
            }
        }
        acc.finish()
    }

    /// Splits a polynomial homogeneous of degree `n` in the x-variables into
    /// its x-coefficients.
    pub fn from_polynomial(p: &Polynomial<C>, n: u32) -> Result<Self> {
        let table = p.table();
        let mut parts: Vec<TermAccumulator<C>> = (0..slot_count(n)).map(|_| TermAccumulator::new(table)).collect();
        for (m, c) in p.terms() {
            let e = x_exponents(m, table);
            if e[0] + e[1] + e[2] != n {
                return Err(Error::NotACubic);
            }
            let mut rest = m.clone();
            for v in table.x_vars() {
                rest.set_exponent(v, 0);
            }
            parts[slot(n, e[0], e[1])].add(rest, c.clone());
        }
        Ok(Self::from_coeffs(n, parts.into_iter().map(TermAccumulator::finish).collect()))
    }
}

fn x_monomial(table: &Arc<VariableTable>, e: [u32; 3]) -> Monomial {
    let mut exps = alloc::vec![0u8; table.len()];
    for p in 0..3 {
        exps[p] = e[p] as u8;
    }
    Monomial::from_exponents(&exps)
}

fn x_exponents(m: &Monomial, table: &Arc<VariableTable>) -> [u32; 3] {
    table.x_vars().map(|v| m.exponent(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn layout() {
        assert_eq!(slot_count(3), 10);
        let all: Vec<_> = exponents(3).collect();
        assert_eq!(all[0], [3, 0, 0]);
        assert_eq!(all[9], [0, 0, 3]);
        for (s, e) in all.iter().enumerate() {
            assert_eq!(slot(3, e[0], e[1]), s);
        }
    }

    #[test]
    fn derivative_and_product() {
        let z = int(0);
        let x1 = TernaryForm::coordinate(0, &z);
        let x2 = TernaryForm::coordinate(1, &z);
        let x3 = TernaryForm::coordinate(2, &z);
        let f = x1.mul(&x2).mul(&x3).scale_int(&int(6));
        assert_eq!(*f.get([1, 1, 1]), int(6));
        let d = f.partial(2);
        assert_eq!(*d.get([1, 1, 0]), int(6));
        assert_eq!(f.eval(&[int(1), int(2), int(3)]), int(36));
        let t = VariableTable::x_only();
        let p = f.to_polynomial(&t);
        assert_eq!(TernaryForm::<BigInt>::from_polynomial(&p, 3).unwrap(), f);
    }
}
