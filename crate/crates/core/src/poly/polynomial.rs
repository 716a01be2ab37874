use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::hash_map::Entry;
use hashbrown::HashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Coefficient, Monomial, Var, VariableTable};
use crate::{Error, Result, Ring};

/// Values for (some of) the variables of a table.
pub type Assignment = BTreeMap<Var, BigRational>;

/// Sparse polynomial: sorted list of `(monomial, coefficient)` pairs.
///
/// Terms are sorted in descending graded-lexicographic order and never carry
/// a zero coefficient, so structural equality is mathematical equality.
#[derive(Debug, Clone)]
pub struct Polynomial<C = BigInt> {
    table: Arc<VariableTable>,
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl<C: Coefficient> Eq for Polynomial<C> {}

fn same_table(a: &Arc<VariableTable>, b: &Arc<VariableTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        Polynomial { table: table.clone(), terms: Vec::new() }
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::constant(table, C::from_bigint(BigInt::one()))
    }

    pub fn constant(table: &Arc<VariableTable>, c: C) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.push((Monomial::one(table.len()), c));
        }
        p
    }

    pub fn from_int(table: &Arc<VariableTable>, n: i64) -> Self {
        Self::constant(table, C::from_bigint(BigInt::from(n)))
    }

    pub fn var(table: &Arc<VariableTable>, v: Var) -> Self {
        assert!(table.contains(v), "variable not in table");
        Self::term(table, Monomial::var(table.len(), v, 1), C::from_bigint(BigInt::one()))
    }

    pub fn term(table: &Arc<VariableTable>, m: Monomial, c: C) -> Self {
        assert_eq!(m.nvars(), table.len(), "monomial width does not match table");
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(table: &Arc<VariableTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc = TermAccumulator::new(table);
        for (m, c) in terms {
            acc.add(m, c);
        }
        acc.finish()
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` if the polynomial is a constant (zero included).
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::from_bigint(BigInt::zero())),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of an exact monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> C {
        // terms are sorted descending
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::from_bigint(BigInt::zero()),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `(min, max)` over terms of the degree in the given variables.
    pub fn degree_range_in(&self, vars: &[Var]) -> Option<(u32, u32)> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree_in(vars));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::MismatchedTables)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &C| if negate_other { c.negated() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), rhs(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { ca.minus(cb) } else { ca.plus(cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial { table: self.table.clone(), terms: out }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut acc = TermAccumulator::with_capacity(&self.table, self.terms.len().max(other.terms.len()));
        acc.add_product(self, other, None)?;
        Ok(acc.finish())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(&self.table);
        }
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.times(k))).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&C::from_bigint(k.clone()))
    }

    /// Divides every coefficient by `k`, failing if any division is inexact.
    pub fn div_exact_int(&self, k: &BigInt) -> Option<Self> {
        let terms =
            self.terms.iter().map(|(m, c)| c.div_exact(k).map(|q| (m.clone(), q))).collect::<Option<Vec<_>>>()?;
        Some(Polynomial { table: self.table.clone(), terms })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut result = Self::one(&self.table);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn partial_derivative(&self, v: Var) -> Result<Self> {
        if !self.table.contains(v) {
            return Err(self.table.var_error(v));
        }
        let mut terms: Vec<(Monomial, C)> = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(v);
                (e > 0).then(|| (m.with_exponent(v, (e - 1) as u8), c.scaled(&BigInt::from(e))))
            })
            .collect();
        // Lowering one exponent can reorder terms of different degree blocks.
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Polynomial { table: self.table.clone(), terms })
    }

    /// Coefficient of a partial monomial: keeps the terms whose exponents on
    /// the pattern variables match exactly and strips those variables.
    /// Variables absent from the pattern are left free.
    pub fn coefficient_of(&self, pattern: &[(Var, u32)]) -> Result<Self> {
        for &(v, _) in pattern {
            if !self.table.contains(v) {
                return Err(self.table.var_error(v));
            }
        }
        let mut terms: Vec<(Monomial, C)> = self
            .terms
            .iter()
            .filter(|(m, _)| pattern.iter().all(|&(v, e)| m.exponent(v) == e))
            .map(|(m, c)| {
                let mut m = m.clone();
                for &(v, _) in pattern {
                    m.set_exponent(v, 0);
                }
                (m, c.clone())
            })
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Polynomial { table: self.table.clone(), terms })
    }

    /// Full evaluation at rational values; every variable occurring in the
    /// polynomial must be assigned.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigRational> {
        let mut total = BigRational::zero();
        let mut cache: BTreeMap<(Var, u32), BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut value = c.to_rational();
            for (v, e) in m.iter() {
                let base =
                    assignment.get(&v).ok_or_else(|| Error::MissingAssignment(self.table.name(v).to_string()))?;
                let p = cache.entry((v, e)).or_insert_with(|| num_traits::pow(base.clone(), e as usize));
                value *= &*p;
            }
            total += value;
        }
        Ok(total)
    }

    /// Partial substitution of rational values; unassigned variables remain.
    pub fn substitute(&self, assignment: &Assignment) -> Polynomial<BigRational> {
        let mut acc = TermAccumulator::new(&self.table);
        for (m, c) in &self.terms {
            let mut value = c.to_rational();
            let mut rest = m.clone();
            for (v, e) in m.iter() {
                if let Some(x) = assignment.get(&v) {
                    value *= num_traits::pow(x.clone(), e as usize);
                    rest.set_exponent(v, 0);
                }
            }
            acc.add(rest, value);
        }
        acc.finish()
    }

    /// Substitution of integer values, keeping the coefficient domain.
    pub fn substitute_int(&self, values: &BTreeMap<Var, BigInt>) -> Self {
        let mut acc = TermAccumulator::new(&self.table);
        for (m, c) in &self.terms {
            let mut value = c.clone();
            let mut rest = m.clone();
            for (v, e) in m.iter() {
                if let Some(x) = values.get(&v) {
                    value = value.scaled(&num_traits::pow(x.clone(), e as usize));
                    rest.set_exponent(v, 0);
                }
            }
            acc.add(rest, value);
        }
        acc.finish()
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (m.clone(), d))
            })
            .collect();
        Polynomial { table: self.table.clone(), terms }
    }

    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map_coefficients(|c| c.to_rational())
    }

    /// Re-expresses the polynomial over another table by variable name; fails
    /// if a variable that actually occurs is missing from the target.
    pub fn rebase(&self, target: &Arc<VariableTable>) -> Result<Self> {
        let map: Vec<Option<Var>> = self.table.names().map(|n| target.lookup(n)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = alloc::vec![0u8; target.len()];
            for (v, e) in m.iter() {
                let w = map[v.index()].ok_or_else(|| Error::UnknownVariable(self.table.name(v).to_string()))?;
                exps[w.index()] = e as u8;
            }
            terms.push((Monomial::from_exponents(&exps), c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Variables that occur with a positive exponent somewhere.
    pub fn support_vars(&self) -> Vec<Var> {
        let mut seen = alloc::vec![false; self.table.len()];
        for (m, _) in &self.terms {
            for (v, _) in m.iter() {
                seen[v.index()] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| Var(i as u16)).collect()
    }
}

impl<C: Coefficient> Ring for Polynomial<C> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.table)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.table)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs).expect("ring operands share a variable table")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs).expect("ring operands share a variable table")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs).expect("ring operands share a variable table")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, k: &BigInt) -> Self {
        self.scale_int(k)
    }
    fn div_exact(&self, k: &BigInt) -> Option<Self> {
        self.div_exact_int(k)
    }
}

/// Hash-based accumulator for sums of many terms or products; produces a
/// canonical (sorted, zero-free) polynomial on [`TermAccumulator::finish`].
#[derive(Debug, Clone)]
pub struct TermAccumulator<C> {
    table: Arc<VariableTable>,
    map: HashMap<Monomial, C>,
}

impl<C: Coefficient> TermAccumulator<C> {
    pub fn new(table: &Arc<VariableTable>) -> Self {
        TermAccumulator { table: table.clone(), map: HashMap::new() }
    }

    pub fn with_capacity(table: &Arc<VariableTable>, n: usize) -> Self {
        TermAccumulator { table: table.clone(), map: HashMap::with_capacity(n) }
    }

    pub fn add(&mut self, m: Monomial, c: C) {
        match self.map.entry(m) {
            Entry::Occupied(mut e) => e.get_mut().add_assign_ref(&c),
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_polynomial(&mut self, p: &Polynomial<C>) -> Result<()> {
        if !same_table(&self.table, &p.table) {
            return Err(Error::MismatchedTables);
        }
        for (m, c) in &p.terms {
            self.add(m.clone(), c.clone());
        }
        Ok(())
    }

    /// Adds `weight * a * b` (weight defaults to one).
    pub fn add_product(&mut self, a: &Polynomial<C>, b: &Polynomial<C>, weight: Option<&C>) -> Result<()> {
        if !same_table(&self.table, &a.table) || !same_table(&self.table, &b.table) {
            return Err(Error::MismatchedTables);
        }
        for (ma, ca) in &a.terms {
            let ca = match weight {
                Some(w) => ca.times(w),
                None => ca.clone(),
            };
            for (mb, cb) in &b.terms {
                let m = ma.checked_mul(mb).map_err(|v| Error::ExponentOverflow(self.table.name(v).to_string()))?;
                self.add(m, ca.times(cb));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn finish(self) -> Polynomial<C> {
        let mut terms: Vec<(Monomial, C)> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { table: self.table, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(t: &Arc<VariableTable>, i: usize) -> Polynomial {
        Polynomial::var(t, t.x(i))
    }

    #[test]
    fn cancellation_and_sum() {
        let t = VariableTable::x_only();
        let x1 = x(&t, 0);
        assert!(x1.add(&x1.neg()).unwrap().is_zero());
        let lhs = x1.add(&x(&t, 1)).unwrap().add(&x(&t, 1)).unwrap();
        let rhs = Polynomial::from_terms(
            &t,
            [
                (Monomial::from_exponents(&[1, 0, 0]), BigInt::from(1)),
                (Monomial::from_exponents(&[0, 1, 0]), BigInt::from(2)),
            ],
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_of_binomial() {
        let t = VariableTable::x_only();
        let s = x(&t, 0).add(&x(&t, 1)).unwrap();
        let sq = s.mul(&s).unwrap();
        let expect = Polynomial::from_terms(
            &t,
            [
                (Monomial::from_exponents(&[2, 0, 0]), BigInt::from(1)),
                (Monomial::from_exponents(&[1, 1, 0]), BigInt::from(2)),
                (Monomial::from_exponents(&[0, 2, 0]), BigInt::from(1)),
            ],
        );
        assert_eq!(sq, expect);
        assert_eq!(s.mul(&Polynomial::one(&t)).unwrap(), s);
    }

    #[test]
    fn mismatched_tables() {
        let t1 = VariableTable::x_only();
        let t2 = VariableTable::with_factors(1);
        assert_eq!(x(&t1, 0).add(&x(&t2, 0)), Err(Error::MismatchedTables));
        assert_eq!(x(&t1, 0).mul(&x(&t2, 0)), Err(Error::MismatchedTables));
    }

    #[test]
    fn derivatives() {
        let t = VariableTable::x_only();
        let cube = x(&t, 0).pow(3).unwrap();
        assert_eq!(cube.partial_derivative(t.x(0)).unwrap(), x(&t, 0).pow(2).unwrap().scale_int(&3.into()));
        let p = x(&t, 0).mul(&x(&t, 1)).unwrap().mul(&x(&t, 2)).unwrap().scale_int(&6.into());
        assert_eq!(p.partial_derivative(t.x(2)).unwrap(), x(&t, 0).mul(&x(&t, 1)).unwrap().scale_int(&6.into()));
        assert!(p.partial_derivative(Var(9)).is_err());
    }

    #[test]
    fn coefficient_extraction() {
        let t = VariableTable::x_only();
        let (x1, x2) = (x(&t, 0), x(&t, 1));
        let p = x1.pow(2).unwrap().mul(&x2).unwrap().add(&x2.pow(3).unwrap().scale_int(&5.into())).unwrap();
        let c = p.coefficient_of(&[(t.x(0), 2), (t.x(1), 1)]).unwrap();
        assert_eq!(c, Polynomial::one(&t));
        let c4 = p.coefficient_of(&[(t.x(0), 4)]).unwrap();
        assert!(c4.is_zero());
    }

    #[test]
    fn evaluation() {
        let t = VariableTable::x_only();
        let p = x(&t, 0).pow(2).unwrap().mul(&x(&t, 1)).unwrap();
        let mut a = Assignment::new();
        a.insert(t.x(0), BigRational::from_integer(2.into()));
        assert!(matches!(p.evaluate(&a), Err(Error::MissingAssignment(_))));
        a.insert(t.x(1), BigRational::from_integer(3.into()));
        assert_eq!(p.evaluate(&a).unwrap(), BigRational::from_integer(12.into()));
    }
}
