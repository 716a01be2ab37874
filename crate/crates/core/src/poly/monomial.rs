use core::cmp::Ordering;

use smallvec::SmallVec;

use super::Var;

/// Dense exponent vector over a variable table, ordered graded-lexicographically.
///
/// The vector always has one slot per table variable; the total degree is
/// cached because it is the primary sort key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u8; 32]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    pub fn var(nvars: usize, v: Var, exp: u8) -> Self {
        let mut m = Self::one(nvars);
        m.exps[v.index()] = exp;
        m.degree = exp as u32;
        m
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps[v.index()] as u32
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product, or `None` (with the offending variable) on exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, Var> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (i, (&a, &b)) in self.exps.iter().zip(other.exps.iter()).enumerate() {
            match a.checked_add(b) {
                Some(e) => exps.push(e),
                None => return Err(Var(i as u16)),
            }
        }
        Ok(Monomial { exps, degree: self.degree + other.degree })
    }

    /// Copy with exponent of `v` replaced.
    pub fn with_exponent(&self, v: Var, exp: u8) -> Monomial {
        let mut m = self.clone();
        m.degree = m.degree - m.exps[v.index()] as u32 + exp as u32;
        m.exps[v.index()] = exp;
        m
    }

    pub(crate) fn set_exponent(&mut self, v: Var, exp: u8) {
        self.degree = self.degree - self.exps[v.index()] as u32 + exp as u32;
        self.exps[v.index()] = exp;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| (Var(i as u16), e as u32))
    }

    /// Sum of exponents over the given variables.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|v| self.exps[v.index()] as u32).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
