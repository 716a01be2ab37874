use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::{
    canonicalize_with_x, enumerate_bound_types, enumerate_s_types, CanonicalType, ExponentMatrix, TypeFilter,
};
use crate::coeffalgo::CoefficientEngine;
use crate::cubic::{build_product_cubic, CubicForm, DegreeSpec, FactorTriple};
use crate::invariants::{hessian_determinant, s_invariant};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Which polynomial a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// The invariant `S`.
    S,
    /// `9 H^2 - 6^6 S F^2`.
    Bound,
}

/// Coefficient shared by all monomials of one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeValue {
    pub ty: CanonicalType,
    pub value: BigInt,
}

/// A type whose coefficient differs between two computations, or between
/// members of its orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub x: [u8; 3],
    pub matrix: ExponentMatrix,
    pub expected: BigInt,
    pub found: BigInt,
}

/// Outcome of comparing type values against a full expansion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossCheck {
    pub checked: usize,
    /// Terms of the expansion (after filtering).
    pub expanded_terms: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Coefficient statistics over all canonical types of one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityReport {
    pub spec: DegreeSpec,
    pub target: Target,
    pub filter: TypeFilter,
    pub n_types: usize,
    /// Number of monomials with nonzero coefficient (orbits expanded).
    pub n_nonzero: u128,
    /// Smallest nonzero coefficient.
    pub min: Option<TypeValue>,
    pub max: Option<TypeValue>,
    pub zeros: Vec<CanonicalType>,
    pub violations: Vec<TypeValue>,
    /// Every type with its coefficient, in canonical order.
    pub values: Vec<TypeValue>,
    pub cross_check: Option<CrossCheck>,
}

impl PositivityReport {
    /// Builds a report from per-type coefficients, listed in canonical order.
    pub fn assemble(spec: DegreeSpec, target: Target, filter: TypeFilter, values: Vec<TypeValue>) -> Self {
        let mut n_nonzero = 0u128;
        let mut min: Option<&TypeValue> = None;
        let mut max: Option<&TypeValue> = None;
        let mut zeros = Vec::new();
        let mut violations = Vec::new();
        for tv in &values {
            if tv.value.is_zero() {
                zeros.push(tv.ty.clone());
                continue;
            }
            n_nonzero += tv.ty.orbit_size;
            if tv.value.is_negative() {
                violations.push(tv.clone());
            }
            if min.map_or(true, |m| tv.value < m.value) {
                min = Some(tv);
            }
            if max.map_or(true, |m| tv.value > m.value) {
                max = Some(tv);
            }
        }
        let (min, max) = (min.cloned(), max.cloned());
        PositivityReport {
            spec,
            target,
            filter,
            n_types: values.len(),
            n_nonzero,
            min,
            max,
            zeros,
            violations,
            values,
            cross_check: None,
        }
    }

    /// No coefficient is negative.
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// The `k` smallest distinct nonzero coefficients, each with its types.
    pub fn smallest(&self, k: usize) -> Vec<(BigInt, Vec<&CanonicalType>)> {
        let groups = self.by_value();
        groups.into_iter().take(k).collect()
    }

    /// The `k` largest distinct coefficients, each with its types.
    pub fn largest(&self, k: usize) -> Vec<(BigInt, Vec<&CanonicalType>)> {
        let groups = self.by_value();
        groups.into_iter().rev().take(k).collect()
    }

    fn by_value(&self) -> BTreeMap<BigInt, Vec<&CanonicalType>> {
        let mut groups: BTreeMap<BigInt, Vec<&CanonicalType>> = BTreeMap::new();
        for tv in self.values.iter().filter(|tv| !tv.value.is_zero()) {
            groups.entry(tv.value.clone()).or_default().push(&tv.ty);
        }
        groups
    }

    /// The coefficient recorded for a type, looked up by any member of it.
    pub fn value_of(&self, m: &ExponentMatrix) -> Result<Option<&BigInt>> {
        let ty = super::matrix::canonicalize(m, &self.spec)?;
        Ok(self.values.iter().find(|tv| tv.ty.matrix == ty.matrix).map(|tv| &tv.value))
    }
}

/// Coefficients of `S` for a slice of types through the factorisation
/// engine.
pub fn evaluate_s_types(engine: &mut CoefficientEngine, types: &[CanonicalType]) -> Result<Vec<TypeValue>> {
    types.iter().map(|ty| Ok(TypeValue { ty: ty.clone(), value: engine.coefficient(&ty.matrix)? })).collect()
}

/// The symbolic product cubic for `spec`.
pub fn symbolic_cubic(spec: &DegreeSpec) -> Result<CubicForm> {
    build_product_cubic(spec, &FactorTriple::all_symbolic(spec.r()))
}

/// `S` of the symbolic product cubic, fully expanded.
pub fn expanded_s(spec: &DegreeSpec) -> Result<Polynomial> {
    s_invariant(&symbolic_cubic(spec)?)
}

/// `9 H^2 - 6^6 S F^2` as one polynomial.
pub fn bound_polynomial(f: &CubicForm) -> Result<Polynomial> {
    let h = hessian_determinant(f);
    let s = s_invariant(f)?;
    let ff = f.to_polynomial();
    let nine_h2 = h.mul(&h)?.scale_int(&BigInt::from(9));
    let sf2 = s.mul(&ff)?.mul(&ff)?.scale_int(&BigInt::from(46656));
    nine_h2.sub(&sf2)
}

fn split_monomial(p: &Polynomial, m: &crate::poly::Monomial) -> Result<([u8; 3], ExponentMatrix)> {
    let table = p.table();
    let x = [0, 1, 2].map(|i| m.exponent(table.x(i)) as u8);
    Ok((x, ExponentMatrix::from_monomial(m, table)?))
}

fn monomial_of(p: &Polynomial, x: [u8; 3], matrix: &ExponentMatrix) -> Result<crate::poly::Monomial> {
    let table = p.table();
    let mut m = matrix.to_monomial(table)?;
    for (i, e) in x.iter().enumerate() {
        m = m.with_exponent(table.x(i), *e);
    }
    Ok(m)
}

/// Reads the coefficient of every type off a fully expanded polynomial and
/// checks that it is constant on every orbit and that no term falls outside
/// the listed types.
pub fn expanded_type_values(
    p: &Polynomial,
    spec: &DegreeSpec,
    types: &[CanonicalType],
    filter: TypeFilter,
) -> Result<(Vec<TypeValue>, CrossCheck)> {
    let mut values = Vec::with_capacity(types.len());
    let mut index: BTreeMap<(ExponentMatrix, [u8; 3]), usize> = BTreeMap::new();
    for (i, ty) in types.iter().enumerate() {
        let value = p.coefficient(&monomial_of(p, ty.x, &ty.matrix)?);
        values.push(TypeValue { ty: ty.clone(), value });
        index.insert((ty.matrix.clone(), ty.x), i);
    }
    let mut check = CrossCheck::default();
    let zero = BigInt::zero();
    for (m, c) in p.terms() {
        let (x, matrix) = split_monomial(p, m)?;
        if filter.no_full_powers && matrix.has_full_power() {
            continue;
        }
        check.expanded_terms += 1;
        let ty = canonicalize_with_x(&matrix, x, spec)?;
        let expected = match index.get(&(ty.matrix.clone(), ty.x)) {
            Some(&i) => &values[i].value,
            None => &zero,
        };
        if expected != c {
            check.mismatches.push(Mismatch { x, matrix, expected: expected.clone(), found: c.clone() });
        }
    }
    let listed: u128 = values.iter().filter(|tv| !tv.value.is_zero()).map(|tv| tv.ty.orbit_size).sum();
    if listed != check.expanded_terms as u128 {
        return Err(Error::InvalidMatrix(alloc::format!(
            "orbits account for {listed} terms, expansion has {}",
            check.expanded_terms
        )));
    }
    check.checked = types.len();
    Ok((values, check))
}

/// Compares type values against the full expansion of `S`.
pub fn cross_check_s(spec: &DegreeSpec, values: &[TypeValue], filter: TypeFilter) -> Result<CrossCheck> {
    let s = expanded_s(spec)?;
    let types: Vec<CanonicalType> = values.iter().map(|tv| tv.ty.clone()).collect();
    let (expanded, mut check) = expanded_type_values(&s, spec, &types, filter)?;
    for (a, b) in values.iter().zip(&expanded) {
        if a.value != b.value {
            check.mismatches.push(Mismatch {
                x: a.ty.x,
                matrix: a.ty.matrix.clone(),
                expected: b.value.clone(),
                found: a.value.clone(),
            });
        }
    }
    Ok(check)
}

/// Largest number of factor triples for which the engine's values are
/// compared against a full expansion of `S` inside [`check_conjecture_2_1`].
pub const CROSS_CHECK_MAX_R: u32 = 3;

/// Non-negativity of every coefficient of `S`, computed type by type.
pub fn check_conjecture_2_1(spec: &DegreeSpec, filter: TypeFilter) -> Result<PositivityReport> {
    let types = enumerate_s_types(spec, filter);
    let mut engine = CoefficientEngine::new(*spec);
    let values = evaluate_s_types(&mut engine, &types)?;
    let cross = if spec.r() <= CROSS_CHECK_MAX_R { Some(cross_check_s(spec, &values, filter)?) } else { None };
    let mut report = PositivityReport::assemble(*spec, Target::S, filter, values);
    report.cross_check = cross;
    Ok(report)
}

/// Non-negativity of every coefficient of `9 H^2 - 6^6 S F^2`, by full
/// expansion.
pub fn check_conjecture_2_2(spec: &DegreeSpec, filter: TypeFilter) -> Result<PositivityReport> {
    let p = bound_polynomial(&symbolic_cubic(spec)?)?;
    let types = enumerate_bound_types(spec, filter);
    let (values, check) = expanded_type_values(&p, spec, &types, filter)?;
    let mut report = PositivityReport::assemble(*spec, Target::Bound, filter, values);
    report.cross_check = Some(check);
    Ok(report)
}
