//! Degree data, factor triples and ternary cubics.
//!
//! For degrees `d = (d1, d2, d3)` with `d1 + d2 + d3 = r + 3` and triples
//! `(a_j, b_j, c_j)`, the cubic `F` is the coefficient of `H1^d1 H2^d2 H3^d3`
//! in
//!
//! ```text
//! (x1 H1 + x2 H2 + x3 H3)^3 · Π_j (a_j H1 + b_j H2 + c_j H3).
//! ```
//!
//! The raw coefficient of `x1^i x2^j x3^k` is the multinomial `3!/(i! j! k!)`
//! times the coefficient of `H^(d - (i, j, k))` in the product of the linear
//! factors; that second factor is the normalised coefficient `a_ijk`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinat::cubic_multinomial;
use crate::poly::{Assignment, Coefficient, FactorRow, Polynomial, Var, VariableTable};
use crate::ternary::{self, TernaryForm};
use crate::{Error, Result, Ring};

/// The degrees `(d1, d2, d3)`; the number of factors is `r = d1 + d2 + d3 - 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSpec {
    d: [u32; 3],
}

impl DegreeSpec {
    pub fn new(d1: u32, d2: u32, d3: u32) -> Result<Self> {
        if d1 == 0 || d2 == 0 || d3 == 0 {
            let r = (d1 + d2 + d3).saturating_sub(3);
            return Err(Error::InvalidDegreeSpec { d1, d2, d3, r });
        }
        Ok(DegreeSpec { d: [d1, d2, d3] })
    }

    /// Checks `d1 + d2 + d3 = r + 3` against an explicitly given `r`.
    pub fn with_factor_count(d: [u32; 3], r: u32) -> Result<Self> {
        let spec = Self::new(d[0], d[1], d[2])?;
        if spec.r() != r {
            return Err(Error::InvalidDegreeSpec { d1: d[0], d2: d[1], d3: d[2], r });
        }
        Ok(spec)
    }

    pub fn degrees(&self) -> [u32; 3] {
        self.d
    }

    pub fn d(&self, p: usize) -> u32 {
        self.d[p]
    }

    pub fn r(&self) -> u32 {
        self.d.iter().sum::<u32>() - 3
    }

    pub fn max_degree(&self) -> u32 {
        *self.d.iter().max().unwrap()
    }

    pub fn is_balanced(&self) -> bool {
        self.d[0] == self.d[1] && self.d[1] == self.d[2]
    }

    /// Degree of `S` in the row-`p` factor variables: `4 d_p - 4`.
    pub fn s_row_degree(&self, p: usize) -> u32 {
        4 * self.d[p] - 4
    }
}

impl fmt::Display for DegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.d[0], self.d[1], self.d[2])
    }
}

/// One linear factor `a H1 + b H2 + c H3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FactorTriple {
    /// Fresh variables `a_j, b_j, c_j` for the triple's column `j`.
    Symbolic,
    Numeric([BigInt; 3]),
}

impl FactorTriple {
    pub fn numeric(a: i64, b: i64, c: i64) -> Self {
        FactorTriple::Numeric([a.into(), b.into(), c.into()])
    }

    pub fn all_symbolic(r: u32) -> Vec<FactorTriple> {
        alloc::vec![FactorTriple::Symbolic; r as usize]
    }
}

/// Normalised coefficients `a_ijk` of the product construction, computed by
/// convolution over the H-tridegrees of the linear factors.
///
/// Works over any ring so that symbolic and numeric factors share one path.
pub fn product_coefficients<R: Ring>(d: [u32; 3], factors: &[[R; 3]], like: &R) -> TernaryForm<R> {
    let (w1, w2) = (d[0] as usize + 1, d[1] as usize + 1);
    let idx = |h1: u32, h2: u32| h1 as usize * w2 + h2 as usize;
    // layer[h1][h2] holds the coefficient of H^(h1, h2, j - h1 - h2) after j factors
    let mut layer = alloc::vec![like.zero_like(); w1 * w2];
    layer[0] = like.one_like();
    for (j, f) in factors.iter().enumerate() {
        let deg = j as u32 + 1;
        let mut next = alloc::vec![like.zero_like(); w1 * w2];
        for h1 in 0..=d[0] {
            for h2 in 0..=d[1] {
                if h1 + h2 > deg || deg - h1 - h2 > d[2] {
                    continue;
                }
                let h3 = deg - h1 - h2;
                let mut acc = like.zero_like();
                if h1 > 0 && !layer[idx(h1 - 1, h2)].is_zero() {
                    acc = acc.plus(&f[0].times(&layer[idx(h1 - 1, h2)]));
                }
                if h2 > 0 && !layer[idx(h1, h2 - 1)].is_zero() {
                    acc = acc.plus(&f[1].times(&layer[idx(h1, h2 - 1)]));
                }
                if h3 > 0 && !layer[idx(h1, h2)].is_zero() {
                    acc = acc.plus(&f[2].times(&layer[idx(h1, h2)]));
                }
                next[idx(h1, h2)] = acc;
            }
        }
        layer = next;
    }
    let r = factors.len() as u32;
    TernaryForm::from_fn(3, like, |e| {
        let h = [d[0] as i64 - e[0] as i64, d[1] as i64 - e[1] as i64, d[2] as i64 - e[2] as i64];
        if h.iter().any(|&v| v < 0) || (h[0] + h[1] + h[2]) as u32 != r {
            like.zero_like()
        } else {
            layer[idx(h[0] as u32, h[1] as u32)].clone()
        }
    })
}

/// A ternary cubic whose coefficients are polynomials over a variable table
/// (constants for numeric cubics).
#[derive(Debug, Clone, PartialEq)]
pub struct CubicForm<C: Coefficient = BigInt> {
    raw: TernaryForm<Polynomial<C>>,
    normalized: Option<TernaryForm<Polynomial<C>>>,
}

impl<C: Coefficient> CubicForm<C> {
    /// From raw x-monomial coefficients `c_ijk`. The normalised coefficients
    /// are kept when every `c_ijk` is divisible by its multinomial.
    pub fn from_raw(raw: TernaryForm<Polynomial<C>>) -> Result<Self> {
        if raw.degree() != 3 {
            return Err(Error::NotACubic);
        }
        let mut normalized = Vec::with_capacity(10);
        for (e, c) in raw.terms() {
            match c.div_exact_int(&BigInt::from(cubic_multinomial(e))) {
                Some(a) => normalized.push(a),
                None => break,
            }
        }
        let normalized = (normalized.len() == 10).then(|| TernaryForm::from_coeffs(3, normalized));
        Ok(CubicForm { raw, normalized })
    }

    /// From normalised coefficients: `f = Σ 3!/(i!j!k!) · a_ijk · x^(i,j,k)`.
    pub fn from_normalized(a: TernaryForm<Polynomial<C>>) -> Result<Self> {
        if a.degree() != 3 {
            return Err(Error::NotACubic);
        }
        let raw = TernaryForm::from_fn(3, a.ring_zero(), |e| a.get(e).scaled_i64(cubic_multinomial(e) as i64));
        Ok(CubicForm { raw, normalized: Some(a) })
    }

    /// From a polynomial homogeneous of degree 3 in `x1, x2, x3`.
    pub fn from_polynomial(p: &Polynomial<C>) -> Result<Self> {
        Self::from_raw(TernaryForm::<Polynomial<C>>::from_polynomial(p, 3)?)
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.raw.ring_zero().table()
    }

    pub fn raw(&self) -> &TernaryForm<Polynomial<C>> {
        &self.raw
    }

    /// `None` when some raw coefficient is not divisible by its multinomial.
    pub fn normalized(&self) -> Option<&TernaryForm<Polynomial<C>>> {
        self.normalized.as_ref()
    }

    pub fn raw_coeff(&self, e: [u32; 3]) -> &Polynomial<C> {
        self.raw.get(e)
    }

    pub fn normalized_coeff(&self, e: [u32; 3]) -> Option<&Polynomial<C>> {
        self.normalized.as_ref().map(|a| a.get(e))
    }

    pub fn to_polynomial(&self) -> Polynomial<C> {
        self.raw.to_polynomial()
    }

    /// True when no coefficient involves a variable.
    pub fn is_numeric(&self) -> bool {
        self.raw.coeffs().iter().all(|c| c.constant_value().is_some())
    }

    pub fn numeric_raw(&self) -> Option<TernaryForm<C>> {
        let coeffs = self.raw.coeffs().iter().map(|c| c.constant_value()).collect::<Option<Vec<_>>>()?;
        Some(TernaryForm::from_coeffs(3, coeffs))
    }

    /// Substitutes values for all non-x variables, yielding a rational cubic.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<TernaryForm<num_rational::BigRational>> {
        let coeffs = self.raw.coeffs().iter().map(|c| c.evaluate(assignment)).collect::<Result<Vec<_>>>()?;
        Ok(TernaryForm::from_coeffs(3, coeffs))
    }

    /// Substitutes `x_p -> x_{perm[p]}`.
    pub fn permute_vars(&self, perm: [usize; 3]) -> Self {
        let raw = self.raw.permute_vars(perm);
        let normalized = self.normalized.as_ref().map(|a| a.permute_vars(perm));
        CubicForm { raw, normalized }
    }

    pub fn scale(&self, k: &C) -> Self {
        let k = Polynomial::constant(self.table(), k.clone());
        CubicForm { raw: self.raw.scale(&k), normalized: self.normalized.as_ref().map(|a| a.scale(&k)) }
    }
}

impl CubicForm<BigInt> {
    /// `6 x1 x2 x3`, the cubic of `d = (1, 1, 1)`.
    pub fn triple_product() -> Self {
        let t = VariableTable::x_only();
        Self::from_polynomial(&Polynomial::parse_expression(&t, "6*x1*x2*x3").unwrap()).unwrap()
    }

    /// The Hesse pencil `x1^3 + x2^3 + x3^3 + 6 λ x1 x2 x3` with `λ` named `lambda`.
    pub fn hesse() -> Self {
        let t = VariableTable::builder().aux("lambda").unwrap().build();
        let p = Polynomial::parse_expression(&t, "x1^3 + x2^3 + x3^3 + 6*lambda*x1*x2*x3").unwrap();
        Self::from_polynomial(&p).unwrap()
    }

    /// The generic cubic `Σ 3!/(i!j!k!) a_ijk x^(i,j,k)` over auxiliary
    /// variables named `a_300, a_210, ..., a_003`.
    pub fn generic() -> Self {
        let mut b = VariableTable::builder();
        for e in ternary::exponents(3) {
            b = b.aux(&generic_name(e)).unwrap();
        }
        let t = b.build();
        let a = TernaryForm::from_fn(3, &Polynomial::zero(&t), |e| {
            Polynomial::var(&t, t.lookup(&generic_name(e)).unwrap())
        });
        Self::from_normalized(a).unwrap()
    }

    /// A numeric cubic from its normalised integer coefficients (storage order).
    pub fn from_normalized_ints(a: &[i64; 10]) -> Self {
        let t = VariableTable::x_only();
        let a = TernaryForm::from_coeffs(3, a.iter().map(|&v| Polynomial::from_int(&t, v)).collect());
        Self::from_normalized(a).unwrap()
    }
}

/// Name of the generic coefficient `a_ijk`.
pub fn generic_name(e: [u32; 3]) -> alloc::string::String {
    format!("a_{}{}{}", e[0], e[1], e[2])
}

/// The variable table used for a product construction: `x1, x2, x3` and,
/// if any factor is symbolic, all `r` triples `a_j, b_j, c_j`.
pub fn product_table(factors: &[FactorTriple]) -> Arc<VariableTable> {
    if factors.iter().any(|f| matches!(f, FactorTriple::Symbolic)) {
        VariableTable::with_factors(factors.len())
    } else {
        VariableTable::x_only()
    }
}

fn validate(spec: &DegreeSpec, factors: &[FactorTriple]) -> Result<()> {
    if factors.len() != spec.r() as usize {
        return Err(Error::WrongFactorCount { expected: spec.r() as usize, found: factors.len() });
    }
    for (index, f) in factors.iter().enumerate() {
        if let FactorTriple::Numeric(v) = f {
            if v.iter().any(Signed::is_negative) {
                return Err(Error::NegativeFactorEntry { index });
            }
        }
    }
    Ok(())
}

/// Builds `F` from degree data and factor triples.
pub fn build_product_cubic(spec: &DegreeSpec, factors: &[FactorTriple]) -> Result<CubicForm> {
    validate(spec, factors)?;
    let table = product_table(factors);
    let zero = Polynomial::zero(&table);
    let lin: Vec<[Polynomial; 3]> = factors
        .iter()
        .enumerate()
        .map(|(j, f)| match f {
            FactorTriple::Symbolic => FactorRow::ALL.map(|row| Polynomial::var(&table, table.factor(row, j).unwrap())),
            FactorTriple::Numeric(v) => core::array::from_fn(|p| Polynomial::constant(&table, v[p].clone())),
        })
        .collect();
    CubicForm::from_normalized(product_coefficients(spec.degrees(), &lin, &zero))
}

/// Numeric construction over plain integers, for factors given as values.
pub fn build_numeric_cubic(spec: &DegreeSpec, factors: &[[BigInt; 3]]) -> Result<TernaryForm<BigInt>> {
    let triples: Vec<FactorTriple> = factors.iter().map(|f| FactorTriple::Numeric(f.clone())).collect();
    validate(spec, &triples)?;
    let a = product_coefficients(spec.degrees(), factors, &BigInt::zero());
    Ok(TernaryForm::from_fn(3, &BigInt::zero(), |e| a.get(e) * BigInt::from(cubic_multinomial(e))))
}

/// Result of equalising the degrees by extra symbolic factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Padding {
    pub original: DegreeSpec,
    pub padded: DegreeSpec,
    /// For each added factor: its column and the row whose degree it raises.
    pub columns: Vec<(usize, FactorRow)>,
}

/// Raises every `d_p` to `d = max d_p` by appending `3d - d1 - d2 - d3`
/// symbolic triples. Each added triple is tagged with the row it stands in
/// for: monomials of `S` in which that triple appears only through the fourth
/// power of the tagged variable reproduce `S` of the original data.
pub fn pad_degrees(spec: &DegreeSpec, factors: &[FactorTriple]) -> (DegreeSpec, Vec<FactorTriple>, Padding) {
    let d = spec.max_degree();
    let padded = DegreeSpec::new(d, d, d).unwrap();
    let mut out = factors.to_vec();
    let mut columns = Vec::new();
    for (p, row) in FactorRow::ALL.iter().enumerate() {
        for _ in spec.d(p)..d {
            columns.push((out.len(), *row));
            out.push(FactorTriple::Symbolic);
        }
    }
    (padded, out, Padding { original: *spec, padded, columns })
}

impl Padding {
    /// Keeps the terms of a polynomial of the padded construction that are a
    /// pure `power`-th power of the tagged variable in every padding column,
    /// strips those powers, and rewrites the result over `target`.
    pub fn extract(&self, p: &Polynomial, power: u32, target: &Arc<VariableTable>) -> Result<Polynomial> {
        let table = p.table();
        let mut pattern: Vec<(Var, u32)> = Vec::new();
        for &(col, tagged) in &self.columns {
            for row in FactorRow::ALL {
                let v = table
                    .factor(row, col)
                    .ok_or_else(|| Error::UnknownVariable(format!("{}{}", ["a", "b", "c"][row.index()], col + 1)))?;
                pattern.push((v, if row == tagged { power } else { 0 }));
            }
        }
        p.coefficient_of(&pattern)?.rebase(target)
    }
}

/// `F` is non-degenerate when its Hessian determinant is not identically
/// zero. Symbolic cubics are tested after substituting `assignment`.
pub fn nondegeneracy_check(f: &CubicForm, assignment: Option<&Assignment>) -> bool {
    let h = crate::invariants::hessian_determinant(f);
    match assignment {
        None => !h.is_zero(),
        Some(a) => !h.substitute(a).is_zero(),
    }
}
