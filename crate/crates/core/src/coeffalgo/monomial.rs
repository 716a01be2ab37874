use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::quadratic::{pair_index, ColumnTypeCount, QuadraticTable, SplitMemo, TridegreeTable};
use crate::combinat::factorial;
use crate::cubic::DegreeSpec;
use crate::invariants::SIX_POW_4;
use crate::positivity::ExponentMatrix;
use crate::{Error, Result};

/// Coefficient of one monomial of `S`, with the contribution of every term
/// `(∂²B_pq/∂x3²)(∂²B_33/∂x_p∂x_q)` of the cofactor formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientBreakdown {
    pub coefficient: BigInt,
    /// Undivided contributions, indexed `[p][q]` (zero-based).
    pub by_entry: [[BigInt; 3]; 3],
}

impl CoefficientBreakdown {
    /// Contributions grouped over `p <= q` (off-diagonal pairs counted twice)
    /// and divided by `4 · 6^4`, in the order
    /// `(3,3), (2,3), (2,2), (1,3), (1,2), (1,1)` (one-based).
    pub fn by_pair(&self) -> [BigRational; 6] {
        const ORDER: [(usize, usize); 6] = [(2, 2), (1, 2), (1, 1), (0, 2), (0, 1), (0, 0)];
        let denom = BigInt::from(4 * SIX_POW_4);
        ORDER.map(|(p, q)| {
            let mut v = self.by_entry[p][q].clone();
            if p != q {
                v += &self.by_entry[q][p];
            }
            BigRational::new(v, denom.clone())
        })
    }
}

/// Computes coefficients of individual monomials of `S` from factorisations
/// `M = M1 · M2` into monomials with column sums 2, pairing the coefficient
/// of `M1` in `∂²B_pq/∂x3²` with that of `M2` in `∂²B_33/∂x_p∂x_q`.
///
/// Column-sum-2 monomials are handled through their [`ColumnTypeCount`], so
/// coefficients are memoised across monomials of the same spec.
#[derive(Debug)]
pub struct CoefficientEngine {
    spec: DegreeSpec,
    table: QuadraticTable,
    tridegrees: TridegreeTable,
    memo: SplitMemo,
}

/// Ways to split the columns of `M`: for each distinct column (sum 4), the
/// admissible `(M1 column, M2 column)` pairs with sum 2 each.
fn column_splits(c: [u8; 3]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..=c[0].min(2) {
        for b in 0..=c[1].min(2 - a) {
            let k = 2 - a - b;
            if k > c[2] {
                continue;
            }
            let first = [a, b, k];
            let second = [c[0] - a, c[1] - b, c[2] - k];
            if let (Some(i), Some(j)) = (pair_index(first), pair_index(second)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Compositions of `n` into `k` non-negative parts.
fn compositions(n: u32, k: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(n: u32, k: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if k == 1 {
            cur.push(n);
            f(cur);
            cur.pop();
            return;
        }
        for i in 0..=n {
            cur.push(i);
            rec(n - i, k - 1, cur, f);
            cur.pop();
        }
    }
    if k == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    rec(n, k, &mut Vec::with_capacity(k), f);
}

impl CoefficientEngine {
    pub fn new(spec: DegreeSpec) -> Self {
        Self::with_table(spec, QuadraticTable::derive())
    }

    pub fn with_table(spec: DegreeSpec, table: QuadraticTable) -> Self {
        let tridegrees = TridegreeTable::new(&table, spec.degrees());
        CoefficientEngine { spec, table, tridegrees, memo: SplitMemo::new() }
    }

    pub fn spec(&self) -> &DegreeSpec {
        &self.spec
    }

    pub fn quadratics(&self) -> &QuadraticTable {
        &self.table
    }

    pub fn tridegrees(&self) -> &TridegreeTable {
        &self.tridegrees
    }

    /// All factorisations of `m`, aggregated by the column counts of the two
    /// factors, with their multiplicities.
    fn factorisations(m: &ExponentMatrix) -> HashMap<(ColumnTypeCount, ColumnTypeCount), BigInt> {
        let mut groups: Vec<([u8; 3], u32)> = Vec::new();
        for c in m.with_sorted_columns().columns() {
            match groups.last_mut() {
                Some((last, n)) if last == c => *n += 1,
                _ => groups.push((*c, 1)),
            }
        }
        let mut states: HashMap<(ColumnTypeCount, ColumnTypeCount), BigInt> = HashMap::new();
        states.insert((ColumnTypeCount::default(), ColumnTypeCount::default()), BigInt::one());
        for (c, n) in groups {
            let splits = column_splits(c);
            let mut next: HashMap<(ColumnTypeCount, ColumnTypeCount), BigInt> = HashMap::new();
            let nf = factorial(n);
            let mut choices: Vec<(ColumnTypeCount, ColumnTypeCount, BigInt)> = Vec::new();
            compositions(n, splits.len(), &mut |parts| {
                let mut a = ColumnTypeCount::default();
                let mut b = ColumnTypeCount::default();
                let mut denom = BigInt::one();
                for (&k, &(i, j)) in parts.iter().zip(&splits) {
                    a.bump(i, k);
                    b.bump(j, k);
                    denom *= factorial(k);
                }
                choices.push((a, b, &nf / denom));
            });
            for ((a0, b0), w0) in &states {
                for (a, b, w) in &choices {
                    let mut a1 = *a0;
                    let mut b1 = *b0;
                    for i in 0..3 {
                        a1.p[i] += a.p[i];
                        a1.mixed[i] += a.mixed[i];
                        b1.p[i] += b.p[i];
                        b1.mixed[i] += b.mixed[i];
                    }
                    *next.entry((a1, b1)).or_insert_with(BigInt::zero) += w0 * w;
                }
            }
            states = next;
        }
        states
    }

    /// Coefficient of the monomial with exponent matrix `m` in `S`.
    pub fn coefficient(&mut self, m: &ExponentMatrix) -> Result<BigInt> {
        Ok(self.breakdown(m)?.coefficient)
    }

    pub fn breakdown(&mut self, m: &ExponentMatrix) -> Result<CoefficientBreakdown> {
        m.validate_for_s(&self.spec)?;
        let d = self.spec.degrees();
        let mut by_entry: [[BigInt; 3]; 3] = Default::default();
        let mut states: Vec<_> = Self::factorisations(m).into_iter().collect();
        // hash iteration order must not leak into anything observable
        states.sort_by_key(|x| x.0);
        for ((n1, n2), weight) in states {
            let t2 = n2.tridegree();
            for p in 0..3 {
                for q in 0..3 {
                    if self.tridegrees.r[p][q] != t2 {
                        continue;
                    }
                    let cq = self.memo.coefficient(&n1, &self.table.q[p][q], d);
                    if cq.is_zero() {
                        continue;
                    }
                    let cr = self.memo.coefficient(&n2, &self.table.r[p][q], d);
                    if cr.is_zero() {
                        continue;
                    }
                    by_entry[p][q] += &weight * cq * cr;
                }
            }
        }
        let total: BigInt = by_entry.iter().flatten().sum();
        let denom = BigInt::from(4 * SIX_POW_4);
        if !(&total % &denom).is_zero() {
            return Err(Error::NotDivisible { divisor: "4*6^4".into(), context: "monomial coefficient of S" });
        }
        Ok(CoefficientBreakdown { coefficient: total / denom, by_entry })
    }
}

/// One-shot coefficient of `m` in `S` for `spec`.
pub fn monomial_coefficient_in_s(m: &ExponentMatrix, spec: &DegreeSpec) -> Result<BigInt> {
    CoefficientEngine::new(*spec).coefficient(m)
}
