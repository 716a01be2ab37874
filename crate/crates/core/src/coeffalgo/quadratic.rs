use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cubic::CubicForm;
use crate::invariants::{self, CofactorMatrix, HessianMatrix};
use crate::positivity::ExponentMatrix;
use crate::{Error, Result};

/// One term `coeff · a_e · a_f` of a quadratic in the generic coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadTerm {
    pub e: [u32; 3],
    pub f: [u32; 3],
    pub coeff: BigInt,
}

/// A quadratic polynomial in the ten coefficients `a_ijk`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Quadratic {
    pub terms: Vec<QuadTerm>,
}

impl Quadratic {
    /// Tridegree of every term for degrees `d`: `(d - e) + (d - f)`, or `None`
    /// if some coefficient vanishes identically for these degrees.
    pub fn tridegree(&self, d: [u32; 3]) -> Option<[u32; 3]> {
        let mut out = None;
        for t in &self.terms {
            let td = [0, 1, 2].map(|p| (2 * d[p]).checked_sub(t.e[p] + t.f[p]));
            if td.iter().any(Option::is_none) {
                continue;
            }
            let td = td.map(Option::unwrap);
            match out {
                None => out = Some(td),
                Some(prev) => assert_eq!(prev, td, "quadratic is not tri-homogeneous"),
            }
        }
        out
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*a{}{}{}*a{}{}{}", t.coeff, t.e[0], t.e[1], t.e[2], t.f[0], t.f[1], t.f[2])?;
        }
        Ok(())
    }
}

/// The quadratics `∂²B_pq/∂x3²` and `∂²B_33/∂x_p∂x_q` of the generic cubic,
/// read off the symbolic cofactors (so all numerical factors are derived,
/// not typed in).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticTable {
    /// `q[p][s] = ∂²B_ps/∂x3²`.
    pub q: [[Quadratic; 3]; 3],
    /// `r[p][s] = ∂²B_33/∂x_p∂x_s`.
    pub r: [[Quadratic; 3]; 3],
}

impl QuadraticTable {
    pub fn derive() -> Self {
        let f = CubicForm::generic();
        let table = f.table().clone();
        let b = CofactorMatrix::of(&HessianMatrix::of(f.raw()));
        let (q, r) = invariants::s_quadratics(&b);
        let convert = |p: &crate::poly::Polynomial| {
            let mut terms = Vec::new();
            for (m, c) in p.terms() {
                let mut factors = Vec::new();
                for (v, e) in m.iter() {
                    let idx = parse_generic(table.name(v)).expect("generic coefficient name");
                    for _ in 0..e {
                        factors.push(idx);
                    }
                }
                assert_eq!(factors.len(), 2, "cofactor second derivative is not quadratic");
                terms.push(QuadTerm { e: factors[0], f: factors[1], coeff: c.clone() });
            }
            Quadratic { terms }
        };
        QuadraticTable {
            q: core::array::from_fn(|p| core::array::from_fn(|s| convert(&q[p][s]))),
            r: core::array::from_fn(|p| core::array::from_fn(|s| convert(&r[p][s]))),
        }
    }
}

fn parse_generic(name: &str) -> Option<[u32; 3]> {
    let digits = name.strip_prefix("a_")?.as_bytes();
    if digits.len() != 3 {
        return None;
    }
    Some([0, 1, 2].map(|i| (digits[i] - b'0') as u32))
}

/// Tridegrees of `∂²B_33/∂x_p∂x_q` (and complementary ones of
/// `∂²B_pq/∂x3²`) for given degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TridegreeTable {
    pub r: [[[u32; 3]; 3]; 3],
    pub q: [[[u32; 3]; 3]; 3],
}

impl TridegreeTable {
    pub fn new(table: &QuadraticTable, d: [u32; 3]) -> Self {
        let pick = |quad: &Quadratic| quad.tridegree(d).unwrap_or([0, 0, 0]);
        TridegreeTable {
            r: core::array::from_fn(|p| core::array::from_fn(|s| pick(&table.r[p][s]))),
            q: core::array::from_fn(|p| core::array::from_fn(|s| pick(&table.q[p][s]))),
        }
    }
}

/// Column counts of a monomial with column sums 2: squared columns
/// `a_j², b_j², c_j²` and mixed columns `a_j b_j, a_j c_j, b_j c_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ColumnTypeCount {
    pub p: [u32; 3],
    /// `(ũ, ṽ, w̃)`.
    pub mixed: [u32; 3],
}

/// Index of a column with sum 2: `0..3` squared, `3..6` mixed `ab, ac, bc`.
pub(crate) fn pair_index(c: [u8; 3]) -> Option<usize> {
    match c {
        [2, 0, 0] => Some(0),
        [0, 2, 0] => Some(1),
        [0, 0, 2] => Some(2),
        [1, 1, 0] => Some(3),
        [1, 0, 1] => Some(4),
        [0, 1, 1] => Some(5),
        _ => None,
    }
}

impl ColumnTypeCount {
    pub fn of(m: &ExponentMatrix) -> Result<Self> {
        let mut out = ColumnTypeCount::default();
        for c in m.columns() {
            let i = pair_index(*c).ok_or_else(|| Error::InvalidMatrix("column sums must be 2".into()))?;
            out.bump(i, 1);
        }
        Ok(out)
    }

    pub(crate) fn bump(&mut self, i: usize, n: u32) {
        if i < 3 {
            self.p[i] += n;
        } else {
            self.mixed[i - 3] += n;
        }
    }

    /// Row degrees `2p1 + ũ + ṽ`, `2p2 + ũ + w̃`, `2p3 + ṽ + w̃`.
    pub fn tridegree(&self) -> [u32; 3] {
        let [u, v, w] = self.mixed;
        [2 * self.p[0] + u + v, 2 * self.p[1] + u + w, 2 * self.p[2] + v + w]
    }

    pub fn columns(&self) -> u32 {
        self.p.iter().sum::<u32>() + self.mixed.iter().sum::<u32>()
    }

    /// One representative matrix (columns grouped by type).
    pub fn to_matrix(&self) -> ExponentMatrix {
        const COLS: [[u8; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];
        let counts = [self.p[0], self.p[1], self.p[2], self.mixed[0], self.mixed[1], self.mixed[2]];
        let cols = counts.iter().zip(COLS).flat_map(|(&n, c)| core::iter::repeat(c).take(n as usize)).collect();
        ExponentMatrix::from_columns(cols)
    }
}

/// Number of ways to write the monomial with column counts `n` as a monomial
/// of tridegree `first` times a monomial of the complementary tridegree, each
/// taking exactly one variable per column.
///
/// Dynamic programme over the columns, tracking the tridegree taken by the
/// first factor so far: a squared column gives the same variable to both
/// factors; a mixed column may hand either variable to the first factor.
pub fn split_count(n: &ColumnTypeCount, first: [u32; 3]) -> BigInt {
    let total = n.tridegree();
    let cols = n.columns();
    if first.iter().sum::<u32>() != cols || (0..3).any(|p| first[p] > total[p]) {
        return BigInt::zero();
    }
    let second = [0, 1, 2].map(|p| total[p] - first[p]);
    if second.iter().sum::<u32>() != cols {
        return BigInt::zero();
    }
    let w = cols as usize + 1;
    // state[h1 * w + h2]: ways for the first factor to have taken (h1, h2, k - h1 - h2)
    let mut state = alloc::vec![BigInt::zero(); w * w];
    state[0] = BigInt::one();
    let mut seen = 0usize;
    let fold = |options: &[usize], state: &mut Vec<BigInt>, seen: &mut usize| {
        let mut next = alloc::vec![BigInt::zero(); w * w];
        for h1 in 0..=*seen {
            for h2 in 0..=*seen - h1 {
                let cur = &state[h1 * w + h2];
                if cur.is_zero() {
                    continue;
                }
                for &row in options {
                    let (n1, n2) = match row {
                        0 => (h1 + 1, h2),
                        1 => (h1, h2 + 1),
                        _ => (h1, h2),
                    };
                    next[n1 * w + n2] += cur;
                }
            }
        }
        *seen += 1;
        *state = next;
    };
    const OPTIONS: [&[usize]; 6] = [&[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]];
    let counts = [n.p[0], n.p[1], n.p[2], n.mixed[0], n.mixed[1], n.mixed[2]];
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            fold(OPTIONS[i], &mut state, &mut seen);
        }
    }
    state[first[0] as usize * w + first[1] as usize].clone()
}

/// Memoised coefficients of column-sum-2 monomials in quadratics.
#[derive(Debug, Default)]
pub struct SplitMemo {
    counts: HashMap<(ColumnTypeCount, [u32; 3]), BigInt>,
}

impl SplitMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn split_count(&mut self, n: &ColumnTypeCount, first: [u32; 3]) -> BigInt {
        self.counts.entry((*n, first)).or_insert_with(|| split_count(n, first)).clone()
    }

    /// Coefficient of the monomial `n` in `quad` for degrees `d`.
    pub fn coefficient(&mut self, n: &ColumnTypeCount, quad: &Quadratic, d: [u32; 3]) -> BigInt {
        let total = n.tridegree();
        let mut sum = BigInt::zero();
        for t in &quad.terms {
            let Some(first) = sub3(d, t.e) else { continue };
            let Some(second) = sub3(d, t.f) else { continue };
            if (0..3).any(|p| first[p] + second[p] != total[p]) {
                continue;
            }
            let c = self.split_count(n, first);
            if !c.is_zero() {
                sum += &t.coeff * c;
            }
        }
        sum
    }
}

fn sub3(d: [u32; 3], e: [u32; 3]) -> Option<[u32; 3]> {
    Some([d[0].checked_sub(e[0])?, d[1].checked_sub(e[1])?, d[2].checked_sub(e[2])?])
}

/// Coefficient of a monomial with column sums 2 in a quadratic in the
/// `a_ijk` of the construction with degrees `d`. A monomial of the wrong
/// tridegree has coefficient 0.
pub fn coefficient_in_quadratic(m: &ExponentMatrix, quad: &Quadratic, d: [u32; 3]) -> Result<BigInt> {
    let n = ColumnTypeCount::of(m)?;
    Ok(SplitMemo::new().coefficient(&n, quad, d))
}
