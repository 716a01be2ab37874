use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::cubic::DegreeSpec;
use crate::poly::{FactorRow, Monomial, Role, VariableTable};
use crate::{Error, Result};

/// Exponents of a monomial in the factor variables: row `p` holds the
/// exponents of `a_j` / `b_j` / `c_j`, column `j` belongs to triple `j`.
///
/// Stored column-major since columns are what gets permuted and split.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix {
    cols: Vec<[u8; 3]>,
}

impl ExponentMatrix {
    pub fn from_columns(cols: Vec<[u8; 3]>) -> Self {
        ExponentMatrix { cols }
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        if rows.len() != 3 {
            return Err(Error::InvalidMatrix("expected 3 rows".into()));
        }
        let r = rows[0].as_ref().len();
        if rows.iter().any(|row| row.as_ref().len() != r) {
            return Err(Error::InvalidMatrix("rows have different lengths".into()));
        }
        let mut cols = Vec::with_capacity(r);
        for j in 0..r {
            let mut c = [0u8; 3];
            for p in 0..3 {
                c[p] = u8::try_from(rows[p].as_ref()[j]).map_err(|_| Error::InvalidMatrix("entry too large".into()))?;
            }
            cols.push(c);
        }
        Ok(ExponentMatrix { cols })
    }

    /// Reads the monomial of a polynomial over a factor table.
    pub fn from_monomial(m: &Monomial, table: &VariableTable) -> Result<Self> {
        let mut cols = alloc::vec![[0u8; 3]; table.factor_columns()];
        for (v, e) in m.iter() {
            match table.role(v) {
                Role::Factor { row, column } => cols[column as usize][row.index()] = e as u8,
                Role::X(_) => {}
                Role::Aux => {
                    return Err(Error::InvalidMatrix(alloc::format!("auxiliary variable `{}`", table.name(v))))
                }
            }
        }
        Ok(ExponentMatrix { cols })
    }

    /// The factor-variable monomial over `table` (x-exponents zero).
    pub fn to_monomial(&self, table: &VariableTable) -> Result<Monomial> {
        let mut exps = alloc::vec![0u8; table.len()];
        for (j, c) in self.cols.iter().enumerate() {
            for row in FactorRow::ALL {
                if c[row.index()] == 0 {
                    continue;
                }
                let v = table
                    .factor(row, j)
                    .ok_or_else(|| Error::InvalidMatrix("matrix wider than the variable table".into()))?;
                exps[v.index()] = c[row.index()];
            }
        }
        Ok(Monomial::from_exponents(&exps))
    }

    pub fn r(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[[u8; 3]] {
        &self.cols
    }

    pub fn entry(&self, p: usize, j: usize) -> u32 {
        self.cols[j][p] as u32
    }

    pub fn row(&self, p: usize) -> Vec<u32> {
        self.cols.iter().map(|c| c[p] as u32).collect()
    }

    pub fn row_sums(&self) -> [u32; 3] {
        let mut s = [0u32; 3];
        for c in &self.cols {
            for p in 0..3 {
                s[p] += c[p] as u32;
            }
        }
        s
    }

    pub fn column_sums(&self) -> Vec<u32> {
        self.cols.iter().map(|c| c.iter().map(|&e| e as u32).sum()).collect()
    }

    /// The common column sum, if all columns agree (and there is a column).
    pub fn uniform_column_sum(&self) -> Option<u32> {
        let sums = self.column_sums();
        let first = *sums.first()?;
        sums.iter().all(|&s| s == first).then_some(first)
    }

    /// Every column repeated `m` times, as in `m · M`-style notation.
    pub fn replicate(&self, m: usize) -> Self {
        ExponentMatrix { cols: self.cols.iter().flat_map(|c| core::iter::repeat(*c).take(m)).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut cols = self.cols.clone();
        cols.extend_from_slice(&other.cols);
        ExponentMatrix { cols }
    }

    /// Row `p` of the result is row `perm[p]` of `self`.
    pub fn permute_rows(&self, perm: [usize; 3]) -> Self {
        ExponentMatrix { cols: self.cols.iter().map(|c| [c[perm[0]], c[perm[1]], c[perm[2]]]).collect() }
    }

    pub fn with_sorted_columns(&self) -> Self {
        let mut cols = self.cols.clone();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        ExponentMatrix { cols }
    }

    /// True if some entry equals the full column sum, i.e. the monomial
    /// contains a `column_sum`-th power of a single variable.
    pub fn has_full_power(&self) -> bool {
        self.cols.iter().any(|c| {
            let s: u8 = c.iter().sum();
            s > 0 && c.contains(&s)
        })
    }

    fn row_major_cmp(&self, other: &Self) -> Ordering {
        for p in 0..3 {
            for (a, b) in self.cols.iter().zip(&other.cols) {
                match a[p].cmp(&b[p]) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
        }
        Ordering::Equal
    }

    /// Checks the shape of a monomial of `S`: column sums 4 and row sums
    /// `4 d_p - 4`.
    pub fn validate_for_s(&self, spec: &DegreeSpec) -> Result<()> {
        if self.r() != spec.r() as usize {
            return Err(Error::InvalidMatrix(alloc::format!("expected {} columns, found {}", spec.r(), self.r())));
        }
        if self.column_sums().iter().any(|&s| s != 4) {
            return Err(Error::InvalidMatrix("column sums must all be 4".into()));
        }
        let want = [0, 1, 2].map(|p| spec.s_row_degree(p));
        if self.row_sums() != want {
            return Err(Error::InvalidMatrix(alloc::format!("row sums {:?} differ from {:?}", self.row_sums(), want)));
        }
        Ok(())
    }
}

impl fmt::Display for ExponentMatrix {
    /// Rows of comma-separated integers, separated by semicolons.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..3 {
            if p > 0 {
                f.write_str(";")?;
            }
            for (j, c) in self.cols.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", c[p])?;
            }
        }
        Ok(())
    }
}

impl FromStr for ExponentMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                let row = row.trim();
                if row.is_empty() {
                    return Ok(Vec::new());
                }
                row.split(',')
                    .map(|e| {
                        e.trim().parse::<u32>().map_err(|_| Error::InvalidMatrix(alloc::format!("bad entry `{e}`")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }
}

/// Row permutations allowed for a degree spec: only rows with equal `d_p`
/// may be exchanged.
pub fn row_group(spec: &DegreeSpec) -> Vec<[usize; 3]> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let d = spec.degrees();
    PERMS.iter().copied().filter(|p| (0..3).all(|i| d[p[i]] == d[i])).collect()
}

/// A monomial type: canonical representative and the size of its orbit under
/// column permutations and the allowed row permutations.
///
/// For monomials that also involve `x1, x2, x3` the x-exponents are permuted
/// together with the rows; they are zero for monomials of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalType {
    pub matrix: ExponentMatrix,
    pub x: [u8; 3],
    pub orbit_size: u128,
    /// Allowed row permutations fixing the type (up to column order).
    pub row_stabilizer: u8,
    pub row_group_order: u8,
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn canonical_key(m: &ExponentMatrix, x: [u8; 3], perm: [usize; 3]) -> (ExponentMatrix, [u8; 3]) {
    (m.permute_rows(perm).with_sorted_columns(), [x[perm[0]], x[perm[1]], x[perm[2]]])
}

fn key_cmp(a: &(ExponentMatrix, [u8; 3]), b: &(ExponentMatrix, [u8; 3])) -> Ordering {
    a.1.cmp(&b.1).then_with(|| a.0.row_major_cmp(&b.0))
}

/// Canonical type of a matrix with uniform column sums.
pub fn canonicalize(m: &ExponentMatrix, spec: &DegreeSpec) -> Result<CanonicalType> {
    canonicalize_with_x(m, [0, 0, 0], spec)
}

/// Canonical type of a monomial with x-exponents `x` and factor matrix `m`.
pub fn canonicalize_with_x(m: &ExponentMatrix, x: [u8; 3], spec: &DegreeSpec) -> Result<CanonicalType> {
    if m.r() > 0 && m.uniform_column_sum().is_none() {
        return Err(Error::InvalidMatrix("column sums differ".into()));
    }
    let group = row_group(spec);
    let keys: Vec<_> = group.iter().map(|&p| canonical_key(m, x, p)).collect();
    let best = keys.iter().min_by(|a, b| key_cmp(a, b)).unwrap().clone();
    let stab = keys.iter().filter(|k| key_cmp(k, &best) == Ordering::Equal).count();
    let mut multiplicity = 1u128;
    let cols = best.0.columns();
    let mut i = 0;
    while i < cols.len() {
        let mut j = i;
        while j < cols.len() && cols[j] == cols[i] {
            j += 1;
        }
        multiplicity *= factorial_u128(j - i);
        i = j;
    }
    let orbit_size = factorial_u128(m.r()) * group.len() as u128 / (stab as u128 * multiplicity);
    Ok(CanonicalType {
        matrix: best.0,
        x: best.1,
        orbit_size,
        row_stabilizer: stab as u8,
        row_group_order: group.len() as u8,
    })
}

/// True if `m` (with x-exponents `x`) is its own canonical representative.
pub fn is_canonical(m: &ExponentMatrix, x: [u8; 3], group: &[[usize; 3]]) -> bool {
    let me = (m.clone(), x);
    if m.with_sorted_columns() != *m {
        return false;
    }
    group.iter().all(|&p| key_cmp(&canonical_key(m, x, p), &me) != Ordering::Less)
}

/// Columns with entries summing to `n`, in descending lexicographic order.
pub fn columns_with_sum(n: u8) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for b in (0..=n - a).rev() {
            out.push([a, b, n - a - b]);
        }
    }
    out
}

/// Options for [`enumerate_types`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TypeFilter {
    /// Skip matrices with an entry equal to the column sum.
    pub no_full_powers: bool,
}

/// Every canonical type with `r` columns summing to `column_sum`, row sums
/// `row_sums` and x-exponents `x`, in increasing canonical order.
pub fn enumerate_types_with(
    spec: &DegreeSpec,
    column_sum: u8,
    row_sums: [u32; 3],
    x: [u8; 3],
    filter: TypeFilter,
) -> Vec<CanonicalType> {
    let r = spec.r() as usize;
    let group = row_group(spec);
    let mut cands = columns_with_sum(column_sum);
    if filter.no_full_powers {
        cands.retain(|c| !c.contains(&column_sum));
    }
    let mut out = Vec::new();
    let mut cur: Vec<[u8; 3]> = Vec::with_capacity(r);
    fn rec(
        cands: &[[u8; 3]],
        start: usize,
        remaining: [u32; 3],
        left: usize,
        cs: u32,
        cur: &mut Vec<[u8; 3]>,
        found: &mut dyn FnMut(&[[u8; 3]]),
    ) {
        if left == 0 {
            if remaining == [0, 0, 0] {
                found(cur);
            }
            return;
        }
        if remaining.iter().any(|&v| v > cs * left as u32) {
            return;
        }
        for (i, c) in cands.iter().enumerate().skip(start) {
            if (0..3).any(|p| c[p] as u32 > remaining[p]) {
                continue;
            }
            let next = [0, 1, 2].map(|p| remaining[p] - c[p] as u32);
            cur.push(*c);
            rec(cands, i, next, left - 1, cs, cur, found);
            cur.pop();
        }
    }
    let mut found = |cols: &[[u8; 3]]| {
        let m = ExponentMatrix::from_columns(cols.to_vec());
        if is_canonical(&m, x, &group) {
            out.push(canonicalize_with_x(&m, x, spec).expect("uniform column sums"));
        }
    };
    rec(&cands, 0, row_sums, r, column_sum as u32, &mut cur, &mut found);
    out.sort_by(|a, b| key_cmp(&(a.matrix.clone(), a.x), &(b.matrix.clone(), b.x)));
    out
}

/// Canonical types of monomials of `S` (column sums 4, row sums `4 d_p - 4`).
pub fn enumerate_s_types(spec: &DegreeSpec, filter: TypeFilter) -> Vec<CanonicalType> {
    let rows = [0, 1, 2].map(|p| spec.s_row_degree(p));
    enumerate_types_with(spec, 4, rows, [0, 0, 0], filter)
}

/// Canonical types of monomials of `9H² - 6⁶ S F²`: x-exponents summing to 6,
/// column sums 6 and row sums `6 d_p - 4 - x_p`.
pub fn enumerate_bound_types(spec: &DegreeSpec, filter: TypeFilter) -> Vec<CanonicalType> {
    let group = row_group(spec);
    let mut out = Vec::new();
    for x in columns_with_sum(6) {
        let rows: Option<Vec<u32>> = (0..3).map(|p| (6 * spec.d(p)).checked_sub(4 + x[p] as u32)).collect();
        let Some(rows) = rows else { continue };
        // only canonical x-triples: the row group acts on x as well
        if group.iter().any(|p| [x[p[0]], x[p[1]], x[p[2]]] < x) {
            continue;
        }
        out.extend(
            enumerate_types_with(spec, 6, [rows[0], rows[1], rows[2]], x, filter).into_iter().filter(|t| t.x == x),
        );
    }
    out
}

/// Total number of monomials represented by a list of types.
pub fn orbit_total(types: &[CanonicalType]) -> u128 {
    types.iter().map(|t| t.orbit_size).sum()
}

impl fmt::Display for CanonicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x != [0, 0, 0] {
            write!(f, "{},{},{}|", self.x[0], self.x[1], self.x[2])?;
        }
        write!(f, "{}", self.matrix)
    }
}
