use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Index of a variable inside its [`VariableTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub(crate) u16);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Which of the three variables of a factor triple `(a_j, b_j, c_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorRow {
    A = 0,
    B = 1,
    C = 2,
}

impl FactorRow {
    pub const ALL: [FactorRow; 3] = [FactorRow::A, FactorRow::B, FactorRow::C];

    pub fn index(self) -> usize {
        self as usize
    }

    fn letter(self) -> char {
        match self {
            FactorRow::A => 'a',
            FactorRow::B => 'b',
            FactorRow::C => 'c',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// One of `x1, x2, x3` (stored zero-based).
    X(u8),
    /// Variable of the `column`-th factor triple (zero-based).
    Factor { row: FactorRow, column: u32 },
    /// Any other scalar, e.g. the Hesse parameter or generic coefficients.
    Aux,
}

impl Role {
    /// Role implied by a variable name: `x1..x3`, `a<j>`/`b<j>`/`c<j>` with
    /// `j >= 1`, everything else auxiliary.
    pub fn infer(name: &str) -> Role {
        let mut chars = name.chars();
        let head = chars.next();
        let tail = chars.as_str();
        let numeric = !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()) && !tail.starts_with('0');
        match (head, numeric) {
            (Some('x'), true) if matches!(tail, "1" | "2" | "3") => Role::X(tail.as_bytes()[0] - b'1'),
            (Some(c @ ('a' | 'b' | 'c')), true) => match tail.parse::<u32>() {
                Ok(j) => {
                    let row = match c {
                        'a' => FactorRow::A,
                        'b' => FactorRow::B,
                        _ => FactorRow::C,
                    };
                    Role::Factor { row, column: j - 1 }
                }
                Err(_) => Role::Aux,
            },
            _ => Role::Aux,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub role: Role,
}

/// Ordered registry of variables. Ids `0, 1, 2` are always `x1, x2, x3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableTable {
    vars: Vec<Variable>,
    factor_columns: u32,
}

impl VariableTable {
    pub fn builder() -> VariableTableBuilder {
        VariableTableBuilder::new()
    }

    /// Table holding only `x1, x2, x3`.
    pub fn x_only() -> Arc<Self> {
        VariableTableBuilder::new().build()
    }

    /// `x1, x2, x3` followed by `a1, b1, c1, ..., ar, br, cr`.
    pub fn with_factors(r: usize) -> Arc<Self> {
        VariableTableBuilder::new().factor_columns(r).build()
    }

    /// Table from an explicit list of names, roles inferred by [`Role::infer`].
    /// The first three names must be `x1 x2 x3`.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        if names.len() < 3 || (0..3).any(|i| names[i].as_ref() != X_NAMES[i]) {
            return Err(Error::Parse { line: 1, message: "variable list must start with x1 x2 x3".to_string() });
        }
        let mut b = VariableTableBuilder::new();
        for n in &names[3..] {
            b = b.named(n.as_ref())?;
        }
        Ok(b.build())
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn x(&self, i: usize) -> Var {
        assert!(i < 3, "x-variable index out of range");
        Var(i as u16)
    }

    pub fn x_vars(&self) -> [Var; 3] {
        [Var(0), Var(1), Var(2)]
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.vars.iter().position(|v| v.name == name).map(|i| Var(i as u16))
    }

    pub fn get(&self, v: Var) -> Option<&Variable> {
        self.vars.get(v.index())
    }

    pub fn contains(&self, v: Var) -> bool {
        v.index() < self.vars.len()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.vars[v.index()].name
    }

    pub fn role(&self, v: Var) -> Role {
        self.vars[v.index()].role
    }

    /// Number of factor triples, i.e. one past the largest factor column.
    pub fn factor_columns(&self) -> usize {
        self.factor_columns as usize
    }

    pub fn factor(&self, row: FactorRow, column: usize) -> Option<Var> {
        self.vars.iter().position(|v| v.role == Role::Factor { row, column: column as u32 }).map(|i| Var(i as u16))
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, &Variable)> {
        self.vars.iter().enumerate().map(|(i, v)| (Var(i as u16), v))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|v| v.name.as_str())
    }

    pub(crate) fn var_error(&self, v: Var) -> Error {
        Error::UnknownVariable(format!("#{}", v.0))
    }
}

impl fmt::Display for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vars {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(&v.name)?;
        }
        Ok(())
    }
}

const X_NAMES: [&str; 3] = ["x1", "x2", "x3"];

/// Incremental construction of a [`VariableTable`].
#[derive(Debug, Clone)]
pub struct VariableTableBuilder {
    vars: Vec<Variable>,
}

impl Default for VariableTableBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl VariableTableBuilder {
    pub fn new() -> Self {
        let vars = (0..3).map(|i| Variable { name: X_NAMES[i].to_string(), role: Role::X(i as u8) }).collect();
        VariableTableBuilder { vars }
    }

    /// Appends the triples `a_j, b_j, c_j` for the next `r` columns.
    pub fn factor_columns(mut self, r: usize) -> Self {
        let start = self
            .vars
            .iter()
            .filter_map(|v| match v.role {
                Role::Factor { column, .. } => Some(column + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        for j in start..start + r as u32 {
            for row in FactorRow::ALL {
                self.vars.push(Variable {
                    name: format!("{}{}", row.letter(), j + 1),
                    role: Role::Factor { row, column: j },
                });
            }
        }
        self
    }

    /// Appends an auxiliary scalar; names that look like `x`/factor variables
    /// are rejected.
    pub fn aux(self, name: &str) -> Result<Self> {
        if Role::infer(name) != Role::Aux {
            return Err(Error::InvalidVariableName(name.to_string()));
        }
        self.named(name)
    }

    /// Appends a variable whose role is inferred from its name.
    pub fn named(mut self, name: &str) -> Result<Self> {
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::InvalidVariableName(name.to_string()));
        }
        if self.vars.iter().any(|v| v.name == name) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        let role = Role::infer(name);
        if matches!(role, Role::X(_)) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        if self.vars.len() >= u16::MAX as usize {
            return Err(Error::InvalidVariableName(name.to_string()));
        }
        self.vars.push(Variable { name: name.to_string(), role });
        Ok(self)
    }

    pub fn build(self) -> Arc<VariableTable> {
        let factor_columns = self
            .vars
            .iter()
            .filter_map(|v| match v.role {
                Role::Factor { column, .. } => Some(column + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        Arc::new(VariableTable { vars: self.vars, factor_columns })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roles_are_inferred_from_names() {
        assert_eq!(Role::infer("x2"), Role::X(1));
        assert_eq!(Role::infer("x4"), Role::Aux);
        assert_eq!(Role::infer("b12"), Role::Factor { row: FactorRow::B, column: 11 });
        assert_eq!(Role::infer("a0"), Role::Aux);
        assert_eq!(Role::infer("lambda"), Role::Aux);
        assert_eq!(Role::infer("a_210"), Role::Aux);
    }

    #[test]
    fn factor_table_layout() {
        let t = VariableTable::with_factors(2);
        let names: Vec<&str> = t.names().collect();
        assert_eq!(names, ["x1", "x2", "x3", "a1", "b1", "c1", "a2", "b2", "c2"]);
        assert_eq!(t.factor_columns(), 2);
        assert_eq!(t.factor(FactorRow::C, 1), t.lookup("c2"));
    }

    #[test]
    fn duplicates_and_bad_names_rejected() {
        assert!(VariableTable::builder().aux("lambda").unwrap().aux("lambda").is_err());
        assert!(VariableTable::builder().aux("x1").is_err());
        assert!(VariableTable::builder().aux("a1").is_err());
        assert!(VariableTable::builder().named("1abc").is_err());
        assert!(VariableTable::from_names(&["x1", "x3", "x2"]).is_err());
    }
}
