//! Spec files, degree lists, cubic files and evaluation points.

use std::path::Path;

use cubinv_core::cubic::{build_product_cubic, CubicForm, DegreeSpec, FactorTriple};
use cubinv_core::poly::{Polynomial, VariableTable};
use cubinv_core::BigRational;
use serde::Deserialize;

use crate::error::{CliError, Result};

/// `{ "d": [d1, d2, d3], "factors": [[a, b, c] | "symbolic", ...] }`.
///
/// `factors` may be omitted, in which case every triple is symbolic.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub d: [u32; 3],
    #[serde(default)]
    pub factors: Option<Vec<FactorEntry>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum FactorEntry {
    Numeric([i64; 3]),
    Keyword(String),
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("spec file, line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(CliError::io(path))?;
        Self::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn resolve(&self) -> Result<(DegreeSpec, Vec<FactorTriple>)> {
        let spec = DegreeSpec::new(self.d[0], self.d[1], self.d[2])?;
        let factors = match &self.factors {
            None => FactorTriple::all_symbolic(spec.r()),
            Some(list) => list
                .iter()
                .enumerate()
                .map(|(j, f)| match f {
                    FactorEntry::Numeric([a, b, c]) => Ok(FactorTriple::numeric(*a, *b, *c)),
                    FactorEntry::Keyword(k) if k == "symbolic" => Ok(FactorTriple::Symbolic),
                    FactorEntry::Keyword(k) => {
                        Err(CliError::Input(format!("factor {j}: expected a triple or \"symbolic\", got \"{k}\"")))
                    }
                })
                .collect::<Result<_>>()?,
        };
        Ok((spec, factors))
    }

    pub fn build(&self) -> Result<CubicForm> {
        let (spec, factors) = self.resolve()?;
        Ok(build_product_cubic(&spec, &factors)?)
    }
}

/// `"3,3,3"` or `"3 3 3"`.
pub fn parse_degrees(s: &str) -> Result<DegreeSpec> {
    let d = parse_list::<u32>(s, "degree")?;
    let d: [u32; 3] = d.try_into().map_err(|_| CliError::Input(format!("expected three degrees, got `{s}`")))?;
    Ok(DegreeSpec::new(d[0], d[1], d[2])?)
}

/// A point or vector of three rationals such as `"1,1/2,3"`.
pub fn parse_point(s: &str) -> Result<[BigRational; 3]> {
    let v = parse_list::<BigRational>(s, "rational")?;
    v.try_into().map_err(|_| CliError::Input(format!("expected three coordinates, got `{s}`")))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<T>().map_err(|_| CliError::Input(format!("bad {what} `{w}`"))))
        .collect()
}

/// A cubic given either as canonical text (starting with a `vars` header) or
/// as an infix expression in `x1, x2, x3` and any other named variables.
pub fn parse_cubic(text: &str) -> Result<CubicForm> {
    let trimmed = text.trim_start();
    let p = if trimmed.starts_with("vars") || trimmed.starts_with('#') {
        Polynomial::from_canonical_text(text)?
    } else {
        let table = expression_table(text)?;
        Polynomial::parse_expression(&table, text.trim())?
    };
    Ok(CubicForm::from_polynomial(&p)?)
}

pub fn read_cubic(path: &Path) -> Result<CubicForm> {
    let text = std::fs::read_to_string(path).map_err(CliError::io(path))?;
    parse_cubic(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// `x1, x2, x3` followed by the other identifiers of `src` in order of first
/// appearance.
fn expression_table(src: &str) -> Result<std::sync::Arc<VariableTable>> {
    let mut names: Vec<String> = vec!["x1".into(), "x2".into(), "x3".into()];
    let mut cur = String::new();
    for ch in src.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            cur.push(ch);
        } else if !cur.is_empty() {
            let word = std::mem::take(&mut cur);
            let starts_alpha = word.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if starts_alpha && !names.contains(&word) {
                names.push(word);
            }
        }
    }
    Ok(VariableTable::from_names(&names)?)
}
