//! Canonical line-oriented text form and a small expression reader.
//!
//! ```text
//! # optional comments
//! vars x1 x2 x3 a1 b1 c1
//! 6 x1^1 x2^1 x3^1 a1^1
//! -3/2 x1^2 c1^1
//! ```
//!
//! The first non-comment line lists the variable table. Each further line is
//! one term: the coefficient, then `name^exp` factors in table order. Terms are
//! written in descending graded-lexicographic order, so the text of a
//! polynomial is unique and `parse(write(p)) == p`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coefficient, Monomial, Polynomial, VariableTable};
use crate::{Error, Result};

impl<C: Coefficient> Polynomial<C> {
    /// Canonical serialization; see the module docs for the format.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vars {}", self.table());
        for (m, c) in self.terms() {
            let _ = write!(out, "{c}");
            for (v, e) in m.iter() {
                let _ = write!(out, " {}^{}", self.table().name(v), e);
            }
            out.push('\n');
        }
        out
    }

    /// Parses the canonical form, building the variable table from the header.
    pub fn from_canonical_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty input".into() })?;
        let mut words = header.split_whitespace();
        if words.next() != Some("vars") {
            return Err(Error::Parse { line: hline, message: "expected `vars` header".into() });
        }
        let names: Vec<&str> = words.collect();
        let table = VariableTable::from_names(&names).map_err(|e| at_line(e, hline))?;
        Self::parse_terms(&table, lines)
    }

    /// Parses canonical-form term lines (no header) against a given table.
    pub fn from_canonical_terms(table: &Arc<VariableTable>, text: &str) -> Result<Self> {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        Self::parse_terms(table, lines)
    }

    fn parse_terms<'a>(table: &Arc<VariableTable>, lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Self> {
        let mut terms: Vec<(Monomial, C)> = Vec::new();
        for (line, body) in lines {
            let err = |message: String| Error::Parse { line, message };
            let mut words = body.split_whitespace();
            let cword = words.next().unwrap_or("");
            let c = C::parse_coefficient(cword).ok_or_else(|| err(format!("bad coefficient `{cword}`")))?;
            if c.is_zero() {
                return Err(err("zero coefficient".into()));
            }
            let mut exps = vec![0u8; table.len()];
            for w in words {
                let (name, e) = w.split_once('^').ok_or_else(|| err(format!("expected name^exp, got `{w}`")))?;
                let v = table.lookup(name).ok_or_else(|| err(format!("unknown variable `{name}`")))?;
                let e: u8 = e.parse().map_err(|_| err(format!("bad exponent in `{w}`")))?;
                if e == 0 || exps[v.index()] != 0 {
                    return Err(err(format!("zero or repeated factor `{w}`")));
                }
                exps[v.index()] = e;
            }
            let m = Monomial::from_exponents(&exps);
            if let Some((prev, _)) = terms.last() {
                if *prev <= m {
                    return Err(err("terms out of order or repeated".into()));
                }
            }
            terms.push((m, c));
        }
        Ok(Polynomial::from_terms(table, terms))
    }

    /// Reads an infix expression such as `x1^3 + 6*lambda*x1*x2*x3 - 2/3*(x2+x3)^2`.
    pub fn parse_expression(table: &Arc<VariableTable>, src: &str) -> Result<Self> {
        let mut p = ExprParser { table, src: src.as_bytes(), pos: 0 };
        let value = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(value)
    }
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => Error::Parse { line, message: other.to_string() },
    }
}

struct ExprParser<'a> {
    table: &'a Arc<VariableTable>,
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse { line: 1, message: format!("{what} at column {}", self.pos + 1) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum<C: Coefficient>(&mut self) -> Result<Polynomial<C>> {
        let mut acc = Polynomial::zero(self.table);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product<C: Coefficient>(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    let inv = C::parse_coefficient(&format!("1/{d}"))
                        .ok_or_else(|| self.error("division needs rational coefficients"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power<C: Coefficient>(&mut self) -> Result<Polynomial<C>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent out of range"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom<C: Coefficient>(&mut self) -> Result<Polynomial<C>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.power::<C>()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.table, C::from_bigint(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                match self.table.lookup(name) {
                    Some(v) => Ok(Polynomial::var(self.table, v)),
                    None => {
                        self.pos = start;
                        Err(Error::UnknownVariable(name.to_string()))
                    }
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        digits.parse().map_err(|_| self.error("expected an integer"))
    }
}

/// Human-readable infix rendering, e.g. `6*x1*x2*x3 - x1^3`.
impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let one = C::from_bigint(BigInt::one());
        let minus_one = one.negated();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, c.negated()) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if m.is_one() || (mag != one && *c != minus_one) {
                write!(f, "{mag}")?;
                first = false;
            }
            for (v, e) in m.iter() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.table().name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
