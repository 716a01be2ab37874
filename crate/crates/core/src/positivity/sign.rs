use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};

use super::matrix::ExponentMatrix;
use super::report::symbolic_cubic;
use crate::cubic::DegreeSpec;
use crate::invariants::{cofactor_polynomials, cofactors, hessian};
use crate::poly::Polynomial;
use crate::Result;

/// Number of offending terms kept per polynomial.
pub const MAX_WITNESSES: usize = 20;

/// A term with the wrong sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignWitness {
    pub x: [u8; 3],
    pub matrix: ExponentMatrix,
    pub value: BigInt,
}

/// Sign check of one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignEntry {
    pub name: String,
    pub expected: Sign,
    pub n_terms: usize,
    pub n_violations: usize,
    pub witnesses: Vec<SignWitness>,
}

impl SignEntry {
    pub fn of(name: &str, p: &Polynomial, expected: Sign) -> Result<Self> {
        let table = p.table();
        let mut entry =
            SignEntry { name: name.into(), expected, n_terms: p.len(), n_violations: 0, witnesses: Vec::new() };
        for (m, c) in p.terms() {
            if c.sign() == expected {
                continue;
            }
            entry.n_violations += 1;
            if entry.witnesses.len() < MAX_WITNESSES {
                let x = [0, 1, 2].map(|i| m.exponent(table.x(i)) as u8);
                entry.witnesses.push(SignWitness {
                    x,
                    matrix: ExponentMatrix::from_monomial(m, table)?,
                    value: c.clone(),
                });
            }
        }
        Ok(entry)
    }

    pub fn holds(&self) -> bool {
        self.n_violations == 0
    }
}

/// Coefficient signs of a family of polynomials for one degree spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub spec: DegreeSpec,
    pub entries: Vec<SignEntry>,
    /// `B11 B22 - B12^2 = f_33 H` and the other entries of `adj(B) = H (f_pq)`,
    /// when checked.
    pub adjoint_identity: Option<bool>,
}

impl SignReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(SignEntry::holds) && self.adjoint_identity != Some(false)
    }
}

/// Largest number of factor triples for which [`check_theorem_3_2`] also
/// verifies `B11 B22 - B12^2 = f_33 H`; beyond it the products get large.
pub const IDENTITY_MAX_R: u32 = 4;

/// Every `B_pp` has only negative coefficients and every `B_pq`, `p != q`,
/// only positive ones.
pub fn check_theorem_3_1(spec: &DegreeSpec) -> Result<SignReport> {
    let f = symbolic_cubic(spec)?;
    let b = cofactors(&hessian(&f));
    let mut entries = Vec::new();
    for ((p, q), poly) in cofactor_polynomials(&b) {
        let expected = if p == q { Sign::Minus } else { Sign::Plus };
        entries.push(SignEntry::of(&alloc::format!("B{}{}", p + 1, q + 1), &poly, expected)?);
    }
    Ok(SignReport { spec: *spec, entries, adjoint_identity: None })
}

/// `H` has only positive coefficients. For at most [`IDENTITY_MAX_R`]
/// triples also checks `B11 B22 - B12^2 = f_33 H`, the entry of
/// `adj(B) = H (f_pq)` that writes `f_33 H` through cofactors.
pub fn check_theorem_3_2(spec: &DegreeSpec) -> Result<SignReport> {
    let f = symbolic_cubic(spec)?;
    let hm = hessian(&f);
    let b = cofactors(&hm);
    let h = (0..3).map(|q| hm.entry(0, q).mul(b.entry(q, 0))).reduce(|x, y| x.add(&y)).expect("three terms");
    let entries = alloc::vec![SignEntry::of("H", &h.to_polynomial(), Sign::Plus)?];
    let identity = (spec.r() <= IDENTITY_MAX_R).then(|| {
        let lhs = b.entry(0, 0).mul(b.entry(1, 1)).sub(&b.entry(0, 1).mul(b.entry(0, 1)));
        lhs == hm.entry(2, 2).mul(&h)
    });
    Ok(SignReport { spec: *spec, entries, adjoint_identity: identity })
}
