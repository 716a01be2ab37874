//! Report documents. Field order is fixed by the structs, so the same run
//! always serialises to the same bytes.

use cubinv_core::coeffalgo::appendix::AppendixValue;
use cubinv_core::cubic::DegreeSpec;
use cubinv_core::curvature::PointReport;
use cubinv_core::invariants::IdentityChecks;
use cubinv_core::linalg::Inertia;
use cubinv_core::positivity::{CrossCheck, PositivityReport, SignReport, Target, TypeValue};
use cubinv_core::BigInt;
use num_bigint::Sign;
use serde::Serialize;
use serde_json::Value;

use crate::json::{approx, int, rational, rationals};

/// Number of distinct smallest and largest values listed in a report.
pub const EXTREMES: usize = 8;

#[derive(Debug, Clone, Serialize)]
pub struct Filter {
    pub no_fourth_powers: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub value: Value,
    pub witness_matrix: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub matrix: String,
    pub value: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValueGroup {
    pub value: Value,
    pub types: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckJson {
    pub checked: usize,
    pub expanded_terms: usize,
    pub passed: bool,
    pub mismatches: Vec<MismatchJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MismatchJson {
    pub matrix: String,
    pub expected: Value,
    pub found: Value,
}

/// The `verify positivity` / `verify bound` document.
#[derive(Debug, Clone, Serialize)]
pub struct PositivityJson {
    pub kind: &'static str,
    pub spec: [u32; 3],
    pub filter: Filter,
    pub n_types: usize,
    pub n_nonzero: Value,
    pub holds: bool,
    pub min: Option<Witness>,
    pub max: Option<Witness>,
    pub zeros: Vec<String>,
    pub violations: Vec<Violation>,
    pub smallest: Vec<ValueGroup>,
    pub largest: Vec<ValueGroup>,
    pub cross_check: Option<CrossCheckJson>,
    pub runtime_seconds: Option<f64>,
    pub checkpoint: Option<String>,
}

fn witness(tv: &TypeValue) -> Witness {
    Witness { value: int(&tv.value), witness_matrix: tv.ty.to_string() }
}

fn groups(list: Vec<(BigInt, Vec<&cubinv_core::positivity::CanonicalType>)>) -> Vec<ValueGroup> {
    list.into_iter()
        .map(|(v, tys)| ValueGroup { value: int(&v), types: tys.iter().map(|t| t.to_string()).collect() })
        .collect()
}

pub fn cross_check_json(c: &CrossCheck) -> CrossCheckJson {
    CrossCheckJson {
        checked: c.checked,
        expanded_terms: c.expanded_terms,
        passed: c.passed(),
        mismatches: c
            .mismatches
            .iter()
            .map(|m| MismatchJson {
                matrix: if m.x == [0, 0, 0] {
                    m.matrix.to_string()
                } else {
                    format!("{},{},{}|{}", m.x[0], m.x[1], m.x[2], m.matrix)
                },
                expected: int(&m.expected),
                found: int(&m.found),
            })
            .collect(),
    }
}

impl PositivityJson {
    pub fn new(r: &PositivityReport, runtime_seconds: Option<f64>, checkpoint: Option<String>) -> Self {
        PositivityJson {
            kind: match r.target {
                Target::S => "positivity",
                Target::Bound => "bound",
            },
            spec: r.spec.degrees(),
            filter: Filter { no_fourth_powers: r.filter.no_full_powers },
            n_types: r.n_types,
            n_nonzero: int(&BigInt::from(r.n_nonzero)),
            holds: r.holds(),
            min: r.min.as_ref().map(witness),
            max: r.max.as_ref().map(witness),
            zeros: r.zeros.iter().map(|t| t.to_string()).collect(),
            violations: r
                .violations
                .iter()
                .map(|tv| Violation { matrix: tv.ty.to_string(), value: int(&tv.value) })
                .collect(),
            smallest: groups(r.smallest(EXTREMES)),
            largest: groups(r.largest(EXTREMES)),
            cross_check: r.cross_check.as_ref().map(cross_check_json),
            runtime_seconds,
            checkpoint,
        }
    }
}

/// CSV projection of a positivity report: one row per canonical type.
pub fn positivity_csv(r: &PositivityReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["type", "orbit_size", "value"]).expect("in-memory csv");
    for tv in &r.values {
        w.write_record([tv.ty.to_string(), tv.ty.orbit_size.to_string(), tv.value.to_string()]).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("ascii csv")
}

#[derive(Debug, Clone, Serialize)]
pub struct SignWitnessJson {
    pub x: [u8; 3],
    pub matrix: String,
    pub value: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignEntryJson {
    pub polynomial: String,
    pub expected: &'static str,
    pub n_terms: usize,
    pub n_violations: usize,
    pub witnesses: Vec<SignWitnessJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignsJson {
    pub kind: &'static str,
    pub spec: [u32; 3],
    pub holds: bool,
    pub entries: Vec<SignEntryJson>,
    /// `B11 B22 - B12^2 = f_33 H`, or null when skipped for size.
    pub adjoint_identity: Option<bool>,
    pub runtime_seconds: Option<f64>,
}

impl SignsJson {
    pub fn new(spec: &DegreeSpec, reports: &[SignReport], runtime_seconds: Option<f64>) -> Self {
        let entries = reports
            .iter()
            .flat_map(|r| &r.entries)
            .map(|e| SignEntryJson {
                polynomial: e.name.clone(),
                expected: match e.expected {
                    Sign::Plus => "positive",
                    Sign::Minus => "negative",
                    Sign::NoSign => "zero",
                },
                n_terms: e.n_terms,
                n_violations: e.n_violations,
                witnesses: e
                    .witnesses
                    .iter()
                    .map(|w| SignWitnessJson { x: w.x, matrix: w.matrix.to_string(), value: int(&w.value) })
                    .collect(),
            })
            .collect();
        SignsJson {
            kind: "signs",
            spec: spec.degrees(),
            holds: reports.iter().all(SignReport::holds),
            entries,
            adjoint_identity: reports.iter().find_map(|r| r.adjoint_identity),
            runtime_seconds,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityFailure {
    pub index: usize,
    pub cubic: String,
    pub failed: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentitiesJson {
    pub kind: &'static str,
    pub seed: u64,
    pub count: usize,
    pub range: i64,
    pub holds: bool,
    pub failures: Vec<IdentityFailure>,
    pub runtime_seconds: Option<f64>,
}

/// Names of the identities that failed, e.g. `lemma_1_1[1][2]` (one-based).
pub fn failed_identities(c: &IdentityChecks) -> Vec<String> {
    let mut out = Vec::new();
    if !c.adjugate {
        out.push("adjugate".into());
    }
    for (name, m) in [("lemma_1_1", &c.lemma_1_1), ("remark_1_2", &c.remark_1_2), ("adjoint", &c.adjoint)] {
        for i in 0..3 {
            for j in 0..3 {
                if !m[i][j] {
                    out.push(format!("{name}[{}][{}]", i + 1, j + 1));
                }
            }
        }
    }
    if !c.s_f {
        out.push("s_f".into());
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct InertiaJson {
    pub positive: u8,
    pub negative: u8,
    pub zero: u8,
}

impl From<Inertia> for InertiaJson {
    fn from(i: Inertia) -> Self {
        InertiaJson { positive: i.positive, negative: i.negative, zero: i.zero }
    }
}

/// One evaluated point of `curvature at` / `curvature scan`.
#[derive(Debug, Clone, Serialize)]
pub struct PointJson {
    pub x: Value,
    pub f: Value,
    #[serde(rename = "H")]
    pub big_h: Value,
    #[serde(rename = "S")]
    pub s: Value,
    pub level_set_curvature: Value,
    pub ricci: Vec<Value>,
    pub ricci_eigen_signs: InertiaJson,
    pub in_index_cone: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level_set_curvature_approx: Option<Value>,
}

impl PointJson {
    pub fn new(p: &PointReport, with_approx: bool) -> Self {
        PointJson {
            x: rationals(&p.x),
            f: rational(&p.f),
            big_h: rational(&p.big_h),
            s: rational(&p.s),
            level_set_curvature: rational(&p.level_set_curvature),
            ricci: p.ricci.iter().map(rationals).collect(),
            ricci_eigen_signs: p.ricci_signs.into(),
            in_index_cone: p.in_index_cone,
            level_set_curvature_approx: with_approx.then(|| approx(&p.level_set_curvature)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AppendixJson {
    pub s: u32,
    pub parts: Vec<Value>,
    pub total: Value,
    pub parts_dominate: bool,
}

impl From<&AppendixValue> for AppendixJson {
    fn from(v: &AppendixValue) -> Self {
        AppendixJson {
            s: v.s,
            parts: v.parts.iter().map(int).collect(),
            total: int(&v.total),
            parts_dominate: v.parts_dominate(),
        }
    }
}
