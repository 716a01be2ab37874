//! One function per subcommand.

use std::collections::BTreeMap;
use std::time::Instant;

use cubinv_core::coeffalgo::appendix::{parts, Sweep};
use cubinv_core::coeffalgo::{closed_form_t, t_family_matrix, CoefficientEngine};
use cubinv_core::cubic::{nondegeneracy_check, CubicForm, DegreeSpec};
use cubinv_core::curvature::{
    coordinate_identities, curvature_tensor, evaluate_point, theorem_1_3_sides, CurvaturePoint,
};
use cubinv_core::invariants::{cofactor_polynomials, invariants};
use cubinv_core::poly::{Assignment, Role};
use cubinv_core::positivity::{
    check_conjecture_2_2, check_theorem_3_1, check_theorem_3_2, expanded_s, ExponentMatrix, TypeFilter,
};
use cubinv_core::ternary::TernaryForm;
use cubinv_core::{BigInt, BigRational};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::drivers::{self, Lineage, PositivityOptions};
use crate::error::{CliError, Result, Verdict};
use crate::input;
use crate::json::{int, rational, rationals, to_text};
use crate::pool;
use crate::record::RunConfig;
use crate::report::*;

/// A finished command: the report text, its verdict and, for sharded runs,
/// how it was assembled.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub verdict: Verdict,
    /// A report was produced but an internal cross-check failed.
    pub inconsistent: bool,
    pub lineage: Lineage,
    pub warnings: Vec<String>,
}

impl Output {
    fn new(text: String, verdict: Verdict) -> Self {
        Output { text, verdict, inconsistent: false, lineage: Lineage::default(), warnings: Vec::new() }
    }

    pub fn exit_code(&self) -> u8 {
        if self.inconsistent {
            3
        } else {
            self.verdict.exit_code()
        }
    }
}

/// Options shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Common {
    pub workers: usize,
    pub format: Format,
    pub timing: bool,
}

impl Common {
    fn elapsed(&self, start: Instant) -> Option<f64> {
        self.timing.then(|| (start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0)
    }

    fn json_only(&self, what: &str) -> Result<()> {
        match self.format {
            Format::Json => Ok(()),
            Format::Csv => Err(CliError::Input(format!("{what} has no CSV form"))),
        }
    }
}

pub fn run(command: &Command, common: &Common) -> Result<Output> {
    match command {
        Command::Build(a) => build(a, common),
        Command::Invariants(a) => invariants_cmd(a, common),
        Command::Verify(VerifyCommand::Identities(a)) => verify_identities(a, common),
        Command::Verify(VerifyCommand::Positivity(a)) => verify_positivity(a, common),
        Command::Verify(VerifyCommand::Bound(a)) => verify_bound(a, common),
        Command::Verify(VerifyCommand::Signs(a)) => verify_signs(a, common),
        Command::Coeff(a) => coeff(a, common),
        Command::Curvature(CurvatureCommand::At(a)) => curvature_at(a, common),
        Command::Curvature(CurvatureCommand::Scan(a)) => curvature_scan(a, common),
        Command::Appendix(a) => appendix(a, common),
    }
}

/// The configuration snapshot stored in run records.
pub fn config_of(command: &Command, workers: usize) -> RunConfig {
    fn v<T: Serialize>(t: &T) -> Value {
        serde_json::to_value(t).expect("serializable arguments")
    }
    let (name, args) = match command {
        Command::Build(a) => ("build", v(a)),
        Command::Invariants(a) => ("invariants", v(a)),
        Command::Verify(VerifyCommand::Identities(a)) => ("verify identities", v(a)),
        Command::Verify(VerifyCommand::Positivity(a)) => ("verify positivity", v(a)),
        Command::Verify(VerifyCommand::Bound(a)) => ("verify bound", v(a)),
        Command::Verify(VerifyCommand::Signs(a)) => ("verify signs", v(a)),
        Command::Coeff(a) => ("coeff", v(a)),
        Command::Curvature(CurvatureCommand::At(a)) => ("curvature at", v(a)),
        Command::Curvature(CurvatureCommand::Scan(a)) => ("curvature scan", v(a)),
        Command::Appendix(a) => ("appendix", v(a)),
    };
    RunConfig { subcommand: name.into(), args, workers }
}

fn load_cubic(src: &CubicSource) -> Result<CubicForm> {
    match (&src.cubic, &src.expr, &src.spec) {
        (Some(path), _, _) => input::read_cubic(path),
        (_, Some(expr), _) => input::parse_cubic(expr),
        (_, _, Some(spec)) => input::SpecFile::read(spec)?.build(),
        _ => Err(CliError::Input("no cubic given".into())),
    }
}

/// Every non-`x` variable set to `1, 2, 3, 1, 2, 3, ...`.
fn test_assignment(f: &CubicForm) -> Assignment {
    f.table()
        .vars()
        .filter(|(_, var)| !matches!(var.role, Role::X(_)))
        .enumerate()
        .map(|(i, (v, _))| (v, BigRational::from_integer(BigInt::from(i % 3 + 1))))
        .collect()
}

fn degeneracy_warning(f: &CubicForm) -> Option<String> {
    if f.is_numeric() {
        (!nondegeneracy_check(f, None)).then(|| "degenerate cubic: the Hessian determinant vanishes identically".into())
    } else {
        (!nondegeneracy_check(f, Some(&test_assignment(f))))
            .then(|| "possibly degenerate cubic: the Hessian determinant vanishes at the test assignment".into())
    }
}

fn spec_guard(spec: &DegreeSpec, long: bool, what: &str) -> Result<()> {
    if spec.max_degree() >= 4 && !long {
        return Err(CliError::Input(format!("{what} with some d_p >= 4 is a long run; pass --long")));
    }
    Ok(())
}

fn build(a: &BuildArgs, common: &Common) -> Result<Output> {
    common.json_only("build")?;
    let f = input::SpecFile::read(&a.spec)?.build()?;
    let mut out = Output::new(f.to_polynomial().to_canonical_text(), Verdict::Verified);
    out.warnings.extend(degeneracy_warning(&f));
    Ok(out)
}

fn invariants_cmd(a: &CubicSource, common: &Common) -> Result<Output> {
    common.json_only("invariants")?;
    let f = load_cubic(a)?;
    let inv = invariants(&f)?;
    let cof: BTreeMap<String, String> = cofactor_polynomials(&inv.cofactors)
        .into_iter()
        .map(|((p, q), poly)| (format!("B{}{}", p + 1, q + 1), poly.to_string()))
        .collect();
    let warning = degeneracy_warning(&f);
    let doc = json!({
        "cubic": f.to_polynomial().to_string(),
        "S": inv.s.to_string(),
        "H": inv.h.to_polynomial().to_string(),
        "cofactors": cof,
        "nondegenerate": warning.is_none(),
        "warnings": warning.iter().collect::<Vec<_>>(),
    });
    let mut out = Output::new(to_text(&doc), Verdict::Verified);
    out.warnings.extend(warning);
    Ok(out)
}

fn verify_identities(a: &IdentitiesArgs, common: &Common) -> Result<Output> {
    common.json_only("verify identities")?;
    let start = Instant::now();
    let cubics = drivers::random_cubics(a.seed, a.count, a.range);
    let checks = drivers::check_identities(&cubics, common.workers)?;
    let failures: Vec<IdentityFailure> = checks
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.all())
        .map(|(index, c)| IdentityFailure {
            index,
            cubic: cubics[index].to_polynomial().to_string(),
            failed: failed_identities(c),
        })
        .collect();
    let doc = IdentitiesJson {
        kind: "identities",
        seed: a.seed,
        count: a.count,
        range: a.range,
        holds: failures.is_empty(),
        failures,
        runtime_seconds: common.elapsed(start),
    };
    Ok(Output::new(to_text(&doc), Verdict::from_holds(doc.holds)))
}

fn verify_positivity(a: &PositivityArgs, common: &Common) -> Result<Output> {
    let start = Instant::now();
    let spec = input::parse_degrees(&a.d)?;
    spec_guard(&spec, a.long, "verify positivity")?;
    let opts = PositivityOptions {
        filter: TypeFilter { no_full_powers: a.no_fourth_powers },
        workers: common.workers,
        shard_size: a.shard_size,
        checkpoint_dir: a.checkpoint.as_deref(),
        cross_check: a.cross_check,
    };
    let (report, lineage) = drivers::run_positivity(&spec, &opts)?;
    let text = match common.format {
        Format::Json => to_text(&PositivityJson::new(&report, common.elapsed(start), lineage.digest.clone())),
        Format::Csv => positivity_csv(&report),
    };
    let mut out = Output::new(text, Verdict::from_holds(report.holds()));
    out.inconsistent = report.cross_check.as_ref().is_some_and(|c| !c.passed());
    out.lineage = lineage;
    Ok(out)
}

fn verify_bound(a: &BoundArgs, common: &Common) -> Result<Output> {
    let start = Instant::now();
    let spec = input::parse_degrees(&a.d)?;
    if spec.r() >= 4 && !a.long {
        return Err(CliError::Input("verify bound with four or more factor triples is a long run; pass --long".into()));
    }
    let filter = TypeFilter { no_full_powers: a.no_fourth_powers };
    let report = pool::install(common.workers, || check_conjecture_2_2(&spec, filter))??;
    let text = match common.format {
        Format::Json => to_text(&PositivityJson::new(&report, common.elapsed(start), None)),
        Format::Csv => positivity_csv(&report),
    };
    let mut out = Output::new(text, Verdict::from_holds(report.holds()));
    out.inconsistent = report.cross_check.as_ref().is_some_and(|c| !c.passed());
    Ok(out)
}

fn verify_signs(a: &SignsArgs, common: &Common) -> Result<Output> {
    common.json_only("verify signs")?;
    let start = Instant::now();
    let spec = input::parse_degrees(&a.d)?;
    spec_guard(&spec, a.long, "verify signs")?;
    let (b, h) =
        pool::install(common.workers, || rayon::join(|| check_theorem_3_1(&spec), || check_theorem_3_2(&spec)))?;
    let doc = SignsJson::new(&spec, &[b?, h?], common.elapsed(start));
    let mut out = Output::new(to_text(&doc), Verdict::from_holds(doc.holds));
    out.inconsistent = doc.adjoint_identity == Some(false);
    Ok(out)
}

/// Degrees from the row sums `4 d_p - 4` of an `S`-monomial.
fn infer_spec(m: &ExponentMatrix) -> Result<DegreeSpec> {
    let rows = m.row_sums();
    if rows.iter().any(|s| s % 4 != 0) {
        return Err(CliError::Input(format!("row sums {rows:?} are not multiples of 4; pass --d")));
    }
    Ok(DegreeSpec::new(rows[0] / 4 + 1, rows[1] / 4 + 1, rows[2] / 4 + 1)?)
}

fn int_or_rational(q: &BigRational) -> Value {
    if q.is_integer() {
        int(&q.to_integer())
    } else {
        rational(q)
    }
}

fn expansion_coefficient(m: &ExponentMatrix, spec: &DegreeSpec) -> Result<BigInt> {
    let s = expanded_s(spec)?;
    Ok(s.coefficient(&m.to_monomial(s.table())?))
}

fn coeff(a: &CoeffArgs, common: &Common) -> Result<Output> {
    common.json_only("coeff")?;
    if let Some(t) = a.closed_form {
        let closed = closed_form_t(t);
        let (m, spec) = t_family_matrix(t);
        let engine = CoefficientEngine::new(spec).coefficient(&m)?;
        let agrees = engine == closed;
        let doc = json!({
            "t": t,
            "matrix": m.to_string(),
            "spec": spec.degrees(),
            "coefficient": int(&closed),
            "method": "closed_form",
            "cross_check": { "method": "factorization", "coefficient": int(&engine), "agrees": agrees },
        });
        let mut out = Output::new(to_text(&doc), Verdict::Verified);
        out.inconsistent = !agrees;
        return Ok(out);
    }
    let base: ExponentMatrix = a.matrix.as_deref().unwrap_or_default().parse()?;
    if a.replicate == 0 {
        return Err(CliError::Input("--replicate must be at least 1".into()));
    }
    let m = base.replicate(a.replicate);
    let spec = match &a.d {
        Some(d) => input::parse_degrees(d)?,
        None => infer_spec(&m)?,
    };
    m.validate_for_s(&spec)?;
    let b = CoefficientEngine::new(spec).breakdown(&m)?;
    let cross = if a.cross_check { Some(expansion_coefficient(&m, &spec)?) } else { None };
    let agrees = cross.as_ref().map(|c| *c == b.coefficient);
    let mut doc = json!({
        "matrix": m.to_string(),
        "spec": spec.degrees(),
        "coefficient": int(&b.coefficient),
        "method": "factorization",
        "cross_check": cross.as_ref().map(|c| json!({ "method": "expansion", "coefficient": int(c), "agrees": agrees })),
    });
    if a.breakdown {
        let pairs = ["(3,3)", "(2,3)", "(2,2)", "(1,3)", "(1,2)", "(1,1)"];
        let by_pair: serde_json::Map<String, Value> =
            pairs.iter().zip(b.by_pair()).map(|(k, v)| (k.to_string(), int_or_rational(&v))).collect();
        doc["breakdown"] = Value::Object(by_pair);
    }
    let mut out = Output::new(to_text(&doc), Verdict::Verified);
    out.inconsistent = agrees == Some(false);
    Ok(out)
}

fn numeric_form(f: &CubicForm) -> Result<TernaryForm<BigRational>> {
    let raw =
        f.numeric_raw().ok_or_else(|| CliError::Input("curvature needs a cubic with numeric coefficients".into()))?;
    Ok(raw.map_to_rational())
}

fn curvature_at(a: &AtArgs, common: &Common) -> Result<Output> {
    common.json_only("curvature at")?;
    let f = numeric_form(&load_cubic(&a.source)?)?;
    let x = input::parse_point(&a.x)?;
    let report = evaluate_point(&f, x.clone())?;
    let mut doc = serde_json::to_value(PointJson::new(&report, false)).expect("point report");
    let mut holds = true;
    if let (Some(xi), Some(eta)) = (&a.xi, &a.eta) {
        let (xi, eta) = (input::parse_point(xi)?, input::parse_point(eta)?);
        let p = CurvaturePoint::new(&f, x)?;
        let t = curvature_tensor(&p);
        let (lhs, rhs) = theorem_1_3_sides(&p, &t, &xi, &eta);
        let coords = coordinate_identities(&p, &t);
        holds = lhs == rhs && coords.iter().all(|&b| b) && t.symmetries_hold();
        doc["sectional"] = json!({
            "xi": rationals(&xi),
            "eta": rationals(&eta),
            "lhs": rational(&lhs),
            "rhs": rational(&rhs),
            "holds": lhs == rhs,
            "coordinate_identities": coords,
            "symmetries": t.symmetries_hold(),
        });
    }
    Ok(Output::new(to_text(&doc), Verdict::from_holds(holds)))
}

fn curvature_scan(a: &ScanArgs, common: &Common) -> Result<Output> {
    common.json_only("curvature scan")?;
    if a.grid == 0 || a.denominator == 0 {
        return Err(CliError::Input("--grid and --denominator must be positive".into()));
    }
    let f = numeric_form(&load_cubic(&a.source)?)?;
    let den = BigInt::from(a.denominator);
    let coord = |k: u32| BigRational::new(BigInt::from(k), den.clone());
    let mut points = Vec::new();
    for i in 1..=a.grid {
        for j in 1..=a.grid {
            for k in 1..=a.grid {
                points.push([coord(i), coord(j), coord(k)]);
            }
        }
    }
    let results: Vec<Value> = pool::install(common.workers, || {
        points
            .par_iter()
            .map(|x| match evaluate_point(&f, x.clone()) {
                Ok(r) => serde_json::to_value(PointJson::new(&r, true)).expect("point report"),
                Err(e) => json!({ "x": rationals(x), "error": e.to_string() }),
            })
            .collect()
    })?;
    let evaluated: Vec<&Value> = results.iter().filter(|r| r.get("error").is_none()).collect();
    let psd = evaluated.iter().filter(|r| r["ricci_eigen_signs"]["negative"] == 0).count();
    let in_cone = evaluated.iter().filter(|r| r["in_index_cone"] == true).count();
    let doc = json!({
        "grid": a.grid,
        "denominator": a.denominator,
        "n_points": results.len(),
        "n_evaluated": evaluated.len(),
        "n_in_index_cone": in_cone,
        "n_ricci_psd": psd,
        "points": results,
    });
    Ok(Output::new(to_text(&doc), Verdict::Verified))
}

fn parse_range(s: &str) -> Result<(u32, u32)> {
    let bad = || CliError::Input(format!("expected a range like 1..501, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (u32, u32) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Up to this `s` the literal triple sum is also evaluated.
const LITERAL_MAX_S: u32 = 40;

fn appendix(a: &AppendixArgs, common: &Common) -> Result<Output> {
    let (from, to) = match (a.s, &a.range) {
        (Some(s), _) if s >= 1 => (s, s),
        (Some(_), _) => return Err(CliError::Input("--s must be at least 1".into())),
        (None, Some(r)) => parse_range(r)?,
        (None, None) => return Err(CliError::Input("pass --s or --range".into())),
    };
    let sweep = Sweep::new(to);
    let values: Vec<_> = (from..=to).map(|s| sweep.value(s)).collect();
    let routes_agree = (from..=to.min(LITERAL_MAX_S)).all(|s| parts(s) == values[(s - from) as usize]);
    let a3_a6 = values.iter().all(|v| v.parts[2] == v.parts[5]);
    let positive = values.iter().all(|v| v.total > BigInt::from(0));
    if common.format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["s", "A1", "A2", "A3", "A4", "A5", "A6", "A"]).expect("in-memory csv");
        for v in &values {
            let mut row = vec![v.s.to_string()];
            row.extend(v.parts.iter().map(|p| p.to_string()));
            row.push(v.total.to_string());
            w.write_record(&row).expect("in-memory csv");
        }
        let text = String::from_utf8(w.into_inner().expect("in-memory csv")).expect("ascii csv");
        let mut out = Output::new(text, Verdict::from_holds(a3_a6 && positive));
        out.inconsistent = !routes_agree;
        return Ok(out);
    }
    let doc = if from == to {
        let mut doc = serde_json::to_value(AppendixJson::from(&values[0])).expect("appendix value");
        doc["routes_agree"] = json!(if to <= LITERAL_MAX_S { Some(routes_agree) } else { None });
        doc
    } else {
        json!({
            "from": from,
            "to": to,
            "a3_equals_a6": a3_a6,
            "all_positive": positive,
            "routes_agree_up_to": to.min(LITERAL_MAX_S),
            "routes_agree": routes_agree,
            "values": values.iter().map(AppendixJson::from).collect::<Vec<_>>(),
        })
    };
    let mut out = Output::new(to_text(&doc), Verdict::from_holds(a3_a6 && positive));
    out.inconsistent = !routes_agree;
    Ok(out)
}
