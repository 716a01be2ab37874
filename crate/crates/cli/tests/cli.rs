use std::path::Path;
use std::process::{Command, Output};

use cubinv_core::cubic::CubicForm;
use cubinv_core::poly::{Polynomial, VariableTable};
use cubinv_core::BigInt;
use serde_json::Value;

fn cubinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubinv")).args(args).env_remove("CUBINV_WORKERS").output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = cubinv(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn build_matches_hand_expansion() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "s.json", r#"{"d": [2, 1, 1], "factors": ["symbolic"]}"#);
    let out = cubinv(&["build", &spec]);
    assert_eq!(out.status.code(), Some(0));
    let table = VariableTable::with_factors(1);
    let want = Polynomial::<BigInt>::parse_expression(&table, "6*a1*x1*x2*x3 + 3*b1*x1^2*x3 + 3*c1*x1^2*x2").unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), want.to_canonical_text());

    let spec = write(dir.path(), "t.json", r#"{"d": [1, 1, 1], "factors": []}"#);
    let text = String::from_utf8(cubinv(&["build", &spec]).stdout).unwrap();
    assert_eq!(text, "vars x1 x2 x3\n6 x1^1 x2^1 x3^1\n");
}

#[test]
fn build_output_feeds_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "s.json", r#"{"d": [2, 2, 2], "factors": [[1, 2, 0], [0, 1, 1], [3, 0, 1]]}"#);
    let cubic = dir.path().join("f.txt");
    assert_eq!(cubinv(&["build", &spec, "-o", cubic.to_str().unwrap()]).status.code(), Some(0));
    let doc = ok_json(&["invariants", cubic.to_str().unwrap()]);
    let f = CubicForm::<BigInt>::from_polynomial(
        &Polynomial::from_canonical_text(&std::fs::read_to_string(&cubic).unwrap()).unwrap(),
    )
    .unwrap();
    let s = cubinv_core::invariants::s_invariant(&f).unwrap();
    assert_eq!(doc["S"], s.to_string());
}

#[test]
fn bad_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for body in [
        r#"{"d": [2, 1"#,
        r#"{"d": [2, 1, 1], "factors": [[1, -1, 0]]}"#,
        r#"{"d": [2, 1, 1], "factors": []}"#,
        r#"{"d": [2, 2]}"#,
    ] {
        let spec = write(dir.path(), "bad.json", body);
        let out = cubinv(&["build", &spec]);
        assert_eq!(out.status.code(), Some(2), "{body}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(cubinv(&["coeff", "--matrix", "4,0;0,4;0,1"]).status.code(), Some(2));
    assert_eq!(cubinv(&["coeff", "--matrix", "3,0,1;1,3,0;0,1,3", "--d", "3,3,2"]).status.code(), Some(2));
    assert_eq!(cubinv(&["verify", "positivity"]).status.code(), Some(2));
    assert_eq!(cubinv(&["curvature", "at", "--expr", "6*x1*x2*x3", "--x", "1,0,0"]).status.code(), Some(2));
    assert_eq!(cubinv(&["curvature", "at", "--expr", "a1*x1^3", "--x", "1,1,1"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_cubinv"))
        .args(["verify", "identities", "--count", "1"])
        .env("CUBINV_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn long_runs_need_the_flag() {
    assert_eq!(cubinv(&["verify", "positivity", "--d", "4,4,4"]).status.code(), Some(2));
    assert_eq!(cubinv(&["verify", "signs", "--d", "4,1,1"]).status.code(), Some(2));
    assert_eq!(cubinv(&["verify", "bound", "--d", "3,2,2"]).status.code(), Some(2));
}

#[test]
fn invariants_of_reference_cubics() {
    let doc = ok_json(&["invariants", "--expr", "x1^3 + x2^3 + x3^3 + 6*lambda*x1*x2*x3"]);
    assert_eq!(doc["S"], "lambda^4 - lambda");
    let doc = ok_json(&["invariants", "--expr", "6*x1*x2*x3"]);
    assert_eq!(doc["S"], "1");
    assert_eq!(doc["H"], "432*x1*x2*x3");
    assert_eq!(doc["cofactors"]["B33"], "-36*x3^2");
    let out = cubinv(&["invariants", "--expr", "x1^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (doc["S"].as_str(), doc["H"].as_str(), doc["nondegenerate"].as_bool()),
        (Some("0"), Some("0"), Some(false))
    );
}

#[test]
fn identities_on_seeded_cubics() {
    let doc = ok_json(&["verify", "identities", "--count", "100", "--seed", "7"]);
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["count"], 100);
}

#[test]
fn positivity_reports_are_reproducible() {
    let args = ["verify", "positivity", "--d", "2,2,2", "--cross-check", "--no-timing"];
    let one = cubinv(&[&args[..], &["--workers", "1"]].concat());
    let four = cubinv(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let doc: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(doc["n_types"], 9);
    assert_eq!(doc["n_nonzero"], 108);
    assert_eq!(doc["zeros"].as_array().unwrap().len(), 2);
    assert_eq!(doc["cross_check"]["passed"], true);
    assert_eq!(doc["checkpoint"], Value::Null);
    assert!(doc.get("runtime_seconds").is_some());

    let csv = cubinv(&["verify", "positivity", "--d", "2,2,2", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert_eq!(text.lines().next(), Some("type,orbit_size,value"));
}

#[test]
fn positivity_at_333() {
    let doc = ok_json(&["verify", "positivity", "--d", "3,3,3"]);
    assert_eq!(doc["n_types"], 123);
    assert_eq!(doc["n_nonzero"], 209520);
    assert_eq!(doc["max"]["value"], 356);
    assert_eq!(doc["max"]["witness_matrix"], "2,2,1,1,1,1;1,1,2,2,1,1;1,1,1,1,2,2");
    assert_eq!(doc["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn checkpoint_resume_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck");
    let ck = ck.to_str().unwrap();
    let args = ["verify", "positivity", "--d", "3,3,3", "--no-timing", "--shard-size", "10", "--checkpoint", ck];
    let full = cubinv(&args);
    assert_eq!(full.status.code(), Some(0));
    let shard_file = std::fs::read_dir(ck)
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.file_name().unwrap().to_str().unwrap().starts_with("shards-"))
        .unwrap();
    let lines: Vec<String> = std::fs::read_to_string(&shard_file).unwrap().lines().map(String::from).collect();
    assert_eq!(lines.len(), 1 + 13);

    // interrupted after five shards, mid-write of the sixth
    let torn = format!("{}\n{}", lines[..6].join("\n"), &lines[6][..20]);
    std::fs::write(&shard_file, torn).unwrap();
    let resumed = cubinv(&[&args[..], &["--workers", "2"]].concat());
    assert_eq!(resumed.status.code(), Some(0));
    assert_eq!(resumed.stdout, full.stdout);

    let log = std::fs::read_to_string(Path::new(ck).join("runs.jsonl")).unwrap();
    let recs: Vec<Value> = log.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["lineage"]["resumed_shards"], 5);
    assert_eq!(recs[1]["lineage"]["computed_shards"], 8);
    assert_eq!(recs[1]["lineage"]["parent"], recs[0]["result_digest"]);
    assert_eq!(recs[0]["result_digest"], recs[1]["result_digest"]);

    // a shard whose contents no longer match its digest is rejected
    let text = std::fs::read_to_string(&shard_file).unwrap();
    let tampered = text.replacen("\",\"", "\",\"9", 1);
    assert_ne!(tampered, text);
    std::fs::write(&shard_file, tampered).unwrap();
    assert_eq!(cubinv(&args).status.code(), Some(2));

    // so is a run log with an edited record
    std::fs::write(&shard_file, text).unwrap();
    let log_path = Path::new(ck).join("runs.jsonl");
    std::fs::write(&log_path, log.replacen("\"exit_code\":0", "\"exit_code\":1", 1)).unwrap();
    assert_eq!(cubinv(&args).status.code(), Some(2));
}

#[test]
fn signs_and_bound() {
    let doc = ok_json(&["verify", "signs", "--d", "2,2,2"]);
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 7);
    assert_eq!(doc["adjoint_identity"], true);
    let doc = ok_json(&["verify", "bound", "--d", "2,1,1"]);
    assert_eq!(doc["kind"], "bound");
    assert_eq!(doc["n_nonzero"], 4);
    let doc = ok_json(&["verify", "bound", "--d", "1,1,1"]);
    assert_eq!(doc["n_nonzero"], 0);
    assert_eq!(doc["holds"], true);
}

#[test]
fn coefficient_queries() {
    let doc = ok_json(&["coeff", "--matrix", "3,0,1;1,3,0;0,1,3", "--replicate", "2", "--cross-check"]);
    assert_eq!(doc["spec"], serde_json::json!([3, 3, 3]));
    assert_eq!(doc["coefficient"], 4);
    assert_eq!(doc["cross_check"]["agrees"], true);
    let doc = ok_json(&["coeff", "--matrix", "3,0,1;1,3,0;0,1,3", "--replicate", "4", "--breakdown"]);
    assert_eq!(doc["coefficient"], 652);
    assert_eq!(doc["breakdown"]["(3,3)"], 5804);
    let doc = ok_json(&["coeff", "--closed-form", "4"]);
    assert_eq!(doc["coefficient"], 6363107150400u64);
    assert_eq!(doc["cross_check"]["agrees"], true);
}

#[test]
fn curvature_commands() {
    let doc = ok_json(&["curvature", "at", "--expr", "6*x1*x2*x3", "--x", "1,1,1", "--xi", "1,0,0", "--eta", "0,1,0"]);
    assert_eq!(doc["level_set_curvature"], "0");
    assert_eq!(doc["in_index_cone"], true);
    assert_eq!(doc["sectional"]["holds"], true);
    let doc = ok_json(&["curvature", "at", "--expr", "x1^3 + x2^3 + x3^3", "--x", "1,1,1"]);
    assert_eq!(doc["in_index_cone"], false);
    let doc = ok_json(&["curvature", "scan", "--expr", "6*x1*x2*x3", "--grid", "3", "--denominator", "2"]);
    assert_eq!(doc["n_points"], 27);
    assert_eq!(doc["n_ricci_psd"], 27);
    assert_eq!(doc["points"][0]["level_set_curvature_approx"], 0.0);
}

#[test]
fn appendix_queries() {
    let doc = ok_json(&["appendix", "--s", "4"]);
    assert_eq!(doc["parts"], serde_json::json!([5804, -3048, 2352, -4552, -2256, 2352]));
    assert_eq!(doc["total"], 652);
    assert_eq!(doc["routes_agree"], true);
    let doc = ok_json(&["appendix", "--range", "1..60"]);
    assert_eq!(doc["a3_equals_a6"], true);
    assert_eq!(doc["all_positive"], true);
    let csv = cubinv(&["appendix", "--range", "1..3", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "s,A1,A2,A3,A4,A5,A6,A\n".to_string() + &csv_rows());
    assert_eq!(cubinv(&["appendix", "--range", "5..2"]).status.code(), Some(2));
}

fn csv_rows() -> String {
    (1..=3)
        .map(|s| {
            let v = cubinv_core::coeffalgo::appendix::parts(s);
            let cells: Vec<String> = v.parts.iter().chain([&v.total]).map(|x| x.to_string()).collect();
            format!("{s},{}\n", cells.join(","))
        })
        .collect()
}

#[test]
fn run_records() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("runs.jsonl");
    let log = log.to_str().unwrap();
    for _ in 0..2 {
        assert_eq!(cubinv(&["coeff", "--closed-form", "2", "--record", log, "--no-timing"]).status.code(), Some(0));
    }
    let recs: Vec<Value> =
        std::fs::read_to_string(log).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs[0]["config"]["subcommand"], "coeff");
    assert_eq!(recs[0]["config"]["args"]["closed_form"], 2);
    assert_eq!(recs[1]["lineage"]["parent"], recs[0]["result_digest"]);
}
