use belyi::cli::{dispatch, Outcome};
use serde_json::Value;

fn belyi(args: &[&str]) -> Outcome {
    let mut argv = vec!["belyi"];
    argv.extend_from_slice(args);
    dispatch(argv)
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let out = belyi(&argv);
    (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
}

fn result<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["results"]
        .as_array()
        .and_then(|rs| rs.iter().find(|r| r["name"] == name))
        .map(|r| &r["value"])
        .unwrap_or(&Value::Null)
}

#[test]
fn genus_of_seven_cycles() {
    let out = belyi(&["genus", "--lambda", "7/7/7"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("genus = 3 [rh_genus]"), "{}", out.stdout);
    let (_, v) = json(&["genus", "--lambda", "2/2/2"]);
    assert_eq!(result(&v, "genus"), &Value::Null);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["census", "--lambda", "5/5/5", "--workers", "2"];
    let a = belyi(&args);
    let b = belyi(&["census", "--lambda", "5/5/5", "--workers", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(belyi(&args), belyi(&args));
}

#[test]
fn timing_is_opt_in() {
    let plain = belyi(&["partitions", "5"]);
    assert!(!plain.stdout.contains("elapsed"));
    let timed = belyi(&["--timing", "partitions", "5"]);
    assert!(timed.stdout.contains("elapsed"));
}

#[test]
fn passports_with_census() {
    let (code, v) = json(&["passports", "--degree", "7", "--genus", "3", "--census"]);
    assert_eq!(code, 0);
    let rows = v["details"]["passports"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["class_count"], 30);
    assert_eq!(rows[0]["noncyclic_count"], 25);
}

#[test]
fn bounds_report_n_and_infinity() {
    let (code, v) = json(&["bounds", "--branch", "0,1,oo"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "N"), 3);
    assert!(v["events"].as_array().unwrap().iter().any(|e| e.as_str().unwrap().contains("infinity")));
    let (_, v) = json(&["bounds", "--branch", "0", "--deg-pi", "1"]);
    assert_eq!(result(&v, "bound"), "512");
    let (code, v) = json(&["bounds", "--minpoly", "x^2 - 2"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "N"), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(belyi(&["genus"]).code, 2);
    assert_eq!(belyi(&["genus", "--lambda", "7/7"]).code, 2);
    assert_eq!(belyi(&["genus", "--degree", "6", "--lambda", "7/7/7"]).code, 2);
    assert_eq!(belyi(&["frobnicate"]).code, 2);
    let out = belyi(&["bounds", "--branch", "1/0"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("belyi: error:"));
    assert_eq!(belyi(&["--help"]).code, 0);
}

#[test]
fn guards_exit_three() {
    let out = belyi(&["census", "--lambda", "10/10/5,5"]);
    assert_eq!(out.code, 3, "{}", out.stderr);
    assert!(out.stderr.contains("limit"));
}

#[test]
fn emit_and_solve_on_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let (code, v) = json(&["system", "emit", "--curve", "p1", "--degree", "2", "--lambda", "2/1,1/2", "--out", out]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "written"), 1);
    let file = dir.path().join("case-00000.sys");
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("# curve: p1"));
    let (code, v) = json(&["system", "solve", "--in", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "verdict"), "nonempty");
    let (code, v) = json(&["system", "solve", "--in", file.to_str().unwrap(), "--max-steps", "2"]);
    assert_eq!(code, 3);
    assert_eq!(result(&v, "verdict"), "unknown");
}

#[test]
fn emit_all_writes_chart_requests() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let (code, v) = json(&[
        "system", "emit", "--curve", "p1", "--degree", "1", "--lambda", "1/1/1", "--case", "all", "--out", out,
    ]);
    assert_eq!(code, 0);
    let total = result(&v, "cases").as_u64().unwrap() as usize;
    let files: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert_eq!(files.len(), total);
    let requests = files.iter().filter(|f| f.ends_with(".chart-request")).count();
    assert_eq!(result(&v, "chart_requests").as_u64().unwrap() as usize, requests);
    assert!(requests > 0);
}

#[test]
fn emit_rejects_at_passports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never");
    let (code, v) = json(&[
        "system", "emit", "--curve", "fermat4", "--degree", "5", "--lambda", "5/5/5", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "rejected_at"), "passports");
    assert!(!out.exists());
}

#[test]
fn emit_case_limit() {
    let dir = tempfile::tempdir().unwrap();
    let out = belyi(&[
        "system", "emit", "--curve", "fermat4", "--degree", "7", "--lambda", "7/7/7", "--case", "all", "--max-cases",
        "10", "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.code, 3);
}

#[test]
fn verify_fermat4_reports_eight() {
    let out = belyi(&["verify", "fermat4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("beldeg = 8 [verify_fermat4]"));
}

#[test]
fn degree_search() {
    let (code, v) = json(&["degree-search", "--genus", "3", "--max-degree", "8"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "census_lower_bound"), 7);
    let (code, v) = json(&["degree-search", "--curve", "p1", "--max-degree", "2", "--with-systems"]);
    assert_eq!(code, 0);
    assert_eq!(result(&v, "belyi_degree"), 1);
    assert_eq!(belyi(&["degree-search", "--max-degree", "3"]).code, 2);
    assert_eq!(belyi(&["degree-search", "--genus", "1", "--max-degree", "3", "--with-systems"]).code, 2);
}

#[test]
fn curve_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("line.json");
    std::fs::write(
        &curve,
        r#"{"name": "line", "f": "y", "genus": 0, "t": 2,
            "support": [{"point": "infinity", "multiplicity": 1, "pole_orders": [0, 1, 2]}],
            "basis": [{"num": "1"}, {"num": "x"}, {"num": "x^2"}], "tiers": [0, 1, 2]}"#,
    )
    .unwrap();
    let out = dir.path().join("sys");
    let (code, v) = json(&[
        "system", "emit", "--curve", curve.to_str().unwrap(), "--degree", "2", "--lambda", "2/1,1/2", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(result(&v, "n"), 3);
}
