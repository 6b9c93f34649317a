use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn symage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symage"))
        .args(args)
        .env_remove("QC_CLOSURE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_rep(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn sympower_even_dimension_report() {
    let o = symage(&["sympower", "--dim", "2", "--points", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("canonical: true"));
    assert!(text.contains("gorenstein: true"));
    assert!(text.contains("index: 1"));
}

#[test]
fn sympower_rejects_curves() {
    let o = symage(&["sympower", "--dim", "1", "--points", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error[quasi-reflection]:"));
    assert!(err.contains("quasi-reflection"));
}

#[test]
fn genus_bound_general_type() {
    let o = symage(&["genus-bound", "--regime", "general", "--points", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimal genus: 5"));
    let o = symage(&[
        "genus-bound",
        "--regime",
        "nonneg",
        "--points",
        "4",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["minimal_genus"], 4);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(symage(&["sympower", "--dim", "2"]).status.code(), Some(2));
    assert_eq!(symage(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        symage(&["sympower", "--dim", "2", "--points", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        symage(&["plurigenera", "--dim", "2", "--points", "3", "--pm", "1:2"])
            .status
            .code(),
        Some(2)
    );
    let o = symage(&["analyze", "--rep", "/nonexistent/rep.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[usage]:"));
}

#[test]
fn sympower_table_json() {
    let o = symage(&[
        "sympower", "--dim", "3", "--points", "3", "--table", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let table = v["result"]["table"].as_array().unwrap();
    assert_eq!(table.len(), 3);
    assert_eq!(table[0]["cycle_type"], serde_json::json!([3]));
    assert_eq!(table[0]["age"], "3/1");
    assert_eq!(table[0]["s_sum"], 9);
    assert_eq!(table[1]["age"], "3/2");
    assert_eq!(table[1]["class_size"], "3");
    assert_eq!(v["result"]["verdict"]["index"], 2);
    assert_eq!(v["meta"]["tool"], "symage");
}

#[test]
fn json_output_is_deterministic_and_canonical() {
    let args = [
        "sympower", "--dim", "4", "--points", "5", "--table", "--format", "json",
    ];
    let a = stdout(&symage(&args));
    let b = stdout(&symage(&args));
    assert_eq!(a, b);
    let parsed: Value = serde_json::from_str(&a).unwrap();
    let mut again = serde_json::to_string_pretty(&parsed).unwrap();
    again.push('\n');
    assert_eq!(a, again);
}

#[test]
fn plurigenera_table_and_kappa() {
    let o = symage(&[
        "plurigenera",
        "--dim",
        "2",
        "--points",
        "3",
        "--pm",
        "1=2,2=5",
        "--kappa",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["result"]["table"]["rows"].as_array().unwrap();
    assert_eq!(rows[0]["p_m_sigma"], "4");
    assert_eq!(rows[1]["p_m_sigma"], "35");
    assert_eq!(rows[0]["valid"], true);
    assert_eq!(v["result"]["kappa_sigma"], 6);

    let o = symage(&[
        "plurigenera",
        "--dim",
        "3",
        "--points",
        "2",
        "--pm",
        "1=5",
        "--kappa",
        "-inf",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("| 1 | 5 | 15 | false |"));
    assert!(text.contains("kappa(Sigma_d): -inf"));

    let o = symage(&[
        "plurigenera",
        "--dim",
        "2",
        "--points",
        "2",
        "--pm",
        "1=1",
        "--kappa",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_cyclic_quotient_file() {
    let path = write_rep(
        "half_111.json",
        r#"{"dimension":3,"root_order":2,"generators":[{"perm":[1,2,3],"exponents":[1,1,1]}]}"#,
    );
    let o = symage(&[
        "analyze",
        "--rep",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let verdict = &v["result"]["verdict"];
    assert_eq!(verdict["terminal"], true);
    assert_eq!(verdict["index"], 2);
    assert_eq!(verdict["min_age"]["age"], "3/2");
    assert_eq!(
        verdict["min_age"]["witness"]["element"]["exponents"],
        serde_json::json!([1, 1, 1])
    );
}

#[test]
fn analyze_reports_quasi_reflections() {
    let path = write_rep(
        "reflection.json",
        r#"{"dimension":2,"root_order":1,"generators":[{"perm":[2,1],"exponents":[0,0]}]}"#,
    );
    let o = symage(&["analyze", "--rep", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error[quasi-reflection]:"));
}

#[test]
fn analyze_rejects_malformed_files() {
    let path = write_rep(
        "bad.json",
        r#"{"dimension":2,"root_order":1,"generators":[{"perm":[1,1],"exponents":[0,0]}]}"#,
    );
    let o = symage(&["analyze", "--rep", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let path = write_rep("garbage.json", "dimension = 3");
    assert_eq!(
        symage(&["analyze", "--rep", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn closure_cap_env_override() {
    let rep = symage::MonomialRep::symmetric_power(2, 4).unwrap();
    let path = write_rep("s4.json", &rep.to_canonical_json());
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_symage"))
            .args(["analyze", "--rep", path.to_str().unwrap()])
            .env("QC_CLOSURE_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("24").status.code(), Some(0));
    let o = run("23");
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("23"));
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn small_selftest_passes() {
    let o = symage(&["selftest", "--max-dim", "3", "--max-points", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn selftest_flags_discrepancies() {
    // an absurdly tight tolerance turns every oracle row red
    let o = symage(&[
        "selftest",
        "--max-dim",
        "2",
        "--max-points",
        "2",
        "--tolerance",
        "1e-300",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL oracle"));
    assert!(stderr(&o).starts_with("error[discrepancy]:"));
}

#[test]
fn selftest_matrix_cap_is_a_domain_error() {
    let o = symage(&["selftest", "--max-dim", "8", "--max-points", "9"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error[matrix-cap]:"));
}
