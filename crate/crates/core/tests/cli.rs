//! End-to-end tests of the command-line binary: output values, formats,
//! exit codes, and the cache round trip.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trigraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn parse_json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("valid json on stdout")
}

#[test]
fn alpha_both_matches_in_dimension7() {
    let out = run(&["alpha", "--n", "7", "--both", "--no-cache", "--format", "json"]);
    assert!(out.status.success());
    let v = parse_json(&out);
    assert_eq!(v["command"], "alpha");
    assert_eq!(v["results"][0]["formula"], 20);
    assert_eq!(v["results"][0]["alpha"], 20);
    assert_eq!(v["results"][0]["match"], true);
}

#[test]
fn alpha_formula_only_large_dimension() {
    let out = run(&["alpha", "--n", "100", "--formula", "--no-cache"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("formula: 572"));
}

#[test]
fn alpha_exact_empty_dimension() {
    let out = run(&["alpha", "--n", "2", "--exact", "--no-cache"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("exact: 0"));
}

#[test]
fn alpha_exact_above_limit_needs_budget() {
    let out = run(&["alpha", "--n", "9", "--exact", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--budget"), "stderr: {err}");
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["alpha"]); // missing --n
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn construct_double_cobra_verifies() {
    let out = run(&[
        "construct", "--kind", "double-cobra", "--n", "14", "--verify", "--no-cache",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("size: 56 (expected 56)"));
    assert!(text.contains("independent: true"));
    // spectrum may not contain 1 or -3
    let spectrum_line = text.lines().find(|l| l.starts_with("spectrum:")).unwrap();
    assert!(!spectrum_line.split_whitespace().any(|t| t == "1" || t == "-3"));
}

#[test]
fn construct_quad_dimension9() {
    let out = run(&["construct", "--kind", "quad", "--n", "9", "--verify", "--no-cache"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("size: 32 (expected 32)"));
}

#[test]
fn construct_cobra_too_small_fails() {
    let out = run(&["construct", "--kind", "cobra", "--n", "6", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn construct_writes_parseable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nagy11.txt");
    let out = run(&[
        "construct", "--kind", "nagy", "--n", "11", "--out", path.to_str().unwrap(), "--no-cache",
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("nagy-set 11 9\n"));
    let parsed = trigraph::constructions::Construction::from_text(&text).unwrap();
    assert_eq!(parsed.len(), 9);
}

#[test]
fn appendix_single_entries() {
    let out = run(&["appendix", "--m", "12", "--l", "6", "--no-cache"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("equal"));
    let out = run(&["appendix", "--m", "3", "--no-cache", "--format", "json"]);
    assert!(out.status.success());
    let v = parse_json(&out);
    assert_eq!(v["results"][0]["computed"], 1);
    assert_eq!(v["results"][0]["status"], "equal");
}

#[test]
fn appendix_requires_selection() {
    let out = run(&["appendix", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn chi_table_values() {
    let out = run(&["chi", "--from", "9", "--to", "12", "--format", "csv", "--no-cache"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,order,alpha,bound");
    let bounds: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(bounds, vec!["21", "30", "35", "37"]);

    let out = run(&["chi", "--from", "2", "--to", "4", "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn solve_dimacs_small_graphs() {
    let dir = tempfile::tempdir().unwrap();

    let k5 = dir.path().join("k5.col");
    let mut text = String::from("c complete graph\np edge 5 10\n");
    for i in 1..=5 {
        for j in i + 1..=5 {
            text.push_str(&format!("e {i} {j}\n"));
        }
    }
    std::fs::write(&k5, text).unwrap();
    let out = run(&["solve-dimacs", k5.to_str().unwrap(), "--no-cache"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("alpha: 1"));

    let edgeless = dir.path().join("edgeless.col");
    std::fs::write(&edgeless, "p edge 10 0\n").unwrap();
    let out = run(&["solve-dimacs", edgeless.to_str().unwrap(), "--no-cache"]);
    assert!(stdout(&out).contains("alpha: 10"));
}

#[test]
fn solve_dimacs_roundtrip_dimension5() {
    let g = trigraph::build::build_gn(5).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g5.col");
    std::fs::write(&path, trigraph::build::to_dimacs(&g)).unwrap();
    let out = run(&["solve-dimacs", path.to_str().unwrap(), "--no-cache"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("alpha: 16"));
}

#[test]
fn solve_dimacs_parse_error_has_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.col");
    std::fs::write(&path, "p edge 3 1\ne 1 9\n").unwrap();
    let out = run(&["solve-dimacs", path.to_str().unwrap(), "--no-cache"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn solve_dimacs_budget_incomplete_exits_two() {
    let g = trigraph::build::build_gn(6).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g6.col");
    std::fs::write(&path, trigraph::build::to_dimacs(&g)).unwrap();
    let out = run(&[
        "solve-dimacs", path.to_str().unwrap(), "--budget-nodes", "40", "--no-cache",
    ]);
    assert_eq!(out.status.code(), Some(2), "incomplete solves exit 2");
    assert!(stdout(&out).contains("incomplete"));
}

#[test]
fn prop9_report() {
    let out = run(&["prop9", "--format", "json", "--no-cache"]);
    assert!(out.status.success());
    let v = parse_json(&out);
    let r = &v["results"][0];
    assert_eq!(r["bases_avoiding_place"], 56);
    assert_eq!(r["feasible"], false);
    assert_eq!(r["chromatic_bound"], 22);
    assert_eq!(r["solutions"].as_array().unwrap().len(), 3);
}

#[test]
fn cache_roundtrip_and_corruption_tolerance() {
    let dir = tempfile::tempdir().unwrap();
    let cache_dir = dir.path().join("cache");
    let args = |extra: &[&str]| {
        let mut v = vec![
            "alpha", "--n", "5", "--exact", "--format", "json",
            "--cache-dir", cache_dir.to_str().unwrap(),
        ];
        v.extend_from_slice(extra);
        v.iter().map(|s| s.to_string()).collect::<Vec<_>>()
    };

    let out = bin().args(args(&[])).output().unwrap();
    assert!(out.status.success());
    let first = parse_json(&out);
    assert_eq!(first["results"][0]["cached"], false);
    assert_eq!(first["results"][0]["alpha"], 16);

    // corrupt the cache with a garbage line; the hit must still work
    let file = cache_dir.join("solves.jsonl");
    let mut content = std::fs::read_to_string(&file).unwrap();
    content.insert_str(0, "{{{ definitely not json\n");
    std::fs::write(&file, content).unwrap();

    let out = bin().args(args(&[])).output().unwrap();
    assert!(out.status.success());
    let second = parse_json(&out);
    assert_eq!(second["results"][0]["cached"], true);
    assert_eq!(second["results"][0]["alpha"], 16);
    assert_eq!(second["results"][0]["nodes"], 0);
    let warn = String::from_utf8(out.stderr).unwrap();
    assert!(warn.contains("corrupt"), "stderr: {warn}");
}

#[test]
fn json_schema_is_stable() {
    let run_once = || {
        let out = run(&["chi", "--from", "3", "--to", "5", "--format", "json", "--no-cache"]);
        assert!(out.status.success());
        parse_json(&out)
    };
    let a = run_once();
    let b = run_once();
    // identical apart from timing
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(a.clone()), strip(b));
    // envelope keys are sorted and the version field is present
    let keys: Vec<&String> = a.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(a["solver_version"], trigraph::solver::SOLVER_VERSION);
}

#[test]
fn threads_env_override_is_accepted() {
    let out = bin()
        .env("TRIGRAPH_THREADS", "1")
        .args(["alpha", "--n", "4", "--exact", "--no-cache", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"][0]["threads"], 1);
    assert_eq!(v["results"][0]["alpha"], 16);
}

#[test]
fn cache_dir_is_not_created_when_disabled() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .current_dir(dir.path())
        .args(["alpha", "--n", "3", "--exact", "--no-cache"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(!Path::new(&dir.path().join(".trigraph-cache")).exists());
}
