use std::path::PathBuf;
use std::process::Command;

use polyrec::run;
use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn argv(args: &[&str]) -> Vec<String> {
    std::iter::once("polyrec").chain(args.iter().copied()).map(String::from).collect()
}

/// Runs with `--json` and returns the exit code and parsed report.
fn json(args: &[&str]) -> (u8, Value) {
    let mut a = argv(args);
    a.push("--json".into());
    let out = run(a);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

fn text(args: &[&str]) -> (u8, String) {
    let out = run(argv(args));
    (out.code, out.stdout)
}

#[test]
fn transform_square() {
    let (code, out) = text(&["transform", "--polytope", &fixture("square.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 + x1 + x2 + x1*x2\n");
    let (_, r) = json(&["transform", "-p", &fixture("square.json")]);
    assert_eq!(r["command"], "transform");
    assert_eq!(r["artifacts"]["lattice_points"], 4);
    assert_eq!(r["inputs"]["p"]["vertices"][1], serde_json::json!(["0", "1"]));
}

#[test]
fn recursion_with_lattice_offset_is_minimal() {
    let (code, r) = json(&["recursion-verify", "--p", &fixture("triangle.json"), "--q", &fixture("lattice_point.json")]);
    assert_eq!(code, 0);
    let cert = &r["artifacts"]["certificate"];
    assert_eq!(cert["verified"], true);
    assert_eq!(cert["minimal"], true);
    assert_eq!(cert["k_range"], serde_json::json!([0, 5]));
    assert_eq!(cert["residuals"]["(0,0)"], "x1*x2");
    assert_eq!(cert["char_poly"].as_array().unwrap().len(), 4);
}

#[test]
fn recursion_defaults_to_origin() {
    let (code, r) = json(&["recursion-verify", "-p", &fixture("seg.json"), "--kmax", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["inputs"]["q"]["vertices"], serde_json::json!([["0", "0"]]));
    assert_eq!(r["artifacts"]["certificate"]["k_range"], serde_json::json!([0, 3]));
}

#[test]
fn half_integral_offset_is_not_minimal() {
    let (code, r) = json(&["minimality", "--p", &fixture("seg.json"), "--q", &fixture("halfpoint.json")]);
    assert_eq!(code, 0);
    let a = &r["artifacts"];
    assert_eq!(a["minimal"], false);
    assert_eq!(a["all_residuals_zero"], true);
    assert!(a["sequence"].as_array().unwrap().iter().all(|s| s == "0"));
    assert_eq!(a["sequence"].as_array().unwrap().len(), 6);
}

#[test]
fn indicator_on_rational_triangle() {
    let (code, r) = json(&["indicator-check", "-p", &fixture("rational_triangle.json"), "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["inputs"]["box"]["lo"], serde_json::json!([-1, -1]));
    assert!(r["artifacts"]["points_checked"].as_u64().unwrap() > 0);

    let (code, r) = json(&["indicator-check", "-p", &fixture("square.json"), "--lo", "-1", "--hi", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["artifacts"]["points_checked"], 13 * 13);
}

#[test]
fn ehrhart_counts() {
    let (code, r) = json(&["ehrhart", "-p", &fixture("cube.json"), "--kmax", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["artifacts"]["counts"], serde_json::json!([1, 8, 27, 64]));
    assert_eq!(r["artifacts"]["minimal_power"], 4);
}

#[test]
fn schur_recursion_below_guaranteed_start_fails() {
    let (code, r) = json(&["schur-recursion", "--shape", &fixture("early_start.json")]);
    assert_eq!(code, 1);
    assert_eq!(r["verified"], false);
    assert_eq!(r["artifacts"]["failed_at"], 0);

    let (code, r) = json(&["schur-recursion", "--shape", &fixture("late_start.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["artifacts"]["r"], 6);
}

#[test]
fn ehrhart_needs_lattice_polytope() {
    let out = run(argv(&["ehrhart", "-p", &fixture("halfpoint.json")]));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("(1/2,1/2) is not a lattice point"), "{}", out.stderr);
}

#[test]
fn brion_triangle_and_non_simple_polytope() {
    let (code, r) = json(&["brion", "-p", &fixture("triangle.json")]);
    assert_eq!(code, 0);
    let vs = r["artifacts"]["vertices"].as_array().unwrap();
    assert_eq!(vs.len(), 3);
    assert_eq!(vs[0]["denominator_factors"], serde_json::json!(["1 - x^(0,1)", "1 - x^(1,0)"]));

    let out = run(argv(&["brion", "-p", &fixture("bipyramid.json")]));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("(0,0,1) is not simplicial"), "{}", out.stderr);
}

#[test]
fn schur_and_kostka() {
    let (code, s) = text(&["schur", "--shape", &fixture("hook.json")]);
    assert_eq!(code, 0);
    assert!(s.contains("2*x1*x2*x3"));
    assert_eq!(text(&["kostka", "--shape", &fixture("hook.json"), "--weight", "1,1,1"]), (0, "2\n".into()));
    let (_, r) = json(&["kostka", "--shape", &fixture("counterexample_shape.json")]);
    assert_eq!(r["artifacts"]["weight"], serde_json::json!([4, 2, 0]));
    assert_eq!(r["artifacts"]["kostka"], 2);
    assert_eq!(run(argv(&["kostka", "--shape", &fixture("hook.json")])).code, 2);
}

#[test]
fn gt_vertices_of_hook() {
    let (code, r) = json(&["gt-vertices", "--shape", &fixture("hook.json")]);
    assert_eq!(code, 0);
    let a = &r["artifacts"];
    assert_eq!(a["non_integral"], 0);
    let vs = a["vertices"].as_array().unwrap();
    assert_eq!(vs.len(), a["integral_weights"].as_array().unwrap().len());
    for v in vs {
        assert_eq!(v["pattern"].as_array().unwrap().len(), 4);
        assert_eq!(v["pattern"][0], serde_json::json!(["0", "1", "2"]));
    }
}

#[test]
fn counterexample_shape_is_refuted() {
    let (code, r) = json(&["counterexample", "--shape", &fixture("counterexample_shape.json")]);
    assert_eq!(code, 0);
    let a = &r["artifacts"];
    assert_eq!(a["refuted"], true);
    assert_eq!(a["vertex_coordinates"], serde_json::json!(["0", "1", "3", "5"]));
    assert!(a["missing"].as_array().unwrap().contains(&serde_json::json!([4, 2, 0])));

    let (_, r) = json(&["counterexample", "--shape", &fixture("hook.json")]);
    assert_eq!(r["artifacts"]["refuted"], false);
}

#[test]
fn schur_recursion_instances() {
    let (code, r) = json(&["schur-recursion", "--shape", &fixture("complete_homogeneous.json")]);
    assert_eq!(code, 0);
    let a = &r["artifacts"];
    assert_eq!(a["order"], 2);
    assert_eq!(a["sequence"][2], "x1^2 + x1*x2 + x2^2");
    assert_eq!(a["sequence"].as_array().unwrap().len(), 9);

    let (code, r) = json(&["schur-recursion", "--shape", &fixture("shifted_hook.json"), "--lmax", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["artifacts"]["start"], r["artifacts"]["r"]);
    assert_eq!(r["inputs"]["l_max"], 5);

    let out = run(argv(&["schur-recursion", "--shape", &fixture("hook.json")]));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("l_max"));
}

#[test]
fn repro_reports_both_instances() {
    let (code, r) = json(&["repro-paper"]);
    assert_eq!(code, 0);
    assert_eq!(r["verified"], true);
    let checks = r["artifacts"]["checks"].as_object().unwrap();
    assert!(checks.len() >= 10);
    assert!(checks.values().all(|v| v == true));
    assert!(r["artifacts"]["counterexample"]["missing"].as_array().unwrap().contains(&serde_json::json!([4, 2, 0])));
    assert_eq!(r["artifacts"]["non_lattice"]["minimal"], false);

    let (_, t) = text(&["repro-paper"]);
    assert!(t.starts_with("verified: true\n"));
    assert!(t.contains("PASS 420_not_a_vertex_weight\n"));
}

#[test]
fn malformed_inputs_exit_two_with_location() {
    let cases = [
        (vec!["transform", "-p", "float.json"], "vertices[1][0]"),
        (vec!["transform", "-p", "trailing_comma.json"], "line 2"),
        (vec!["schur", "--shape", "unsorted.json"], "lambda"),
        (vec!["ehrhart", "-p", "missing.json"], "missing.json"),
    ];
    for (args, needle) in cases {
        let mut args: Vec<String> = args.into_iter().map(String::from).collect();
        let last = args.len() - 1;
        args[last] = fixture(&args[last]);
        let out = run(std::iter::once("polyrec".to_string()).chain(args));
        assert_eq!(out.code, 2);
        assert!(out.report.is_none());
        assert!(out.stderr.contains(needle), "{needle}: {}", out.stderr);
    }
    assert_eq!(run(argv(&["bogus"])).code, 2);
    assert_eq!(run(argv(&["transform"])).code, 2);
}

#[test]
fn help_exits_zero() {
    let out = run(argv(&["--help"]));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("repro-paper"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(argv(&["transform", "-p", &fixture("square.json"), "--json", "--out", path.to_str().unwrap()]));
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["artifacts"]["sigma"], "1 + x1 + x2 + x1*x2");

    let bad = dir.path().join("no/such/dir/report.json");
    assert_eq!(run(argv(&["repro-paper", "--out", bad.to_str().unwrap()])).code, 2);
}

#[test]
fn timing_is_opt_in() {
    let (_, r) = json(&["transform", "-p", &fixture("square.json"), "--timing"]);
    assert!(r["elapsed"].as_str().unwrap().ends_with('s'));
    let (_, r) = json(&["transform", "-p", &fixture("square.json")]);
    assert!(r.get("elapsed").is_none());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let invocations: Vec<Vec<String>> = vec![
        vec!["transform".into(), "-p".into(), fixture("square.json")],
        vec!["recursion-verify".into(), "-p".into(), fixture("triangle.json"), "--q".into(), fixture("seg.json")],
        vec!["minimality".into(), "-p".into(), fixture("seg.json"), "--q".into(), fixture("halfpoint.json")],
        vec!["indicator-check".into(), "-p".into(), fixture("triangle.json"), "--k".into(), "2".into()],
        vec!["ehrhart".into(), "-p".into(), fixture("triangle.json")],
        vec!["brion".into(), "-p".into(), fixture("cube.json")],
        vec!["schur".into(), "--shape".into(), fixture("hook.json")],
        vec!["gt-vertices".into(), "--shape".into(), fixture("counterexample_shape.json")],
        vec!["kostka".into(), "--shape".into(), fixture("counterexample_shape.json")],
        vec!["counterexample".into(), "--shape".into(), fixture("counterexample_shape.json")],
        vec!["schur-recursion".into(), "--shape".into(), fixture("shifted_hook.json")],
        vec!["repro-paper".into()],
    ];
    for args in invocations {
        for json in [false, true] {
            let mut a: Vec<String> = std::iter::once("polyrec".to_string()).chain(args.iter().cloned()).collect();
            if json {
                a.push("--json".into());
            }
            let first = run(a.clone());
            let second = run(a);
            assert_eq!(first.code, 0, "{args:?}: {}", first.stderr);
            assert_eq!(first.stdout, second.stdout, "{args:?}");
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_polyrec");
    let ok = Command::new(bin).args(["transform", "-p", &fixture("square.json")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "1 + x1 + x2 + x1*x2\n");
    let failed = Command::new(bin).args(["schur-recursion", "--shape", &fixture("early_start.json")]).output().unwrap();
    assert_eq!(failed.status.code(), Some(1));
    let bad = Command::new(bin).args(["transform", "-p", &fixture("float.json")]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("vertices[1][0]"));
}
