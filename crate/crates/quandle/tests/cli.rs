use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quandle"));
    cmd.args(args).env_remove("QUANDLE_SEARCH_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_with_env(args, &[])
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout_ok(&full)).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout_ok(&["poly", "P 3 (1 2)"]), "s^4t^4 + 2s^3t^4 + s^4t^2\n");
    assert_eq!(stdout_ok(&["verify", path_str(&fixture("T3.json"))]), "quandle: OK (order 3)\n");
    assert_eq!(stdout_ok(&["cohomology", "P 3 (1 2 3)", "--degree", "2", "--coeff", "Z"]), "Z^2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "T 3", "--coeff", "Z4"]).status.code(), Some(2));
    assert_eq!(run(&["poly"]).status.code(), Some(2));
    let bad = run(&["verify", "P 2 (1 3)"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("outside"));
    assert_eq!(run(&["homquandle", "T 2", "R 4"]).status.code(), Some(0));
    assert_eq!(run(&["homquandle", "T 2", "P 2 (1 2)"]).status.code(), Some(0));
    assert_eq!(run(&["cohomology", "P 3 (1 2 3)", "--rho", "(1 2)"]).status.code(), Some(1));
    assert_eq!(run(&["lk", "/nonexistent/file.lnk"]).status.code(), Some(1));
}

#[test]
fn invalid_table_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"order":3,"table":[[0,2,0],[2,1,1],[1,0,2]]}"#).unwrap();
    let out = run(&["verify", path_str(&path)]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a quandle"), "{err}");
}

#[test]
fn show_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    for expr in ["P 3 (1 2)", "R 5", "T 2"] {
        let path = dir.path().join("q.json");
        std::fs::write(&path, stdout_ok(&["--json", "show", expr])).unwrap();
        assert_eq!(stdout_ok(&["show", path_str(&path)]), stdout_ok(&["show", expr]));
    }
    assert_eq!(stdout_ok(&["show", "P 2 (1 2)"]), "0 0 0\n2 1 1\n1 2 2\n");
}

#[test]
fn linking_numbers_feed_synthesis() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    std::fs::write(&graph, stdout_ok(&["--json", "lk", path_str(&fixture("torus_2_4.lnk"))])).unwrap();
    let lnk = dir.path().join("d.lnk");
    let msg = stdout_ok(&["synth", path_str(&graph), "--out", path_str(&lnk)]);
    assert!(msg.contains("4 crossings, 2 components"), "{msg}");
    assert_eq!(stdout_ok(&["lk", path_str(&lnk)]), "0 2\n2 0\n");

    let tri = stdout_ok(&["synth", path_str(&fixture("triangle.json"))]);
    let tri_path = dir.path().join("tri.lnk");
    std::fs::write(&tri_path, tri).unwrap();
    assert_eq!(stdout_ok(&["lk", path_str(&tri_path)]), "0 1 2\n1 0 -1\n2 -1 0\n");
}

#[test]
fn random_synthesis_is_seeded() {
    let a = json_ok(&["synth", "--random", "4", "--max-weight", "3", "--seed", "7"]);
    let b = json_ok(&["synth", "--random", "4", "--max-weight", "3", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a["m"], 4);
    let c = json_ok(&["synth", "--random", "4", "--max-weight", "3", "--seed", "8"]);
    assert_ne!(a["weights"], c["weights"]);
}

#[test]
fn coloring_and_invariants() {
    let hopf = fixture("hopf_pos.lnk");
    let torus = fixture("torus_2_4.lnk");
    assert_eq!(json_ok(&["color", path_str(&hopf), "P 2 (1 2)"])["count"], 5);
    assert_eq!(json_ok(&["color", path_str(&torus), "P 2 (1 2)"])["count"], 9);
    assert_eq!(json_ok(&["color", path_str(&fixture("trefoil.lnk")), "R 3"])["count"], 9);
    assert_eq!(stdout_ok(&["phi", path_str(&torus), "P 2 (1 2)", "--theta", "2"]), "5 + 4t^2\n");
    assert_eq!(stdout_ok(&["phi", path_str(&hopf), "P 2 (1 2)", "--theta", "2"]), "5\n");
    assert_eq!(run(&["phi", path_str(&hopf), "P 3 (1 2 3)", "--theta", "2"]).status.code(), Some(1));
    assert_eq!(stdout_ok(&["lk", path_str(&fixture("hopf_kinked.lnk"))]), "0 1\n1 0\n");
}

#[test]
fn quiver_dot_matches_golden_file() {
    let golden = std::fs::read_to_string(fixture("hopf_p3_end.dot")).unwrap();
    let printed = stdout_ok(&["quiver", path_str(&fixture("hopf_pos.lnk")), "P 2 (1 2)"]);
    assert_eq!(printed, golden);
    assert_eq!(golden.matches(" -> ").count(), 35);
    assert_eq!(golden.matches("[label=").count(), 5);

    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("q.dot");
    let msg = stdout_ok(&["quiver", path_str(&fixture("hopf_pos.lnk")), "P 2 (1 2)", "--dot", path_str(&dot)]);
    assert_eq!(msg, "5 vertices, 35 edges\n");
    assert_eq!(std::fs::read_to_string(&dot).unwrap(), golden);
}

#[test]
fn quiver_with_endomorphism_file() {
    let dir = tempfile::tempdir().unwrap();
    let endos = dir.path().join("endos.json");
    std::fs::write(&endos, "[[0,1,2]]").unwrap();
    let v = json_ok(&["quiver", path_str(&fixture("hopf_pos.lnk")), "P 2 (1 2)", "--endos", path_str(&endos)]);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    std::fs::write(&endos, "[[1,0,2]]").unwrap();
    let out = run(&["quiver", path_str(&fixture("hopf_pos.lnk")), "P 2 (1 2)", "--endos", path_str(&endos)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn groups_and_homs() {
    let aut = json_ok(&["aut", "P 4 (1 2)(3 4)"]);
    assert_eq!(aut["order"], 8);
    let inn = json_ok(&["inn", "P 4 (1 2 3)"]);
    assert_eq!((inn["order"].as_u64(), inn["cyclic"].as_bool()), (Some(3), Some(true)));
    assert_eq!(json_ok(&["homs", "P 2 (1 2)", "P 2 (1 2)"])["count"], 7);
    assert_eq!(json_ok(&["iso", "P 4 (1 2)", "P 4 (3 4)"])["isomorphic"], true);
    assert_eq!(stdout_ok(&["iso", "P 4 (1 2)", "P 4 (1 2)(3 4)"]), "not isomorphic\n");
    assert_eq!(stdout_ok(&["goodinv", "P 3 (1 2 3)"]), "no good involutions\n");
    assert_eq!(stdout_ok(&["goodinv", "P 2 (1 2)"]), "()\n(1 2)\n");
}

#[test]
fn hom_quandle_output_file_is_a_quandle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hom.json");
    let text = stdout_ok(&["homquandle", "P 3 (1 2 3)", "P 3 (1 2 3)", "--out", path_str(&out)]);
    assert!(text.starts_with("order 13\n"));
    assert_eq!(stdout_ok(&["verify", path_str(&out)]), "quandle: OK (order 13)\n");
}

#[test]
fn cohomology_variants() {
    assert_eq!(stdout_ok(&["cohomology", "T 3"]), "Z^6\n");
    assert_eq!(stdout_ok(&["cohomology", "R 3", "--degree", "3", "--coeff", "Z3"]), "Z3^1\n");
    assert_eq!(stdout_ok(&["cohomology", "P 4 (1 2)(3 4)", "--coeff", "Q"]), "Q^6\n");
    let v = json_ok(&["cohomology", "P 2 (1 2)", "--coeff", "Z2", "--rho", "(1 2)"]);
    assert_eq!(v["coefficients"], "Z2");
    assert_eq!(v["rank"], 2);
    assert_eq!(run(&["cohomology", "T 3", "--degree", "7"]).status.code(), Some(1));
}

#[test]
fn search_cap_is_configurable() {
    let hopf = fixture("hopf_pos.lnk");
    let capped = run_with_env(&["color", path_str(&hopf), "R 5"], &[("QUANDLE_SEARCH_CAP", "3")]);
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("exceeded 3 nodes"));
    let garbage = run_with_env(&["color", path_str(&hopf), "R 5"], &[("QUANDLE_SEARCH_CAP", "lots")]);
    assert_eq!(garbage.status.code(), Some(1));
    let roomy = run_with_env(&["color", path_str(&hopf), "R 5"], &[("QUANDLE_SEARCH_CAP", "1000")]);
    assert_eq!(roomy.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let hopf = fixture("hopf_kinked.lnk");
    let cases: Vec<Vec<&str>> = vec![
        vec!["--json", "aut", "P 4 (1 2)"],
        vec!["homquandle", "P 2 (1 2)", "P 2 (1 2)"],
        vec!["--json", "color", path_str(&hopf), "P 2 (1 2)"],
        vec!["quiver", path_str(&hopf), "R 3"],
        vec!["--json", "cohomology", "P 3 (1 2)", "--coeff", "Z"],
    ];
    for args in cases {
        assert_eq!(stdout_ok(&args), stdout_ok(&args));
    }
}
