use std::io::Write as _;
use std::process::Command;

use resolvnet_cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use resolvnet_core::generators::butterfly;
use resolvnet_core::{build_graph, Graph};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("resolvnet").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--output", "json"]);
    let (code, out, _) = invoke(&full);
    (code, serde_json::from_str(&out).unwrap())
}

fn set_file(labels: &[String]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# candidate set").unwrap();
    for l in labels {
        writeln!(f, "{l}").unwrap();
    }
    f
}

#[test]
fn gen_output_rebuilds_the_generated_graph() {
    let (code, text, _) = invoke(&["gen", "bf", "3"]);
    assert_eq!(code, EXIT_OK);
    let expected = butterfly(3).unwrap().graph;
    assert_eq!(Graph::parse_edge_list(&text).unwrap(), expected);

    // rebuilding from the labelled edges alone gives the same graph up to ids
    let (_, v) = json(&["gen", "bf", "3"]);
    let edges: Vec<(String, String)> = v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_str().unwrap().to_string(), e[1].as_str().unwrap().to_string()))
        .collect();
    let rebuilt = build_graph(edges.iter().map(|(a, b)| (a.as_str(), b.as_str()))).unwrap();
    assert_eq!(rebuilt.order(), expected.order());
    let mut a: Vec<_> = rebuilt.edges().map(|(u, v)| sorted(rebuilt.label(u), rebuilt.label(v))).collect();
    let mut b: Vec<_> = expected.edges().map(|(u, v)| sorted(expected.label(u), expected.label(v))).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

fn sorted<'a>(x: &'a str, y: &'a str) -> (&'a str, &'a str) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

#[test]
fn graph_file_input_matches_family_input() {
    let (_, text, _) = invoke(&["gen", "sl", "2"]);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    let (_, from_file) = json(&["solve", "--graph", path, "--k", "2"]);
    let (_, from_family) = json(&["solve", "sl", "2", "--k", "2"]);
    assert_eq!(from_file, from_family);
    assert_eq!(from_family["value"], 24);
}

#[test]
fn check_accepts_outer_levels_and_rejects_a_missing_twin() {
    let bf = butterfly(3).unwrap();
    let outer: Vec<String> = bf
        .vertices_at_levels(&[0, 3])
        .into_iter()
        .map(|v| bf.graph.label(v).to_string())
        .collect();
    let full = set_file(&outer);
    let (code, out, _) = invoke(&["check", "bf", "3", "--set", full.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");

    let partial = set_file(&outer[1..]);
    let (code, v) = json(&["check", "bf", "3", "--k", "2", "--set", partial.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(v["pass"], false);
    assert_eq!(v["size"], 15);
    let pair = v["violating_pair"].as_array().unwrap();
    assert!(pair.iter().any(|l| l == outer[0].as_str()));
    assert_eq!(v["covered"], 1);
}

#[test]
fn check_rejects_unknown_labels() {
    let f = set_file(&["[000,0]".into(), "[999,9]".into()]);
    let (code, _, err) = invoke(&["check", "bf", "3", "--set", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("[999,9]"), "{err}");
}

#[test]
fn infeasible_multiplicity_names_the_pair() {
    let (code, _, err) = invoke(&["solve", "path", "3", "--k", "3"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(err.contains("v1") && err.contains("v3"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "torus", "3"][..],
        &["gen", "bf"],
        &["gen", "bf", "1"],
        &["solve", "cycle", "5", "--k", "0"],
        &["certify", "kn", "4"],
        &["frobnicate"],
    ] {
        let (code, _, _) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
    }
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn small_parameters_warn() {
    let (code, _, err) = invoke(&["twins", "bf", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning"));
}

#[test]
fn json_outputs_carry_schema() {
    for args in [
        &["twins", "benes", "3"][..],
        &["kappa", "cycle", "5"],
        &["solve", "kst", "2", "3"],
        &["certify", "bf", "4"],
        &["report", "--max-r", "3", "--max-n", "2"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, EXIT_OK, "{args:?}");
        assert_eq!(v["schema"], "1", "{args:?}");
    }
    let (_, v) = json(&["kappa", "cycle", "5"]);
    assert_eq!(v["kappa"], 4);
    let (_, v) = json(&["twins", "benes", "3"]);
    assert_eq!(v["twin_vertices"], 24);
    assert_eq!(v["structure_ok"], true);
}

#[test]
fn budget_exhaustion_reports_incomplete() {
    let (code, v) = json(&["solve", "random", "40", "20", "--seed", "3", "--k", "1", "--budget", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["complete"], false);
}

#[test]
fn binary_runs_are_deterministic() {
    let exe = env!("CARGO_BIN_EXE_resolvnet");
    let go = |args: &[&str]| Command::new(exe).args(args).output().unwrap();
    for args in [
        &["gen", "random", "30", "--seed", "9"][..],
        &["solve", "benes", "3", "--output", "json"],
        &["certify", "sl", "3", "--output", "json"],
    ] {
        let (a, b) = (go(args), go(args));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
