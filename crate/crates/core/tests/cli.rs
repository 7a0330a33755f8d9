use std::process::Command;

use planesquare::cli::{run, Invocation, Outcome, SCHEMA_VERSION};
use planesquare::plane_graph::PlaneGraph;
use serde_json::Value;

fn call(args: &[&str]) -> Invocation {
    run(std::iter::once("planesquare").chain(args.iter().copied()))
}

fn payload(args: &[&str]) -> Value {
    let inv = call(args);
    assert_eq!(inv.exit_code, 0, "{}", inv.stderr);
    let v: Value = serde_json::from_str(&inv.stdout).unwrap();
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    v["payload"].clone()
}

#[test]
fn inspect_reports_counts_and_class() {
    let p = payload(&["inspect", "@q3"]);
    assert_eq!(p["vertices"], 8);
    assert_eq!(p["edges"], 12);
    assert_eq!(p["class"]["in_class"], true);
    assert_eq!(
        payload(&["inspect", "@sharpness9"])["class"]["has_5_cycle"],
        true
    );
}

#[test]
fn square_of_sharpness_graph_is_complete() {
    let p = payload(&["square", "@sharpness9"]);
    assert_eq!(p["complete"], true);
    assert_eq!(p["edge_count"], 36);
}

#[test]
fn color_and_choosable() {
    let p = payload(&["color", "@c6", "--lists", "[[1],[2],[1],[2],[1],[2]]"]);
    assert_eq!(p["colorable"], true);
    let p = payload(&["color", "@c6", "--lists", "[[1],[1],[1],[2],[1],[2]]"]);
    assert_eq!(p["colorable"], false);
    let p = payload(&["choosable", "@k24", "-k", "2"]);
    assert_eq!(p["choosable"], false);
    assert!(p["bad_assignment"].is_object());
    // the square of C6 is the octahedron, which is 3-choosable
    assert_eq!(
        payload(&["choosable", "@c6", "-k", "3", "--square"])["choosable"],
        true
    );
    assert_eq!(
        payload(&["choosable", "@c6", "-k", "2", "--square"])["choosable"],
        false
    );
}

#[test]
fn verification_commands_pass() {
    let inv = call(&["verify-lemma", "no23v"]);
    assert_eq!(inv.exit_code, 0);
    assert_eq!(inv.report.unwrap().outcome, Outcome::Pass);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    let inv = call(&["verify-catalog", "--report", path.to_str().unwrap()]);
    assert_eq!(inv.exit_code, 0);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["payload"]["passed"], 19);
    assert_eq!(written["payload"]["entries"], 19);
}

#[test]
fn match_and_discharge() {
    let p = payload(&["match", "@grid3x3"]);
    assert_eq!(p["first"], "no2v4f");
    let p = payload(&["match", "@grid3x3", "--config", "no23v"]);
    assert_eq!(p["count"], 8);
    let p = payload(&["discharge", "@hexprism", "--ledger"]);
    assert_eq!(p["total_twelfths"], -96);
    assert_eq!(p["reconciled"], true);
    assert!(!p["transfers"].as_array().unwrap().is_empty());
}

#[test]
fn enumerate_and_gen_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = payload(&[
        "enumerate",
        "--n",
        "4",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(p["count"], 9);
    for f in p["files"].as_array().unwrap() {
        let text = std::fs::read_to_string(dir.path().join(f.as_str().unwrap())).unwrap();
        assert!(
            PlaneGraph::from_json(&text)
                .unwrap()
                .class_membership()
                .in_class
        );
    }
    let file = dir.path().join(p["files"][0].as_str().unwrap());
    assert_eq!(payload(&["inspect", file.to_str().unwrap()])["vertices"], 2);
    let a = payload(&["gen", "--seed", "7", "--n", "12"]);
    assert_eq!(a, payload(&["gen", "--seed", "7", "--n", "12"]));
    assert_eq!(a["graph"]["n"], 12);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["inspect", "no/such/file.json"],
        vec!["inspect", "@nothing"],
        vec!["verify-lemma", "no9v"],
        vec!["choosable", "@q3", "-k", "2"],
        vec!["color", "@c6", "--lists", "[[1]]"],
        vec!["discharge", "@q3", "--face", "0"],
        vec!["enumerate", "--n", "12", "--out", "unused"],
        vec!["gen", "--seed", "1", "--n", "1"],
        vec!["bogus"],
        vec![],
    ] {
        let inv = call(&args);
        assert_eq!(inv.exit_code, 2, "{args:?}");
        assert!(inv.stderr.starts_with("error"), "{args:?}: {}", inv.stderr);
        assert_eq!(inv.stderr.lines().count(), 1, "{args:?}");
        assert!(inv.stdout.is_empty());
    }
}

#[test]
fn malformed_graph_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"n\": 2, \"rot\": [[1], []]}").unwrap();
    assert_eq!(call(&["inspect", path.to_str().unwrap()]).exit_code, 2);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(call(&["--help"]).exit_code, 0);
    assert!(call(&["--version"])
        .stdout
        .contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn binary_prints_reports() {
    let good = Command::new(env!("CARGO_BIN_EXE_planesquare"))
        .args(["inspect", "@c6"])
        .output()
        .unwrap();
    assert_eq!(good.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&good.stdout).unwrap();
    assert_eq!(v["command"], "inspect");
    let bad = Command::new(env!("CARGO_BIN_EXE_planesquare"))
        .arg("bogus")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["match", "@hexprism"],
        vec!["discharge", "@grid3x3", "--ledger"],
        vec!["verify-lemma", "no333f"],
    ] {
        assert_eq!(call(&args).stdout, call(&args).stdout);
    }
}
