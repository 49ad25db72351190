use std::path::Path;
use std::process::{Command, Output};

use madsq_core::io::read_graph;
use serde_json::Value;

fn madsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_madsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_writes_graph_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g3.dimacs");
    let out = madsq(&[
        "construct",
        "--family",
        "mad4",
        "--n",
        "3",
        "--out",
        path(&file),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let g = read_graph(&file).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (17, 29));
    let cert: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("g3.dimacs.cert.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(cert["family"], "mad4");
    assert_eq!(cert["claimed_max_degree"], 4);
    assert_eq!(cert["claimed_clique"].as_array().unwrap().len(), 10);
    assert_eq!(cert["potential_params"]["a"], 2);

    let out = madsq(&[
        "mad",
        path(&file),
        "--params",
        "2,1",
        "--mode",
        "both",
        "--json",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["mad"], "58/17");
    assert_eq!(v["bound_holds"], true);

    let out = madsq(&["mad", path(&file), "--params", "5,3", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["bound_holds"], false);

    let out = madsq(&["clique", path(&file), "--square", "--json"]);
    assert_eq!(json_of(&out)["omega"], 10);
}

#[test]
fn construct_needs_its_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.dimacs");
    assert_eq!(
        madsq(&[
            "construct",
            "--family",
            "tight",
            "--n",
            "3",
            "--out",
            path(&file)
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        madsq(&[
            "construct",
            "--family",
            "mad2k",
            "--k",
            "3",
            "--n",
            "8",
            "--out",
            path(&file)
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        madsq(&["construct", "--family", "bogus"]).status.code(),
        Some(2)
    );
    assert!(madsq(&[
        "construct",
        "--family",
        "tight",
        "--c",
        "2",
        "--out",
        path(&file)
    ])
    .status
    .success());
}

#[test]
fn sample_then_audit_and_discharge() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.dimacs");
    let out = madsq(&[
        "sample",
        "--n",
        "40",
        "--delta-min",
        "21",
        "--seed",
        "3",
        "--out",
        path(&file),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let g = read_graph(&file).unwrap();
    assert!(g.max_degree() >= 21);

    let out = madsq(&["audit", path(&file), "--c", "2", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["unexplained"], Value::Array(vec![]));
    assert_eq!(v["threshold"], "7/2");

    let out = madsq(&["discharge", path(&file), "--c", "2", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["final"].as_array().unwrap().len(), g.vertex_count());

    // below the degree floor the audit hypotheses fail
    let small = dir.path().join("small.dimacs");
    madsq(&[
        "sample",
        "--n",
        "12",
        "--delta-min",
        "4",
        "--out",
        path(&small),
    ]);
    assert_eq!(
        madsq(&["audit", path(&small), "--c", "2"]).status.code(),
        Some(2)
    );
    assert!(madsq(&["audit", path(&small), "--c", "2", "--unchecked"])
        .status
        .code()
        .is_some());
}

#[test]
fn chi_and_choosability() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c5.dimacs");
    std::fs::write(&file, "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let v = json_of(&madsq(&["chi", path(&file), "--json"]));
    assert_eq!(v["chi"], 3);
    assert_eq!(v["status"], "exact");
    let v = json_of(&madsq(&["chi", path(&file), "--square", "--json"]));
    assert_eq!(v["chi"], 5);
    let v = json_of(&madsq(&["chi", path(&file), "--heuristic", "--json"]));
    assert_eq!(v["status"], "bound");
    let v = json_of(&madsq(&["choosable", path(&file), "--k", "3", "--json"]));
    assert_eq!(v["choosable"], true);
    let text = String::from_utf8(madsq(&["choosable", path(&file), "--k", "2"]).stdout).unwrap();
    assert!(text.contains("2-choosable: false"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.dimacs");
    std::fs::write(&file, "p edge 2 1\ne 1 3\n").unwrap();
    let out = madsq(&["mad", path(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn verify_paper_report() {
    let out = madsq(&[
        "verify-paper",
        "--claim",
        "clique-2k",
        "--claim",
        "choosability",
        "--json",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    let ids: Vec<&str> = v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["claim_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["clique-2k", "choosability"]);
    assert_eq!(v["seed"], 1);

    let out = madsq(&["verify-paper", "--claim", "mad2k-family", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["claims"][0]["status"], "fail");

    assert!(madsq(&["verify-paper"]).status.success());
    assert_eq!(
        madsq(&["verify-paper", "--claim", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn case_sweep_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sweep.json");
    let out = madsq(&[
        "case-sweep",
        "--c-min",
        "2",
        "--c-max",
        "3",
        "--json",
        "--out",
        path(&file),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["total_violations"], 0);
    assert_eq!(v["runs"].as_array().unwrap().len(), 2);
    assert_eq!(v["runs"][0]["threshold"], "7/2");
}
