use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn kernelfix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kernelfix"))
        .args(args)
        .env_remove("KERNELFIX_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn trajectory_examples() {
    let out = kernelfix(&["trajectory", "--graph", "P3", "--word", "0 1 2", "--config", "111"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["y"], "001");

    let out = kernelfix(&["trajectory", "--graph", "P3", "--word", "0 2 1", "--config", "111"]);
    assert_eq!(json(&out)["y"], "010");

    let out = kernelfix(&["trajectory", "--graph", "P3", "--word", "", "--config", "101", "--trace"]);
    let v = json(&out);
    assert_eq!(v["y"], "101");
    assert_eq!(v["trajectory"], serde_json::json!(["101"]));
}

#[test]
fn check_word_exit_codes() {
    let out = kernelfix(&["check-word", "--fixes", "--graph", "P3", "--word", "0 1 2"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["answer"], false);
    assert_eq!(v["witness"]["kind"], "config");

    let out = kernelfix(&["check-word", "--fixes", "--graph", "P3", "--word", "0 2 1"]);
    assert_eq!(code(&out), 0);

    let out = kernelfix(&["check-word", "--prefixes", "--graph", "C7", "--word", "6 5 4 3 2 1 0"]);
    assert_eq!(code(&out), 0);

    let out = kernelfix(&["--format", "text", "check-word", "--suffixes", "--graph", "P3", "--word", "b"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("dominion at a"));
}

#[test]
fn check_set_examples() {
    let out = kernelfix(&["check-set", "--fixing-set", "--graph", "P3", "--set", "0 2"]);
    assert_eq!(code(&out), 0);

    let out = kernelfix(&["check-set", "--fixing-set", "--graph", "P3", "--set", "1"]);
    assert_eq!(code(&out), 1);
    let w = &json(&out)["witness"];
    assert_eq!((w["kind"].as_str(), w["v"].as_u64()), (Some("dominion"), Some(0)));
    assert_eq!(w["I"], serde_json::json!([2]));

    let out = kernelfix(&["check-set", "--colony", "--graph", "C5", "--set", ""]);
    assert_eq!(code(&out), 0);

    let out = kernelfix(&["check-set", "--cover", "--graph", "P3", "--set", "0"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["witness"]["kind"], "edge");
}

#[test]
fn dominion_rule_flag() {
    // On K3 with W = {0} only the open rule lets vertex 2 colonize 0 for v = 1.
    let closed = kernelfix(&["check-set", "--dominion", "--graph", "K3", "--set", "0"]);
    let open = kernelfix(&["check-set", "--dominion", "--open-rule", "--graph", "K3", "--set", "0"]);
    assert_eq!(code(&closed), 1);
    assert_eq!(code(&open), 0);
    assert_eq!(json(&open)["rule"], "open");
}

#[test]
fn permis_commands() {
    assert_eq!(code(&kernelfix(&["permis", "find", "--graph", "C7"])), 1);

    let out = kernelfix(&["permis", "find", "--graph", "P4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["answer"], "exists");

    let out = kernelfix(&["permis", "certify-none", "--graph", "W8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["certificate"]["S"], serde_json::json!([0, 1, 2, 3, 4, 5, 6]));

    let out = kernelfix(&["permis", "construct", "--graph", "C6"]);
    assert_eq!((code(&out), json(&out)["route"].as_str()), (0, Some("comparability")));

    let out = kernelfix(&["permis", "construct", "--graph", "C7"]);
    assert_eq!(code(&out), 1);

    let out = kernelfix(&["permis", "construct", "--outer", "P3", "--part", "C5", "--part", "K2", "--part", "K1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["word"].as_array().unwrap().len(), 8);

    let out = kernelfix(&["permis", "find", "--graph", "C11", "--max-order", "10"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn census_streams_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.jsonl");
    let p = path.to_str().unwrap();
    let out = kernelfix(&["permis", "census", "--max-n", "7", "--out", p]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["without_permis"], serde_json::json!(["F@Ue?"]));
    let full = fs::read_to_string(&path).unwrap();
    assert_eq!(full.lines().count(), 1 + 2 + 4 + 11 + 34 + 156 + 1044);

    // Simulate an interruption mid-line.
    fs::write(&path, &full[..full.len() / 2]).unwrap();
    let out = kernelfix(&["permis", "census", "--max-n", "7", "--out", p, "--resume"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["resumed"].as_u64().unwrap() > 0);
    assert_eq!(fs::read_to_string(&path).unwrap(), full);

    let single = dir.path().join("single.jsonl");
    let out = kernelfix(&["--deterministic", "permis", "census", "--max-n", "7", "--out", single.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(&single).unwrap(), full);
}

#[test]
fn reductions_with_verification() {
    let dir = tempfile::tempdir().unwrap();
    let file = |name: &str, body: &str| {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_owned()
    };
    let no = file("no.json", r#"{"n": 4, "subsets": [[], [0], [1, 2], [3]], "k": 2}"#);
    let gadget = dir.path().join("gadget.json");
    let out = kernelfix(&["reduce", "setcover-colony", "--in", &no, "--out", gadget.to_str().unwrap(), "--verify"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!((v["source_answer"].as_bool(), v["target_answer"].as_bool()), (Some(false), Some(false)));
    let written: Value = serde_json::from_str(&fs::read_to_string(&gadget).unwrap()).unwrap();
    assert_eq!(written["labels"]["q_4^2"], 11);

    let out = kernelfix(&["reduce", "colony-dominion", "--in", gadget.to_str().unwrap(), "--verify"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["preserved"], true);

    let yes = file("yes.json", r#"{"n": 1, "subsets": [[0]], "k": 1}"#);
    let out = kernelfix(&["reduce", "setcover-colony", "--in", &yes, "--verify"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["target_answer"], true);

    let p3 = file("p3.json", r#"{"graph": "P3", "target": [0, 2]}"#);
    let out = kernelfix(&["reduce", "fixingset-word", "--in", &p3]);
    assert_eq!(json(&out)["word"], serde_json::json!([0, 2, 0, 2]));
    assert_eq!(code(&kernelfix(&["reduce", "nondominion-fixingset", "--in", &p3, "--verify"])), 0);

    let bad = file("bad.json", "{not json");
    assert_eq!(code(&kernelfix(&["reduce", "setcover-colony", "--in", &bad])), 2);
}

#[test]
fn errors_exit_two() {
    assert_eq!(code(&kernelfix(&["trajectory", "--graph", "P3", "--word", "0 5", "--config", "111"])), 2);
    assert_eq!(code(&kernelfix(&["trajectory", "--graph", "P3", "--word", "0", "--config", "11"])), 2);
    assert_eq!(code(&kernelfix(&["check-word", "--graph", "P3", "--word", "0"])), 2);
    assert_eq!(code(&kernelfix(&["kernels", "--graph", "P3", "--graph-file", "x"])), 2);
    assert_eq!(code(&kernelfix(&["kernels", "--graph", "{nope"])), 2);
}

#[test]
fn extras() {
    let out = kernelfix(&["shortest-word", "--graph", "P3"]);
    assert_eq!(json(&out)["word"], serde_json::json!([0, 2]));

    let out = kernelfix(&["kernels", "--graph", "C5"]);
    assert_eq!(json(&out)["kernels"].as_array().unwrap().len(), 5);

    let out = kernelfix(&["--format", "text", "enumerate", "--n", "4"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 11);

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    fs::write(&g, r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#).unwrap();
    let out = kernelfix(&["check-word", "--fixes", "--graph-file", g.to_str().unwrap(), "--word", "acb"]);
    assert_eq!(code(&out), 0);
}
