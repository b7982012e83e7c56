//! End-to-end tests of the command-line interface.

use std::process::{Command, Output};

fn throttle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_throttle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = throttle(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

const P9: &str = "HhCGGC@";

#[test]
fn compute_power_dom_prodstar_on_p9() {
    let out = stdout(&[
        "compute",
        "--kind",
        "pd",
        "--variant",
        "prodstar",
        "--graph6",
        P9,
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 3);
    assert_eq!(v["kind"], "pd");
    assert_eq!(v["variant"], "prodstar");
    // declared key order
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        ["kind", "variant", "omega", "value", "k", "witness", "curve"]
    );
}

#[test]
fn compute_table_and_csv_formats() {
    let table = stdout(&[
        "compute",
        "--kind",
        "cops",
        "--variant",
        "prodx",
        "--graph6",
        P9,
        "--out",
        "table",
    ]);
    assert!(table.contains("value=5"));
    let csv = stdout(&[
        "compute",
        "--kind",
        "zf",
        "--variant",
        "sum",
        "--graph6",
        P9,
        "--out",
        "csv",
    ]);
    assert!(csv.starts_with("k,pt,objective"));
}

#[test]
fn family_gnsm_round_trips() {
    let enc = stdout(&["family", "--name", "gnsm", "--params", "3,3,4"]);
    let g = throttle_core::graph6::parse_graph6(enc.trim()).unwrap();
    assert_eq!(g.order(), 30);
    let json = stdout(&[
        "family",
        "--name",
        "unit-interval",
        "--params",
        "0,1/2,3/2,3",
        "--out",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn enumerate_counts() {
    let out = stdout(&["enumerate", "--n", "5"]);
    assert_eq!(out.lines().count(), 21);
    let all = stdout(&["enumerate", "--n", "5", "--all"]);
    assert_eq!(all.lines().count(), 34);
}

#[test]
fn gallery_and_convert() {
    let g6 = stdout(&["gallery", "--name", "h11"]);
    let back = stdout(&["convert", "--graph6", g6.trim(), "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&back).unwrap();
    assert_eq!(v["n"], 11);
    assert_eq!(v["edges"].as_array().unwrap().len(), 26);
    // edges sorted with u < v
    let edges = v["edges"].as_array().unwrap();
    for w in edges.windows(2) {
        let (a, b) = (w[0].as_array().unwrap(), w[1].as_array().unwrap());
        assert!(a[0].as_u64() < a[1].as_u64());
        assert!((a[0].as_u64(), a[1].as_u64()) < (b[0].as_u64(), b[1].as_u64()));
    }
}

#[test]
fn convert_json_file_input_and_multi_graph_stream() {
    let dir = std::env::temp_dir();
    let jpath = dir.join("throttle_cli_test_graph.json");
    std::fs::write(&jpath, r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#).unwrap();
    let out = stdout(&[
        "convert",
        "--file",
        jpath.to_str().unwrap(),
        "--out",
        "graph6",
    ]);
    assert_eq!(out.trim(), "Cl");
    let gpath = dir.join("throttle_cli_test_graphs.g6");
    std::fs::write(&gpath, "Cl\nA_\n").unwrap();
    let out = stdout(&[
        "compute",
        "--kind",
        "zf",
        "--variant",
        "sum",
        "--file",
        gpath.to_str().unwrap(),
    ]);
    assert_eq!(out.lines().count(), 2, "one result line per input graph");
}

#[test]
fn verify_single_check() {
    let out = stdout(&["verify", "--id", "cop-star-full-ary-tree"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["counterexample"], serde_json::Value::Null);
}

#[test]
fn exit_codes() {
    // usage error
    let out = throttle(&["compute", "--kind", "zf"]);
    assert_eq!(out.status.code(), Some(1));
    let out = throttle(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    // unknown check id
    let out = throttle(&["verify", "--id", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    // budget exhaustion
    let out = Command::new(env!("CARGO_BIN_EXE_throttle"))
        .args([
            "compute",
            "--kind",
            "cops",
            "--variant",
            "sum",
            "--graph6",
            P9,
        ])
        .env("THROTTLE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // --help succeeds
    let out = throttle(&["compute", "--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_thread_count_invariant() {
    for args in [
        vec![
            "compute",
            "--kind",
            "pd",
            "--variant",
            "prodstar",
            "--graph6",
            P9,
        ],
        vec!["verify", "--id", "zf-star-max-forbidden"],
        vec![
            "curve",
            "--kind",
            "cops",
            "--variant",
            "sum",
            "--family",
            "path",
            "--params",
            "7",
        ],
    ] {
        let mut one = args.clone();
        one.extend(["--threads", "1"]);
        let mut four = args.clone();
        four.extend(["--threads", "4"]);
        let a = stdout(&one);
        let b = stdout(&four);
        // elapsed_ms varies; compare everything else
        let scrub = |s: &str| {
            let mut v: serde_json::Value = match serde_json::from_str(s) {
                Ok(v) => v,
                Err(_) => return s.to_string(),
            };
            if let Some(o) = v.as_object_mut() {
                o.remove("elapsed_ms");
            }
            v.to_string()
        };
        assert_eq!(scrub(&a), scrub(&b), "{args:?}");
    }
}
