use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_impartial"))
        .args(args)
        .env_remove("REMOTENESS_MAX_NODES")
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_owned()
}

fn lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(str::to_owned).collect()
}

#[test]
fn euclid_query() {
    let v = run_json(&["remoteness", "euclid", "17", "12"]);
    assert_eq!(v["remoteness"], 6);
    assert_eq!(v["class"], "P");
    assert_eq!(v["optimal_move"], json!({"game": "euclid", "x": 5, "y": 12}));
    assert_eq!(v["trace"].as_array().unwrap().len(), 7);
    assert_eq!(v["trace"][6], json!([1, 1]));

    let v = run_json(&["sg", "euclid", "10", "3"]);
    assert_eq!(v["class"], "N");
    assert_eq!(v["sg"], 3);
}

#[test]
fn euclid_large_coordinates_are_strings() {
    let big = "123456789012345678901234567890";
    let v = run_json(&["--compact", "remoteness", "euclid", big, "7"]);
    assert_eq!(v["position"]["x"], big);
    assert!(v["remoteness"].is_u64());
}

#[test]
fn wythoff_query() {
    let v = run_json(&["remoteness", "wythoff", "--a", "1", "--b", "1", "0", "0"]);
    assert_eq!(v["remoteness"], 0);
    assert_eq!(v["class"], "P");
    assert!(v.get("optimal_move").is_none());

    let v = run_json(&["remoteness", "wythoff", "--a", "1", "--b", "1", "4", "9"]);
    assert_eq!(v["class"], "N");
    let mv = &v["optimal_move"];
    let (x, y) = (mv["x"].as_u64().unwrap(), mv["y"].as_u64().unwrap());
    let target = run_json(&["remoteness", "wythoff", "--a", "1", "--b", "1", &x.to_string(), &y.to_string()]);
    assert_eq!(target["class"], "P");
    assert_eq!(target["remoteness"].as_u64().unwrap() + 1, v["remoteness"].as_u64().unwrap());
}

#[test]
fn moore_query() {
    let v = run_json(&["remoteness", "moore", "--k", "1", "--piles", "2,3"]);
    assert_eq!(v["remoteness"], 5);
    assert_eq!(v["class"], "N");
    assert_eq!(v["optimal_move"]["piles"], json!([2, 2]));
}

#[test]
fn nim_graph_and_json_queries() {
    let v = run_json(&["sg", "nim", "5"]);
    assert_eq!((v["remoteness"].clone(), v["sg"].clone()), (json!(1), json!(5)));

    let g = temp_file(
        "path.json",
        r#"{"nodes":["a","b","c"],"edges":[["a","b"],["b","c"]],"start":"a"}"#,
    );
    let v = run_json(&["sg", "graph", "--file", &g]);
    assert_eq!(v["remoteness"], 2);
    assert_eq!(v["class"], "P");

    let v = run_json(&["remoteness", "json", r#"{"game":"euclid","x":17,"y":12}"#]);
    assert_eq!(v["remoteness"], 6);
    let f = temp_file("pos.json", r#"{"game":"moore","k":1,"piles":[2,3]}"#);
    let v = run_json(&["remoteness", "json", "--file", &f]);
    assert_eq!(v["remoteness"], 5);
}

#[test]
fn hypergraph_query() {
    let h = temp_file("moore32.json", r#"{"n":3,"edges":[[1],[2],[3],[1,2],[1,3],[2,3]]}"#);
    let v = run_json(&["remoteness", "hypergraph", "--file", &h, "--piles", "2,2,2"]);
    assert_eq!(v["remoteness"], 4);
    assert_eq!(v["class"], "P");
    let v = run_json(&["remoteness", "hypergraph", "--file", &h, "--piles", "1,2,3"]);
    assert_eq!(v["remoteness"], 3);
    assert_eq!(v["optimal_move"]["piles"], json!([1, 1, 1]));

    // not MTF: answered by the engine
    let h = temp_file("single.json", r#"{"n":2,"edges":[[1]]}"#);
    let v = run_json(&["sg", "hypergraph", "--file", &h, "--piles", "3,4"]);
    assert_eq!(v["remoteness"], 1);
    assert_eq!(v["sg"], 3);
}

#[test]
fn tables() {
    let out = run(&["table", "wythoff", "--a", "1", "--b", "1", "--max-m", "3"]);
    assert!(out.status.success());
    assert_eq!(lines(&out), ["m,x_m,y_m", "0,0,0", "1,1,2", "2,3,5", "3,4,7"]);

    let out = run(&["table", "wythoff", "--a", "2", "--b", "3", "--max-m", "2"]);
    assert_eq!(lines(&out)[1..], ["0,0,0", "1,3,5", "2,8,12"]);

    let out = run(&["table", "euclid", "--max", "3"]);
    let rows = lines(&out);
    assert_eq!(rows[0], "x,y,remoteness,class");
    assert_eq!(rows.len(), 10);
    assert!(rows.contains(&"3,2,2,P".to_owned()));
    assert!(rows.contains(&"2,2,0,P".to_owned()));
}

#[test]
fn verify_examples_pass() {
    let h = temp_file("verify_moore32.json", r#"{"n":3,"edges":[[1],[2],[3],[1,2],[1,3],[2,3]]}"#);
    let cases: [&[&str]; 4] = [
        &["verify", "euclid", "--max", "25"],
        &["verify", "wythoff", "--a", "2", "--b", "3", "--max", "20"],
        &["verify", "moore", "--n", "3", "--k", "2", "--max-pile", "4"],
        &["verify", "hypergraph", "--file", &h, "--max-pile", "3"],
    ];
    for args in cases {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        let all = lines(&out);
        assert_eq!(all.len(), 1, "{args:?} printed mismatches");
        let summary: Value = serde_json::from_str(&all[0]).unwrap();
        assert_eq!(summary["mismatches"], 0);
        assert!(summary["checked"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_rejects_non_mtf() {
    let h = temp_file("triangle_h.json", r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#);
    assert_eq!(code(&["verify", "hypergraph", "--file", &h, "--max-pile", "2"]), 2);
}

#[test]
fn reduce_vc() {
    let triangle = temp_file(
        "triangle.json",
        r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]],"c":1}"#,
    );
    let v = run_json(&["reduce-vc", "--file", &triangle]);
    assert_eq!(v["k"], 1);
    let values: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["value"].as_u64().unwrap()).collect();
    assert_eq!(values, [5, 3, 6, 1, 2, 4]);
    assert_eq!(v["rows"][0]["label"], "v:a");
    assert_eq!(v["rows"][3]["label"], "slack:0:0");

    for (c, expect) in [("1", false), ("2", true), ("3", true)] {
        let v = run_json(&["reduce-vc", "--file", &triangle, "--cover-size", c, "--check"]);
        assert_eq!(v["check"]["maximal_move"], expect, "c = {c}");
        assert_eq!(v["check"]["min_vertex_cover"], 2);
        assert_eq!(v["check"]["consistent"], true);
    }

    let path3 = temp_file("path3.json", r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2]]}"#);
    let v = run_json(&["reduce-vc", "--file", &path3, "--cover-size", "1", "--check"]);
    assert_eq!(v["check"], json!({"maximal_move": true, "min_vertex_cover": 1, "consistent": true}));

    let edge = temp_file("edge.json", r#"{"vertices":["u","v"],"edges":[["u","v"]],"c":1}"#);
    let v = run_json(&["reduce-vc", "--file", &edge, "--check"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(v["check"]["maximal_move"], true);
}

#[test]
fn reduce_vc_malformed() {
    let bad = temp_file("bad_vc.json", r#"{"vertices":["a"],"edges":[["a","z"]],"c":1}"#);
    assert_eq!(code(&["reduce-vc", "--file", &bad]), 2);
    let looped = temp_file("loop_vc.json", r#"{"vertices":["a"],"edges":[["a","a"]],"c":1}"#);
    assert_eq!(code(&["reduce-vc", "--file", &looped]), 2);
    let no_c = temp_file("no_c.json", r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#);
    assert_eq!(code(&["reduce-vc", "--file", &no_c]), 2);
}

#[test]
fn compounds() {
    let conj = temp_file(
        "conj.json",
        r#"{"mode":"conjunctive","components":[{"game":"euclid","x":17,"y":11},{"game":"euclid","x":17,"y":12}]}"#,
    );
    let v = run_json(&["compound", "--file", &conj]);
    assert_eq!(v["remoteness"], 4);
    assert_eq!(v["class"], "P");
    let moved = v["optimal_move"]["components"].as_array().unwrap();
    assert_eq!(moved.len(), 2);
    let checked = run_json(&["compound", "--file", &conj, "--oracle"]);
    assert_eq!(checked["remoteness"], 4);

    let disj = temp_file(
        "disj.json",
        r#"{"mode":"disjunctive","components":[{"game":"nim","pile":3},{"game":"nim","pile":5}]}"#,
    );
    let v = run_json(&["compound", "--file", &disj]);
    assert_eq!(v["sg"], 6);
    assert_eq!(v["class"], "N");
    let v = run_json(&["compound", "--file", &disj, "--oracle"]);
    assert_eq!(v["sg"], 6);
    assert_eq!(v["optimal_move"]["components"], json!([{"game": "nim", "pile": 3}, {"game": "nim", "pile": 3}]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["remoteness", "euclid", "0", "3"]), 2);
    assert_eq!(code(&["remoteness", "euclid", "x", "3"]), 2);
    assert_eq!(code(&["remoteness", "wythoff", "--a", "0", "--b", "1", "1", "1"]), 2);
    assert_eq!(code(&["remoteness", "moore", "--k", "3", "--piles", "1,2"]), 2);
    assert_eq!(code(&["remoteness", "json", r#"{"game":"chess"}"#]), 2);
    assert_eq!(code(&["remoteness", "graph", "--file", "/nonexistent/g.json"]), 2);
    let cyclic = temp_file("cycle.json", r#"{"nodes":["a","b"],"edges":[["a","b"],["b","a"]],"start":"a"}"#);
    assert_eq!(code(&["remoteness", "graph", "--file", &cyclic]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
}

#[test]
fn capacity_errors_exit_3() {
    let big = temp_file("big_h.json", r#"{"n":21,"edges":[[1]]}"#);
    let piles = vec!["1"; 21].join(",");
    assert_eq!(code(&["remoteness", "hypergraph", "--file", &big, "--piles", &piles]), 3);

    let out = Command::new(env!("CARGO_BIN_EXE_impartial"))
        .args(["remoteness", "json", r#"{"game":"hypergraph","piles":[9,9],"hypergraph":{"n":2,"edges":[[1]]}}"#])
        .env("REMOTENESS_MAX_NODES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let huge = u64::MAX.to_string();
    assert_eq!(code(&["remoteness", "wythoff", "--a", "1", "--b", "1", "3", &huge]), 3);
}

#[test]
fn bad_node_budget_is_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_impartial"))
        .args(["remoteness", "nim", "1"])
        .env("REMOTENESS_MAX_NODES", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let conj = temp_file(
        "det.json",
        r#"{"mode":"conjunctive","components":[{"game":"wythoff","a":2,"b":3,"x":4,"y":12},{"game":"moore","k":2,"piles":[1,2,3]}]}"#,
    );
    let queries: [&[&str]; 3] = [
        &["remoteness", "euclid", "1000003", "999"],
        &["compound", "--file", &conj, "--oracle"],
        &["table", "euclid", "--max", "6"],
    ];
    for args in queries {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
