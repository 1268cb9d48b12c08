use std::process::Command;

fn specrep(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_specrep"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_thm54_b() {
    let (code, out, _) = specrep(&["verify", "--suite", "thm54", "--family", "B", "--max-rank", "9"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("equal at all ranks"));
    assert!(out.contains("SUITE thm54 PASS"));
}

#[test]
fn g2_dot() {
    let (code, out, _) = specrep(&["graph", "--type", "G2", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches(" [label=\"").count(), 5, "3 nodes + 2 edges:\n{out}");
    assert_eq!(out.matches("label=\"G2\"").count(), 1);
}

#[test]
fn rank_mismatch_is_usage_error() {
    let (code, _, err) = specrep(&["info", "--type", "A4", "--rep", "(1,3)"]);
    assert_eq!(code, 2);
    assert!(err.contains("rank mismatch"), "{err}");
}

#[test]
fn strict_mode_fails_on_anomaly() {
    let (code, out, _) = specrep(&["verify", "--suite", "tables"]);
    assert_eq!(code, 0);
    assert!(out.contains("SUITE tables PASS checked="));
    let (code, out, _) = specrep(&["verify", "--suite", "tables", "--strict"]);
    assert_eq!(code, 1);
    assert!(out.contains("SUITE tables FAIL"));
}

#[test]
fn json_and_enumerate() {
    let (code, out, _) = specrep(&["graph", "--type", "B2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    let e = &v["edges"][0];
    for key in ["lo", "hi", "kind", "p", "a_diff", "wprime", "anomaly"] {
        assert!(e.get(key).is_some(), "missing {key}");
    }
    let (code, out, _) = specrep(&["enumerate", "--type", "D2"]);
    assert_eq!(code, 0);
    assert!(out.contains("(1,1)[I]\ta=1\tdual=(1,1)[I]\tdegenerate"), "{out}");
}

#[test]
fn output_is_byte_stable() {
    let a = specrep(&["graph", "--type", "D4xA2", "--format", "dot"]).1;
    let b = specrep(&["graph", "--type", "D4xA2", "--format", "dot"]).1;
    assert_eq!(a, b);
}

#[test]
fn out_file_and_bad_input() {
    let dir = std::env::temp_dir().join(format!("specrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h4.dot");
    let (code, _, _) = specrep(&["graph", "--type", "H4", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&path).unwrap().contains("label=\"Δ\""));
    assert_eq!(specrep(&["graph", "--type", "Z3"]).0, 2);
    assert_eq!(specrep(&["verify", "--suite", "unknown"]).0, 2);
    assert_eq!(specrep(&["dual", "--type", "E7", "--rep", "7_2"]).0, 2);
}
