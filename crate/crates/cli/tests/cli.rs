use std::process::{Command, Output};

fn corners(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corners")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_json_for_small_type_b() {
    let o = corners(&["census", "--family", "type-b", "--size", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cardinality"], "8");
    assert_eq!(v["totalCorners"], "3");
}

#[test]
fn formula_domain_error_exits_two() {
    let o = corners(&["formula", "corners", "--family", "tree-like", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n >= 2"));
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(corners(&["census", "--family", "nonsense", "-n", "2"]).status.code(), Some(2));
    assert_eq!(corners(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn budget_error_exits_two() {
    let o = corners(&["enumerate", "--family", "tree-like", "-n", "12"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let o = corners(&["verify", "--suite", "all", "--max-size", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    let ids: std::collections::BTreeSet<&str> =
        v["rows"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    for id in [
        "tree-like-total-corners",
        "permutation-corner-probability",
        "tree-like-corner-probability",
        "permutation-expected-corners",
        "symmetric-total-corners",
        "type-b-corner-probability",
        "symmetric-corner-probability",
        "type-b-expected-corners",
        "symmetric-corner-decomposition",
        "type-b-cardinality",
        "symmetric-type-b-round-trip",
        "measure-pushforward",
        "u-generating-function",
    ] {
        assert!(ids.contains(id), "missing {id}");
    }
}

#[test]
fn probability_table_and_csv() {
    let o = corners(&["formula", "probability", "--family", "symmetric", "-n", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "k,probability\n1,1/4\n2,3/8\n3,1/2\n4,3/8\n5,1/4\n");
    let o = corners(&["formula", "probability", "--family", "permutation", "-n", "3", "-k", "2"]);
    assert!(stdout(&o).contains("1/2"));
}

#[test]
fn bijection_inverse_then_forward() {
    let o = corners(&["bijection", "inverse", "--path", "SWSWS", "--rows", "1,00,01,1,", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rec["path"], "SWSWSWSWSWSW");
    let rows: Vec<&str> = rec["rows"].as_array().unwrap().iter().map(|r| r.as_str().unwrap()).collect();
    let o = corners(&["bijection", "forward", "--path", "SWSWSWSWSWSW", "--rows", &rows.join(","), "--format", "json"]);
    let back: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(back["path"], "SWSWS");
    assert_eq!(back["rows"], serde_json::json!(["1", "00", "01", "1", ""]));
}

#[test]
fn bijection_rejects_asymmetric_input() {
    let o = corners(&["bijection", "forward", "--path", "SSWW", "--rows", "**,.*"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sample_report_is_reproducible_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, extra) in [(&a, None), (&b, Some("--sequential"))] {
        let mut args =
            vec!["sample", "--family", "type-b", "-n", "8", "--samples", "3000", "--seed", "5", "--format", "json"];
        args.extend(["--out", path.to_str().unwrap()]);
        args.extend(extra);
        assert_eq!(corners(&args).status.code(), Some(0));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["sampleCount"], 3000);
    assert!(v["generator"].as_str().unwrap().contains("ChaCha8"));
    assert_eq!(v["reference"], "25/16");
}

#[test]
fn sampled_tableaux_are_listed() {
    let o =
        corners(&["sample", "--family", "permutation", "-n", "4", "--samples", "5", "--tableaux", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
    let o = corners(&["sample", "--family", "type-b", "-n", "4", "--samples", "5", "--tableaux"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_lists_every_tableau() {
    let o = corners(&["enumerate", "--family", "permutation", "-n", "3", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 6);
}
