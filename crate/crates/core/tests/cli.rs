use std::process::Command;

fn orbitcat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitcat")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_all_small() {
    let (code, out, err) = orbitcat(&["verify", "all", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    let suites: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    for want in ["serre", "2-CY", "dg-compare", "geom", "braid"] {
        assert!(suites.iter().any(|s| s.contains(want)), "{want} missing from {suites:?}");
    }
    for r in v["reports"].as_array().unwrap() {
        assert!(r["cases"].as_u64().unwrap() > 0);
        assert!(r["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn cyclic_quiver_is_a_usage_error() {
    let (code, _, err) = orbitcat(&["quiver", "validate", "--quiver", "vertices 3; arrow 1 2; arrow 2 3; arrow 3 1"]);
    assert_eq!(code, 2);
    assert!(err.contains("oriented cycle"), "{err}");
}

#[test]
fn tilting_count_a3() {
    let (code, out, _) = orbitcat(&["geom", "tilting-count", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 14);
}

#[test]
fn ar_quiver_is_deterministic() {
    let args = ["orbit", "ar-quiver", "--n", "3", "--format", "dot"];
    let (code, first, _) = orbitcat(&args);
    assert_eq!(code, 0);
    assert_eq!(orbitcat(&args).1, first);
    let (_, a1, _) = orbitcat(&["orbit", "ar-quiver", "--n", "1", "--window=-1,1", "--format", "dot"]);
    assert_eq!(a1.matches("fillcolor").count(), 3);
    assert!(!a1.contains("->"));
}

#[test]
fn tables_by_default() {
    let (code, out, _) = orbitcat(&["orbit", "cy-check", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS"));
    let (code, out, _) = orbitcat(&["db", "serre-check", "--n", "2", "--lo", "-3", "--hi", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("serre"));
}
