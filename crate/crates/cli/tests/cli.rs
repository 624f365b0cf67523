use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn indexcalc() -> Command {
    let mut cmd = Command::cargo_bin("indexcalc").unwrap();
    cmd.env_remove("INDEXCALC_CATALOG_DIR");
    cmd
}

fn json_of(args: &[&str]) -> Value {
    let out = indexcalc().arg("--format").arg("json").args(args).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn genus_golden() {
    indexcalc()
        .args(["genus", "--kind", "L", "--half-dim", "2"])
        .assert()
        .success()
        .stdout("1 + 1/3·p1 + 7/45·p2 \u{2212} 1/45·p1^2\n");
    indexcalc()
        .args(["genus", "--kind", "Todd", "--half-dim", "1"])
        .assert()
        .success()
        .stdout("1 + 1/2·c1\n");
    indexcalc()
        .args(["genus", "--kind", "Ahat", "--half-dim", "1"])
        .assert()
        .success()
        .stdout("1 \u{2212} 1/24·p1\n");
}

#[test]
fn genus_json_has_text_fields() {
    let v = json_of(&["genus", "--kind", "L", "--half-dim", "2"]);
    assert_eq!(v["polynomial"], "1 + 1/3·p1 + 7/45·p2 \u{2212} 1/45·p1^2");
    assert_eq!(v["terms"]["p1^2"], "-1/45");
    assert_eq!(v["kind"], "L");
}

#[test]
fn index_values() {
    indexcalc()
        .args(["index", "--manifold", "k3", "--complex", "signature"])
        .assert()
        .success()
        .stdout("\u{2212}16\n");
    for (manifold, complex, expected) in [
        ("cp2", "signature", "1"),
        ("k3", "dolbeault", "2"),
        ("k3", "spin", "2"),
        ("k3", "euler", "24"),
        ("cp3", "dolbeault", "1"),
        ("hp2", "signature", "1"),
        ("s4", "euler", "2"),
        ("cp1xcp1", "signature", "0"),
    ] {
        indexcalc()
            .args(["index", "--manifold", manifold, "--complex", complex])
            .assert()
            .success()
            .stdout(format!("{expected}\n"));
    }
}

#[test]
fn twisted_indices() {
    for k in -2..=3 {
        let bundle = if k == 0 { "O".to_string() } else { format!("O({k})") };
        indexcalc()
            .args(["index", "--manifold", "cp1", "--complex", "dolbeault", "--bundle", &bundle])
            .assert()
            .success()
            .stdout(format!("{}\n", (k + 1).to_string().replace('-', "\u{2212}")));
    }
    let v = json_of(&["index", "--manifold", "cp1", "--complex", "spin", "--bundle", "O(-2)"]);
    assert_eq!(v["integer_value"], -2);
    assert_eq!(v["kind"], "spin_twisted");
}

#[test]
fn index_json_fields() {
    let v = json_of(&["index", "--manifold", "k3", "--complex", "signature"]);
    assert_eq!(v["integer_value"], -16);
    assert_eq!(v["value"], "-16");
    assert_eq!(v["manifold"], "k3");
    assert_eq!(v["density"], "1 \u{2212} 2/3·c2");
}

#[test]
fn index_errors_exit_two() {
    indexcalc()
        .args(["index", "--manifold", "cp2", "--complex", "spin"])
        .assert()
        .code(2)
        .stdout("")
        .stderr(predicate::str::contains("non-integer"));
    indexcalc()
        .args(["index", "--manifold", "s4", "--complex", "dolbeault"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("complex"));
    indexcalc()
        .args(["index", "--manifold", "nowhere", "--complex", "euler"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("unknown manifold"));
    indexcalc()
        .args(["index", "--manifold", "cp1", "--complex", "dolbeault", "--bundle", "E8"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("unknown bundle"));
}

#[test]
fn usage_errors_exit_two() {
    indexcalc().arg("frobnicate").assert().code(2);
    indexcalc().args(["genus", "--kind", "L"]).assert().code(2);
    indexcalc()
        .args(["detreg", "--op", "pbc_laplacian", "--beta", "-1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("beta"));
}

#[test]
fn detreg_output() {
    indexcalc()
        .args(["detreg", "--op", "pbc_laplacian", "--beta", "1"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("closed=1\noracle="))
        .stdout(predicate::str::contains("delta="));
    indexcalc()
        .args(["detreg", "--op", "pbc_laplacian", "--beta", "2"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("closed=4\n"));
    let v = json_of(&["detreg", "--op", "apbc_first_order_shifted", "--beta", "1", "--param", "0"]);
    assert_eq!(v["closed"], 2.0);
    assert_eq!(v["within_tolerance"], true);
    indexcalc()
        .args(["detreg", "--op", "pbc_curvature_block", "--beta", "1", "--param", "6.283185307179586"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("singular"));
}

#[test]
fn fermion_checks_table() {
    indexcalc()
        .args(["fermion-checks", "--max-n", "5"])
        .assert()
        .success()
        .stdout(predicate::str::contains("FAIL").not())
        .stdout(predicate::str::contains("normalization            \u{2212}i"));
    let v = json_of(&["fermion-checks", "--max-n", "3"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 21);
    indexcalc().args(["fermion-checks", "--max-n", "6"]).assert().code(2);
}

#[test]
fn verify_suite() {
    indexcalc()
        .arg("verify")
        .assert()
        .success()
        .stdout(predicate::str::contains(" 0 failed"));
    let v = json_of(&["verify", "--all"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["all_passed"], true);
}

#[test]
fn catalog_listing() {
    indexcalc()
        .arg("catalog")
        .assert()
        .success()
        .stdout(predicate::str::contains("k3 "))
        .stdout(predicate::str::contains("hp2"));
    let v = json_of(&["catalog"]);
    assert!(v.as_array().unwrap().len() >= 9);
}

const BAD_CP2: &str = r#"{
  "schema_version": 1,
  "manifold": {
    "name": "fake",
    "real_dim": 4,
    "kind": "complex",
    "generators": [{ "name": "h", "degree": 2 }],
    "evaluation": { "h^2": 1 },
    "tangent_class": { "1": "1", "h": "3", "h^2": "3" },
    "expected": { "signature": 5 }
  }
}
"#;

#[test]
fn descriptor_from_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mine.json");
    std::fs::write(&path, BAD_CP2).unwrap();
    indexcalc()
        .args(["index", "--manifold", path.to_str().unwrap(), "--complex", "signature"])
        .assert()
        .success()
        .stdout("1\n");

    std::fs::write(&path, BAD_CP2.replace("\"degree\": 2", "\"degree\": 3")).unwrap();
    indexcalc()
        .args(["index", "--manifold", path.to_str().unwrap(), "--complex", "signature"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("odd generator degree"));

    std::fs::write(&path, "{ \"schema_version\": 1,\n  \"manifold\": ").unwrap();
    indexcalc()
        .args(["index", "--manifold", path.to_str().unwrap(), "--complex", "signature"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("line 2"));
}

#[test]
fn catalog_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("fake.json"), BAD_CP2).unwrap();
    let mut cmd = Command::cargo_bin("indexcalc").unwrap();
    cmd.env("INDEXCALC_CATALOG_DIR", dir.path())
        .arg("catalog")
        .assert()
        .success()
        .stdout(predicate::str::starts_with("fake "))
        .stdout(predicate::str::contains("k3").not());

    // The recorded signature 5 disagrees with the computed 1.
    let mut cmd = Command::cargo_bin("indexcalc").unwrap();
    cmd.env("INDEXCALC_CATALOG_DIR", dir.path())
        .args(["verify", "--all"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("FAIL  catalog fake signature"));
}
