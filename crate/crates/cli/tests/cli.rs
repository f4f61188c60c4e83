use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn lgcy(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lgcy")).args(args).current_dir(root()).env_remove("LGCY_PRECISION").output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

/// The report with the run-dependent section removed.
fn stable(text: &str) -> String {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("run");
    serde_json::to_string_pretty(&v).unwrap() + "\n"
}

fn golden(name: &str, model: &str) {
    let (code, out, err) = lgcy(&["check", "all", "--model", model, "--l-range", "-1..1", "--order", "4"]);
    assert_eq!(code, 0, "{err}");
    let got = stable(&out);
    let path = root().join("golden").join(name);
    if std::env::var_os("LGCY_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}; rerun with LGCY_UPDATE_GOLDEN=1", path.display()));
    assert_eq!(got, want, "report drifted from {}", path.display());
}

#[test]
fn golden_m1() {
    golden("m1_check_all.json", "models/m1.toml");
}

#[test]
fn golden_m2() {
    golden("m2_check_all.json", "models/m2.toml");
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "all", "--model", "models/m3.toml", "--l-range", "0..1", "--order", "3", "--jobs", "2"];
    let (c1, a, _) = lgcy(&args);
    let (c2, b, _) = lgcy(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(stable(&a), stable(&b));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert!(v["run"]["timestamp_unix"].as_u64().unwrap() > 0);
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir();
    let bad = dir.join("lgcy_bad_generator.toml");
    std::fs::write(&bad, "weights = [1,1,1,1,1]\ndegree = 5\n\n[group]\ngenerators = [[0,1,9,0,0]]\n").unwrap();
    let (code, _, err) = lgcy(&["model", "info", "--model", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains(":5:"), "{err}");
    assert_eq!(lgcy(&["check", "nonsense"]).0, 2);
    assert_eq!(lgcy(&["check", "delta", "--l-range", "3..1"]).0, 2);
    assert_eq!(lgcy(&["frobnicate"]).0, 2);
    let (code, out, _) = lgcy(&["check", "delta"]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["passed"], true);
}

#[test]
fn non_cy_model_skips_cy_checks() {
    let dir = std::env::temp_dir();
    let f = dir.join("lgcy_cubic_in_p4.toml");
    std::fs::write(&f, "weights = [1,1,1,1]\ndegree = 3\n").unwrap();
    let (code, out, err) = lgcy(&["check", "lgcy", "--model", f.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"][0]["status"], "skipped");
}

#[test]
fn ifunction_export_and_precision_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_lgcy"))
        .args(["compute", "ifunction", "--side", "minus", "--order", "4"])
        .current_dir(root())
        .env("LGCY_PRECISION", "30")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 4);
    let first = &v["terms"][0];
    assert_eq!(first["coefficient"][0], "1 lambda^0 H^0 z^1");
    let (code, out, _) = lgcy(&["compute", "state-space", "--space", "FJRW"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["FJRW"].as_array().unwrap().len(), 4);
}
