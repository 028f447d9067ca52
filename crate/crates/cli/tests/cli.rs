use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kp-content")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn triangulation_table() {
    assert_eq!(stdout(&["triangulations", "--n-max", "2"]), "n\tg\tF\n1\t0\t4\n1\t1\t1\n2\t0\t32\n2\t1\t28\n");
    assert_eq!(stdout(&["triangulations", "--n-max", "3", "--genus", "1"]).lines().count(), 4);
}

#[test]
fn single_cover() {
    assert_eq!(stdout(&["hurwitz", "--alpha", "1", "--beta", "1", "--genus", "0"]), "1\n");
    assert_eq!(stdout(&["--method", "characters", "hurwitz", "--alpha", "1", "--beta", "1", "--genus", "0"]), "1\n");
}

#[test]
fn content_family_residual() {
    let args = ["kp-residual", "--family", "content", "--y-mode", "m-hypermap:1", "--cap", "8", "--eq", "1"];
    assert_eq!(stdout(&args), "residual: 0\n");
}

#[test]
fn perturbed_family_has_nonzero_residual() {
    let out = stdout(&["kp-residual", "--y-mode", "constant:2", "--perturb", "2,1:1", "--cap", "6"]);
    assert_ne!(out, "residual: 0\n");
    let violations = stdout(&["--format", "json", "plucker-check", "--y-mode", "constant:2", "--perturb", "2,1:1", "--cap", "3"]);
    assert_ne!(violations.trim(), "[]");
}

#[test]
fn json_values_are_strings() {
    let out = stdout(&["--format", "json", "mhypermap", "--alpha", "2", "--beta", "2", "--genus", "0", "--m", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["value"].is_string());
}

#[test]
fn errors_are_structured() {
    let out = run(&["hurwitz", "--alpha", "2", "--beta", "1"]);
    assert!(!out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "weight_mismatch");

    let out = run(&["hurwitz", "--alpha", "x"]);
    assert!(!out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "usage");

    assert!(!run(&["--workers", "0", "triangulations"]).status.success());
    assert!(run(&["--help"]).status.success());
}

#[test]
fn brute_force_bound_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kp-content"))
        .args(["count", "--alpha", "2,1", "--beta", "3", "--a", "1,1"])
        .env("KPC_BRUTE_FORCE_BOUND", "2")
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn output_does_not_depend_on_workers() {
    let one = stdout(&["--workers", "1", "triangulations", "--n-max", "12"]);
    let four = stdout(&["--workers", "4", "triangulations", "--n-max", "12"]);
    assert_eq!(one, four);
    let one = stdout(&["--workers", "1", "verify", "cubeconst", "--z-cap", "4"]);
    let three = stdout(&["--workers", "3", "verify", "cubeconst", "--z-cap", "4"]);
    assert_eq!(one, three);
}
