use std::process::{Command, Output};

fn qplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qplane")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qplane(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn normalize_uses_the_plane_relation() {
    assert_eq!(stdout(&["normalize", "-n", "0", "-e", "y*x"]), "q*x*y");
    assert_eq!(stdout(&["normalize", "-n", "1", "-e", "y'x - q x y'"]), "0");
    assert_eq!(stdout(&["normalize", "--glq2", "-e", "a*d - q^-1*b*c"]), "a*d - q^-1*b*c");
}

#[test]
fn mul_with_oracle() {
    assert_eq!(stdout(&["mul", "-n", "0", "-e", "x+y", "-e", "x+y", "--oracle"]), "x^2 + (q+1)*x*y + y^2");
}

#[test]
fn delta_support_size_reduce() {
    assert_eq!(stdout(&["delta", "-n", "0", "-e", "x*y"]), "x*y' + x'*y");
    assert_eq!(stdout(&["delta", "-n", "0", "-e", "x", "--times", "3"]), "x^(3)");
    assert_eq!(stdout(&["support", "-n", "0", "-e", "x^2 + y"]), "{(0, 1), (2, 0)}");
    assert_eq!(stdout(&["size", "-n", "0", "-e", "x^2 + y"]), "2");
    assert_eq!(stdout(&["reduce", "-n", "0", "-e", "x^2 + y", "--axis", "y", "--exp", "2"]), "-(q^2-1)*y^2");
}

#[test]
fn order_overflow_is_an_error() {
    let out = qplane(&["normalize", "-n", "2", "-e", "x^(3)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("jet order 3 exceeds"));
}

#[test]
fn json_schema() {
    let text = stdout(&["--json", "normalize", "-n", "0", "-e", "y*x"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["order"], 0);
    let term = &v["terms"][0];
    assert_eq!(term["coeff"]["num"], serde_json::json!(["0", "1"]));
    assert_eq!(term["coeff"]["den"], serde_json::json!(["1"]));
    assert_eq!(term["ex"], serde_json::json!([1]));
    assert_eq!(term["ey"], serde_json::json!([1]));
}

#[test]
fn ideal_commands() {
    let dir = std::env::temp_dir().join(format!("qplane-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let stable = dir.join("chain.txt");
    std::fs::write(&stable, "# prolongation chain\norder: 2\nx*y' - x'*y\nx*y'' - x''*y\n").unwrap();
    let withheld = dir.join("withheld.txt");
    std::fs::write(&withheld, "order: 2\nx*y' - x'*y\n").unwrap();
    let s = stable.to_str().unwrap();

    assert_eq!(stdout(&["deltastable", "--ideal", s]), "true");
    assert!(stdout(&["deltastable", "--ideal", withheld.to_str().unwrap()]).starts_with("false"));
    let member = stdout(&["--json", "member", "-n", "2", "-e", "q^3*x*y' - q^3*x'*y", "--ideal", s]);
    let v: serde_json::Value = serde_json::from_str(&member).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["certificate"], serde_json::json!([["q^3", 0]]));
    assert_eq!(stdout(&["member", "-n", "2", "-e", "x", "--ideal", s]), "false");

    let out = Command::new(env!("CARGO_BIN_EXE_qplane"))
        .env("QPLANE_GROEBNER_BUDGET", "0")
        .args(["member", "-n", "2", "-e", "x", "--ideal", s])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget exhausted"));

    let trace = dir.join("trace.json");
    let text = stdout(&[
        "extract", "-n", "0", "-e", "x^2 + x*y + y", "--target", "2,0", "--trace", trace.to_str().unwrap(),
    ]);
    assert!(text.contains("x^2*y^2"));
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(t["steps"].as_array().unwrap().len(), 2);
    assert_eq!(t["steps"][0]["axis"], "Y-left");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_reports_failures_through_exit_status() {
    assert!(stdout(&["verify", "qbinom", "--max", "10"]).contains("10/10 pass"));
    let out = qplane(&["verify", "primality", "-n", "0", "-e", "x*y", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(1));
}
