use std::process::{Command, Output};

fn theta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta")).args(args).env_remove("THETA_MAX_WEIGHT").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = theta(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn golden_dual_class_table() {
    let o = theta(&["classes", "vn", "--max-weight", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("v3 = t3 - 4*t1*t2 + 3*t1^3"));
}

#[test]
fn golden_todd_of_theta() {
    assert_eq!(stdout(&theta(&["genus", "--name", "todd", "--of", "theta:7"])), "-1\n");
}

#[test]
fn golden_point_count() {
    assert_eq!(stdout(&theta(&["theta", "intersect", "--n", "2", "--k", "2"])), "6\n");
}

#[test]
fn envelope_shape_and_determinism() {
    let a = json(&["beta", "--max-weight", "4"]);
    assert_eq!(a["command"], "beta");
    assert_eq!(a["format_version"], "1.0.0");
    assert_eq!(a["params"]["max_weight"], 4);
    assert_eq!(a["payload"][1]["coeff"], "1/2*t1");
    let b = json(&["beta", "--max-weight", "4"]);
    assert_eq!(a, b);
}

#[test]
fn max_weight_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_theta"))
        .args(["--format", "json", "classes", "wn"])
        .env("THETA_MAX_WEIGHT", "2")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["payload"].as_array().unwrap().len(), 2);
    assert_eq!(v["payload"][1]["class"], "1/3*t2 - 1/4*t1^2");
}

#[test]
fn landweber_novikov_and_quantisation() {
    assert_eq!(stdout(&theta(&["ln", "apply", "--partition", "2", "--expr", "-t4 + 5*t1*t3 - 15*t1^2*t2 + 10/3*t2^2 + 15/2*t1^4"])), "-20*t2\n");
    let q = theta(&["quantize", "--expr", "t1", "--roundtrip"]);
    assert!(q.status.success());
    assert!(stdout(&q).starts_with("t1⊗1 + 1⊗t'1\n"));
    assert!(stdout(&theta(&["ln", "commutator", "--n", "3"])).contains("[S1,S2](a3) = -1"));
}

#[test]
fn genus_from_file_and_polynomial() {
    let dir = std::env::temp_dir().join(format!("theta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let q = dir.join("q.json");
    std::fs::write(&q, r#"{"coeffs": ["1", "1"]}"#).unwrap();
    let name = format!("file:{}", q.display());
    assert_eq!(stdout(&theta(&["genus", "--name", &name, "--of", "theta:2"])), "6\n");
    assert_eq!(stdout(&theta(&["genus", "--name", "euler", "--of", "poly:3/2*t1^2 - 1/2*t2"])), "3\n");
    assert_eq!(stdout(&theta(&["genus", "--name", "l", "--of", "theta:2"])), "-2\n");
}

#[test]
fn invariants_and_congruences() {
    let v = json(&["invariants", "--n", "2"]);
    assert_eq!(v["payload"]["betti"][2], "16");
    assert_eq!(v["payload"]["signature"], "-2");
    let c = json(&["congruences", "--n", "2"]);
    assert_eq!(c["payload"]["elementary_divisors"], serde_json::json!(["1", "12"]));

    let dir = std::env::temp_dir().join(format!("theta-cong-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"values": {"2": "6", "1,1": "6"}}"#).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"values": {"2": "0", "1,1": "1"}}"#).unwrap();
    let g = json(&["congruences", "--n", "2", "--check", good.to_str().unwrap()]);
    assert_eq!(g["payload"]["pass"], true);
    assert_eq!(g["payload"]["todd"], "1");
    let b = json(&["congruences", "--n", "2", "--check", bad.to_str().unwrap()]);
    assert_eq!(b["payload"]["pass"], false);
    assert_eq!(b["payload"]["failing"][0]["mu"], "");
}

#[test]
fn fgl_residuals_are_zero() {
    let v = json(&["fgl", "check", "--order", "6"]);
    for k in ["unit", "symmetry", "associativity", "exp_identity"] {
        assert_eq!(v["payload"][k], 0, "{k}");
    }
}

#[test]
fn weierstrass_exit_codes() {
    let ok = theta(&["weierstrass", "verify", "--lemniscatic"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&["weierstrass", "verify", "--omega1", "1", "--omega2", "i"]);
    assert_eq!(v["payload"]["pass"], true);
    assert!(v["payload"]["residuals"]["eta1"].as_f64().unwrap() < 1e-9);
    let strict = theta(&["weierstrass", "verify", "--omega1", "0.7+0.2i", "--omega2", "-0.4+1.3i", "--tol", "1e-30"]);
    assert_eq!(strict.status.code(), Some(3));
    let degenerate = theta(&["weierstrass", "verify", "--omega1", "1", "--omega2", "2"]);
    assert_eq!(degenerate.status.code(), Some(2));
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        vec!["theta", "intersect", "--n", "2", "--k", "3"],
        vec!["ln", "apply", "--partition", "0", "--expr", "t1"],
        vec!["ln", "apply", "--partition", "1", "--expr", "t1 +"],
        vec!["genus", "--name", "elliptic", "--of", "theta:2"],
        vec!["genus", "--of", "curve:2"],
        vec!["beta", "--max-weight", "0"],
        vec!["classes", "xn"],
    ] {
        let o = theta(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn selftest_prints_each_criterion() {
    let o = theta(&["selftest"]);
    let out = stdout(&o);
    for id in 1..=9 {
        assert!(out.contains(&format!("criterion {id} ")), "{out}");
    }
    assert!(out.contains("criterion 3 [Landweber-Novikov] FAIL"));
    assert_eq!(o.status.code(), Some(0));
}
